#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lieclass/alternating_form.hpp"
#include "lieclass/error.hpp"
#include "lieclass/exact_matrix.hpp"
#include "lieclass/lie_algebra.hpp"

namespace lieclass {

/// Largest k for which the k!-term permutation sum is attempted.
inline constexpr std::size_t kMaxTraceFormDegree = 7;

namespace detail {

inline Rational trace_of_product(const QMatrix& a, const QMatrix& b) {
  Rational t = 0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != 0 && b(c, r) != 0) t += a(r, c) * b(c, r);
  return t;
}

// Sum over orderings of `remaining` of sgn * tr(prefix * ad[...]). Picking the
// r-th smallest remaining index contributes r inversions.
inline void signed_trace_sum(const std::vector<QMatrix>& ads, std::vector<std::size_t>& remaining,
                             const QMatrix& prefix, int sign, Rational& acc) {
  if (remaining.size() == 1) {
    const Rational t = trace_of_product(prefix, ads[remaining[0] - 1]);
    if (sign > 0)
      acc += t;
    else
      acc -= t;
    return;
  }
  for (std::size_t r = 0; r < remaining.size(); ++r) {
    const std::size_t pick = remaining[r];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(r));
    signed_trace_sum(ads, remaining, prefix * ads[pick - 1], (r % 2 == 0) ? sign : -sign, acc);
    remaining.insert(remaining.begin() + static_cast<std::ptrdiff_t>(r), pick);
  }
}

}  // namespace detail

/// w_k(e_{i_1}, ..., e_{i_k}) = (1/k) sum_sigma sgn(sigma) tr(ad e_{i_sigma(1)} ... ad e_{i_sigma(k)}).
inline AlternatingForm trace_form(const LieAlgebra& alg, std::size_t k) {
  const std::size_t n = alg.dim();
  if (k < 1 || k > n)
    throw OutOfRange("trace form degree " + std::to_string(k) + " outside 1.." + std::to_string(n));
  if (k > kMaxTraceFormDegree)
    throw OutOfRange("trace form degree " + std::to_string(k) + " exceeds the permutation cap " +
                     std::to_string(kMaxTraceFormDegree));
  const auto ads = basis_ad(alg);
  AlternatingForm form(n, k);
  const SubsetIndex idx = form.index();
  for (std::size_t s = 0; s < idx.size(); ++s) {
    std::vector<std::size_t> remaining = idx[s];
    Rational acc = 0;
    detail::signed_trace_sum(ads, remaining, QMatrix::identity(n), 1, acc);
    form.components()[s] = acc / Rational(static_cast<long>(k));
  }
  return form;
}

/// w_1(x) = tr ad(x), the character of the adjoint representation.
inline AlternatingForm w1_character(const LieAlgebra& alg) {
  const auto ads = basis_ad(alg);
  QVector comps;
  comps.reserve(alg.dim());
  for (const auto& m : ads) comps.push_back(m.trace());
  return AlternatingForm(alg.dim(), 1, std::move(comps));
}

/// kappa(x, [y, z]), the Killing-form expression of w_3.
inline Rational w3_killing(const LieAlgebra& alg, const QVector& x, const QVector& y,
                           const QVector& z) {
  detail::check_length(alg, x);
  return killing_value(killing(alg), x, bracket(alg, y, z));
}

}  // namespace lieclass
