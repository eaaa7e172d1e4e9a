#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lieclass/alternating_form.hpp"
#include "lieclass/error.hpp"
#include "lieclass/exact_matrix.hpp"
#include "lieclass/lie_algebra.hpp"
#include "lieclass/trace_forms.hpp"

namespace lieclass {

/// Largest dimension for which full Betti tables are computed.
inline constexpr std::size_t kMaxBettiDimension = 12;

/// Basis bookkeeping for the degree-k cochains: the lexicographic k-subsets.
using CochainSpaceIndex = SubsetIndex;

/// Matrix of d : C^k -> C^{k+1} with trivial coefficients, rows indexed by
/// (k+1)-subsets and columns by k-subsets:
///   (d lambda)(x_1..x_{k+1}) = sum_{i<j} (-1)^{i+j} lambda([x_i,x_j], x_1..^i..^j..x_{k+1}).
inline QMatrix differential_matrix(const LieAlgebra& alg, std::size_t k) {
  const std::size_t n = alg.dim();
  if (k > n) throw OutOfRange("cochain degree " + std::to_string(k) + " exceeds " + std::to_string(n));
  const CochainSpaceIndex source(n, k);
  const CochainSpaceIndex target(n, k + 1);
  QMatrix d(target.size(), source.size());
  for (std::size_t row = 0; row < target.size(); ++row) {
    const IndexSet& t = target[row];
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        IndexSet rest;
        for (std::size_t p = 0; p < t.size(); ++p)
          if (p != i && p != j) rest.push_back(t[p]);
        // positions are 1-based in the formula: (-1)^{(i+1)+(j+1)} = (-1)^{i+j}
        const int outer = ((i + j) % 2 == 0) ? 1 : -1;
        for (std::size_t m = 1; m <= n; ++m) {
          const Rational& c = alg.c(t[i], t[j], m);
          if (c == 0 || std::find(rest.begin(), rest.end(), m) != rest.end()) continue;
          // move e_m from the front into sorted position
          const auto smaller = static_cast<std::size_t>(
              std::count_if(rest.begin(), rest.end(), [m](std::size_t r) { return r < m; }));
          IndexSet s = rest;
          s.insert(s.begin() + static_cast<std::ptrdiff_t>(smaller), m);
          const int sign = (smaller % 2 == 0) ? outer : -outer;
          const std::size_t col = source.index_of(s);
          if (sign > 0)
            d(row, col) += c;
          else
            d(row, col) -= c;
        }
      }
  }
  return d;
}

/// b_k = C(n,k) - rank d_k - rank d_{k-1}.
inline std::size_t betti(const LieAlgebra& alg, std::size_t k) {
  const std::size_t n = alg.dim();
  if (k > n) throw OutOfRange("cochain degree " + std::to_string(k) + " exceeds " + std::to_string(n));
  const std::size_t out_rank = rank(differential_matrix(alg, k));
  const std::size_t in_rank = k == 0 ? 0 : rank(differential_matrix(alg, k - 1));
  return binomial(n, k) - out_rank - in_rank;
}

/// (b_0, ..., b_n), reusing each differential's rank once.
inline std::vector<std::size_t> betti_table(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  if (n > kMaxBettiDimension)
    throw OutOfRange("Betti tables are limited to dimension " + std::to_string(kMaxBettiDimension));
  std::vector<std::size_t> ranks(n + 1);
  for (std::size_t k = 0; k <= n; ++k) ranks[k] = rank(differential_matrix(alg, k));
  std::vector<std::size_t> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = binomial(n, k) - ranks[k] - (k ? ranks[k - 1] : 0);
  return out;
}

inline void check_form_on(const LieAlgebra& alg, const AlternatingForm& form) {
  if (form.dim() != alg.dim())
    throw DimensionMismatch("form on a " + std::to_string(form.dim()) +
                            "-dimensional space applied to a " + std::to_string(alg.dim()) +
                            "-dimensional algebra");
}

inline AlternatingForm ce_differential(const LieAlgebra& alg, const AlternatingForm& form) {
  check_form_on(alg, form);
  return AlternatingForm(alg.dim(), form.degree() + 1,
                         differential_matrix(alg, form.degree()).apply(form.components()));
}

inline bool is_closed(const LieAlgebra& alg, const AlternatingForm& form) {
  check_form_on(alg, form);
  if (form.degree() == alg.dim()) return true;
  return is_zero(differential_matrix(alg, form.degree()).apply(form.components()));
}

struct ExactnessResult {
  bool exact = false;
  /// A primitive mu with d mu = form. Absent for degree 0, where there is no
  /// lower degree and the only exact form is 0.
  std::optional<AlternatingForm> primitive;
};

inline ExactnessResult is_exact(const LieAlgebra& alg, const AlternatingForm& form) {
  if (!is_closed(alg, form)) throw NotClosed("exactness asked of a form that is not closed");
  if (form.degree() == 0) return {form.is_zero(), std::nullopt};
  const std::size_t k = form.degree() - 1;
  const auto x = solve(differential_matrix(alg, k), form.components());
  if (!x) return {false, std::nullopt};
  return {true, AlternatingForm(alg.dim(), k, *x)};
}

enum class ClassStatus { zero_form, exact, nonzero_class };

inline std::string to_string(ClassStatus s) {
  switch (s) {
    case ClassStatus::zero_form:
      return "zero_form";
    case ClassStatus::exact:
      return "exact";
    case ClassStatus::nonzero_class:
      return "nonzero_class";
  }
  return "unknown";
}

struct ClassEntry {
  std::size_t degree;
  ClassStatus status;
};

/// Status of [w_{2k+1}] for every odd degree up to min(max_degree, n, cap).
inline std::vector<ClassEntry> class_report(const LieAlgebra& alg,
                                            std::size_t max_degree = kMaxTraceFormDegree) {
  const std::size_t top = std::min({max_degree, alg.dim(), kMaxTraceFormDegree});
  std::vector<ClassEntry> out;
  for (std::size_t k = 1; k <= top; k += 2) {
    const AlternatingForm w = trace_form(alg, k);
    if (w.is_zero()) {
      out.push_back({k, ClassStatus::zero_form});
      continue;
    }
    // trace forms are always closed; is_exact throws otherwise
    out.push_back({k, is_exact(alg, w).exact ? ClassStatus::exact : ClassStatus::nonzero_class});
  }
  return out;
}

}  // namespace lieclass
