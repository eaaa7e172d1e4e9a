#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lieclass/error.hpp"
#include "lieclass/exact_matrix.hpp"
#include "lieclass/rational.hpp"

namespace lieclass {

/// c_{ij}^k with 1-based indices and i < j.
struct StructureConstant {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Rational value;

  friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c_{ij}^k e_k. Only the i < j half is supplied; the rest
/// follows from antisymmetry, so antisymmetry holds by construction. The
/// Jacobi identity is not enforced here (see validate()).
class LieAlgebra {
 public:
  LieAlgebra(std::size_t dim, const std::vector<StructureConstant>& constants,
             std::vector<std::string> names = {})
      : dim_(dim), names_(std::move(names)), table_(dim * dim * dim) {
    if (dim_ == 0) throw OutOfRange("a Lie algebra needs dimension >= 1");
    if (names_.empty())
      for (std::size_t i = 1; i <= dim_; ++i) names_.push_back("e" + std::to_string(i));
    if (names_.size() != dim_)
      throw DimensionMismatch("expected " + std::to_string(dim_) + " basis names, got " +
                              std::to_string(names_.size()));
    std::vector<bool> seen(table_.size(), false);
    for (const auto& sc : constants) {
      if (sc.i < 1 || sc.j > dim_ || sc.k < 1 || sc.k > dim_ || sc.i >= sc.j)
        throw OutOfRange("structure constant (" + std::to_string(sc.i) + "," +
                         std::to_string(sc.j) + "," + std::to_string(sc.k) +
                         ") must satisfy 1 <= i < j <= n and 1 <= k <= n");
      const auto idx = offset(sc.i, sc.j, sc.k);
      if (seen[idx])
        throw OutOfRange("structure constant (" + std::to_string(sc.i) + "," +
                         std::to_string(sc.j) + "," + std::to_string(sc.k) +
                         ") given twice");
      seen[idx] = true;
      table_[idx] = sc.value;
      table_[offset(sc.j, sc.i, sc.k)] = -sc.value;
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i - 1); }

  /// c_{ij}^k, 1-based, any i, j.
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[offset(i, j, k)];
  }

  /// The nonzero constants with i < j in (i, j, k) lexicographic order.
  std::vector<StructureConstant> constants() const {
    std::vector<StructureConstant> out;
    for (std::size_t i = 1; i <= dim_; ++i)
      for (std::size_t j = i + 1; j <= dim_; ++j)
        for (std::size_t k = 1; k <= dim_; ++k)
          if (c(i, j, k) != 0) out.push_back({i, j, k, c(i, j, k)});
    return out;
  }

  /// Math equality; basis labels are decorative and ignored.
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  std::size_t offset(std::size_t i, std::size_t j, std::size_t k) const {
    return ((i - 1) * dim_ + (j - 1)) * dim_ + (k - 1);
  }

  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<Rational> table_;
};

/// One failed Jacobi identity: the coefficient of e_m in
/// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] for i < j < k.
struct JacobiViolation {
  std::size_t i, j, k, m;
  Rational value;
};

struct ValidationReport {
  bool ok = true;
  std::vector<JacobiViolation> violations;
};

inline ValidationReport validate(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  ValidationReport report;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= n; ++k)
        for (std::size_t m = 1; m <= n; ++m) {
          Rational s = 0;
          for (std::size_t a = 1; a <= n; ++a)
            s += alg.c(i, j, a) * alg.c(a, k, m) + alg.c(j, k, a) * alg.c(a, i, m) +
                 alg.c(k, i, a) * alg.c(a, j, m);
          if (s != 0) report.violations.push_back({i, j, k, m, s});
        }
  report.ok = report.violations.empty();
  return report;
}

namespace detail {
inline void check_length(const LieAlgebra& alg, const QVector& v) {
  if (v.size() != alg.dim())
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                            " in a Lie algebra of dimension " + std::to_string(alg.dim()));
}
}  // namespace detail

/// [x, y]^k = sum_{i,j} x^i y^j c_{ij}^k.
inline QVector bracket(const LieAlgebra& alg, const QVector& x, const QVector& y) {
  detail::check_length(alg, x);
  detail::check_length(alg, y);
  const std::size_t n = alg.dim();
  QVector out = zero_vector(n);
  for (std::size_t i = 1; i <= n; ++i) {
    if (x[i - 1] == 0) continue;
    for (std::size_t j = 1; j <= n; ++j) {
      if (y[j - 1] == 0 || i == j) continue;
      const Rational xy = x[i - 1] * y[j - 1];
      for (std::size_t k = 1; k <= n; ++k)
        if (alg.c(i, j, k) != 0) out[k - 1] += xy * alg.c(i, j, k);
    }
  }
  return out;
}

/// ad(x) as a matrix: column j is [x, e_j].
inline QMatrix ad(const LieAlgebra& alg, const QVector& x) {
  detail::check_length(alg, x);
  const std::size_t n = alg.dim();
  QMatrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    if (x[i - 1] == 0) continue;
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k)
        if (alg.c(i, j, k) != 0) m(k - 1, j - 1) += x[i - 1] * alg.c(i, j, k);
  }
  return m;
}

/// ad(e_1), ..., ad(e_n).
inline std::vector<QMatrix> basis_ad(const LieAlgebra& alg) {
  std::vector<QMatrix> out;
  out.reserve(alg.dim());
  for (std::size_t i = 1; i <= alg.dim(); ++i) out.push_back(ad(alg, basis_vector(alg.dim(), i)));
  return out;
}

/// Gram matrix of the Killing form kappa(x, y) = tr(ad x . ad y).
inline QMatrix killing(const LieAlgebra& alg) {
  const auto ads = basis_ad(alg);
  const std::size_t n = alg.dim();
  QMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational t = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t += ads[i](a, b) * ads[j](b, a);
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

/// kappa(x, y) from the Gram matrix.
inline Rational killing_value(const QMatrix& gram, const QVector& x, const QVector& y) {
  Rational s = 0;
  const QVector gy = gram.apply(y);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * gy[i];
  return s;
}

/// Dimensions of the derived series g, [g,g], [[g,g],[g,g]], ... until it stabilizes.
inline std::vector<std::size_t> derived_series_dims(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<QVector> current;
  for (std::size_t i = 1; i <= n; ++i) current.push_back(basis_vector(n, i));
  std::vector<std::size_t> dims{n};
  while (!current.empty()) {
    std::vector<QVector> brackets;
    for (std::size_t a = 0; a < current.size(); ++a)
      for (std::size_t b = a + 1; b < current.size(); ++b) {
        auto v = bracket(alg, current[a], current[b]);
        if (!is_zero(v)) brackets.push_back(std::move(v));
      }
    auto next = span_basis(brackets, n);
    if (next.size() == current.size()) break;
    dims.push_back(next.size());
    current = std::move(next);
  }
  return dims;
}

/// Dimensions of the lower central series g, [g,g], [g,[g,g]], ...
inline std::vector<std::size_t> lower_central_series_dims(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<QVector> current;
  for (std::size_t i = 1; i <= n; ++i) current.push_back(basis_vector(n, i));
  std::vector<std::size_t> dims{n};
  while (!current.empty()) {
    std::vector<QVector> brackets;
    for (std::size_t i = 1; i <= n; ++i)
      for (const auto& u : current) {
        auto v = bracket(alg, basis_vector(n, i), u);
        if (!is_zero(v)) brackets.push_back(std::move(v));
      }
    auto next = span_basis(brackets, n);
    if (next.size() == current.size()) break;
    dims.push_back(next.size());
    current = std::move(next);
  }
  return dims;
}

inline bool is_solvable(const LieAlgebra& alg) { return derived_series_dims(alg).back() == 0; }

inline bool is_nilpotent(const LieAlgebra& alg) {
  return lower_central_series_dims(alg).back() == 0;
}

/// Cartan's criterion: the Killing form is nondegenerate.
inline bool is_semisimple(const LieAlgebra& alg) { return determinant(killing(alg)) != 0; }

/// tr ad(e_i) = 0 for every basis element.
inline bool is_unimodular(const LieAlgebra& alg) {
  for (const auto& m : basis_ad(alg))
    if (m.trace() != 0) return false;
  return true;
}

}  // namespace lieclass
