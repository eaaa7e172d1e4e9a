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

/// Sorted 1-based index set {i_1 < ... < i_k}.
using IndexSet = std::vector<std::size_t>;

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// The lexicographically ordered k-subsets of {1..n}: the basis of the degree-k
/// cochain space.
class SubsetIndex {
 public:
  SubsetIndex(std::size_t n, std::size_t k) : n_(n), k_(k) {
    if (k > n) return;
    IndexSet s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = i + 1;
    while (true) {
      subsets_.push_back(s);
      std::size_t pos = k;
      while (pos > 0 && s[pos - 1] == n - k + pos) --pos;
      if (pos == 0) break;
      ++s[pos - 1];
      for (std::size_t i = pos; i < k; ++i) s[i] = s[i - 1] + 1;
    }
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t degree() const noexcept { return k_; }
  std::size_t size() const noexcept { return subsets_.size(); }
  const IndexSet& operator[](std::size_t idx) const { return subsets_[idx]; }
  const std::vector<IndexSet>& subsets() const noexcept { return subsets_; }

  /// Lexicographic rank of a sorted subset.
  std::size_t index_of(const IndexSet& s) const {
    if (s.size() != k_) throw DimensionMismatch("subset size does not match degree");
    std::size_t rank = 0;
    std::size_t prev = 0;
    for (std::size_t i = 0; i < k_; ++i) {
      if (s[i] <= prev || s[i] > n_) throw OutOfRange("subset is not strictly increasing in 1..n");
      for (std::size_t t = prev + 1; t < s[i]; ++t) rank += binomial(n_ - t, k_ - i - 1);
      prev = s[i];
    }
    return rank;
  }

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<IndexSet> subsets_;
};

/// Sorts `indices` in place and returns the sign of the sorting permutation,
/// or 0 if an index repeats.
inline int sort_with_sign(IndexSet& indices) {
  int sign = 1;
  for (std::size_t i = 1; i < indices.size(); ++i)
    for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
      if (indices[j - 1] == indices[j]) return 0;
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < indices.size(); ++i)
    if (indices[i - 1] == indices[i]) return 0;
  return sign;
}

/// Alternating k-linear form on an n-dimensional space, stored by its
/// components on the lexicographic basis k-subsets.
class AlternatingForm {
 public:
  AlternatingForm(std::size_t dim, std::size_t degree)
      : dim_(dim), degree_(degree), components_(zero_vector(binomial(dim, degree))) {
    if (degree > dim) throw OutOfRange("form degree exceeds the dimension");
  }

  AlternatingForm(std::size_t dim, std::size_t degree, QVector components)
      : dim_(dim), degree_(degree), components_(std::move(components)) {
    if (degree > dim) throw OutOfRange("form degree exceeds the dimension");
    if (components_.size() != binomial(dim, degree))
      throw DimensionMismatch("component count does not match C(n, k)");
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t degree() const noexcept { return degree_; }
  const QVector& components() const noexcept { return components_; }
  QVector& components() noexcept { return components_; }
  SubsetIndex index() const { return SubsetIndex(dim_, degree_); }

  const Rational& component(const IndexSet& sorted) const {
    return components_[index().index_of(sorted)];
  }
  void set_component(const IndexSet& sorted, Rational value) {
    components_[index().index_of(sorted)] = std::move(value);
  }

  /// Value on basis vectors e_{i_1}, ..., e_{i_k} (any order, 1-based).
  Rational on_basis(IndexSet indices) const {
    if (indices.size() != degree_) throw DimensionMismatch("wrong number of arguments");
    for (auto i : indices)
      if (i < 1 || i > dim_) throw OutOfRange("basis index out of range");
    const int sign = sort_with_sign(indices);
    if (sign == 0) return Rational(0);
    const Rational& c = component(indices);
    return sign > 0 ? c : Rational(-c);
  }

  /// Multilinear expansion: sum over subsets S of c_S * det(v_j^{s_i}).
  Rational evaluate(const std::vector<QVector>& args) const {
    if (args.size() != degree_) throw DimensionMismatch("wrong number of arguments");
    for (const auto& v : args)
      if (v.size() != dim_) throw DimensionMismatch("argument length does not match dimension");
    if (degree_ == 0) return components_[0];
    const SubsetIndex idx = index();
    Rational total = 0;
    for (std::size_t s = 0; s < idx.size(); ++s) {
      if (components_[s] == 0) continue;
      QMatrix minor(degree_, degree_);
      for (std::size_t r = 0; r < degree_; ++r)
        for (std::size_t c = 0; c < degree_; ++c) minor(r, c) = args[c][idx[s][r] - 1];
      total += components_[s] * determinant(minor);
    }
    return total;
  }

  bool is_zero() const { return lieclass::is_zero(components_); }

  friend bool operator==(const AlternatingForm&, const AlternatingForm&) = default;

 private:
  std::size_t dim_;
  std::size_t degree_;
  QVector components_;
};

}  // namespace lieclass
