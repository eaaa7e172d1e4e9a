#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "lieclass/chart.hpp"
#include "lieclass/error.hpp"
#include "lieclass/lie_algebra.hpp"
#include "lieclass/local_group.hpp"
#include "lieclass/splitting.hpp"

namespace lieclass {

enum class EntryKind { algebra, frame, multiplication };

inline std::string to_string(EntryKind k) {
  switch (k) {
    case EntryKind::algebra:
      return "algebra";
    case EntryKind::frame:
      return "frame";
    case EntryKind::multiplication:
      return "multiplication";
  }
  return "unknown";
}

struct CatalogEntry {
  std::string name;
  EntryKind kind;
  std::variant<LieAlgebra, FrameField, LocalGroupMultiplication> payload;
  std::string provenance;

  const LieAlgebra& algebra() const { return std::get<LieAlgebra>(payload); }
  const FrameField& frame() const { return std::get<FrameField>(payload); }
  const LocalGroupMultiplication& multiplication() const {
    return std::get<LocalGroupMultiplication>(payload);
  }
};

namespace catalog {

inline constexpr std::size_t kMaxAbelianAlgebra = 6;
inline constexpr std::size_t kMaxIdentityFrame = 4;

inline Vec vec(std::initializer_list<double> v) {
  Vec out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

inline Chart cube(std::size_t n, double lo, double hi) {
  return Chart(Vec::Constant(static_cast<Eigen::Index>(n), lo), Vec::Constant(static_cast<Eigen::Index>(n), hi));
}

inline LieAlgebra abelian(std::size_t n) { return LieAlgebra(n, {}); }

inline LieAlgebra heisenberg3() { return LieAlgebra(3, {{1, 2, 3, 1}}, {"x", "y", "z"}); }

inline LieAlgebra affine1() { return LieAlgebra(2, {{1, 2, 2, 1}}); }

inline LieAlgebra borel_sl2() { return LieAlgebra(2, {{1, 2, 2, 2}}, {"h", "x"}); }

/// Basis (X, H, Y) with [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H.
inline LieAlgebra sl2() {
  return LieAlgebra(3, {{1, 2, 1, -2}, {1, 3, 2, 1}, {2, 3, 3, -2}}, {"X", "H", "Y"});
}

/// Basis (A, B, C) with [A,C] = B, [B,A] = C, [C,B] = A.
inline LieAlgebra so3() {
  return LieAlgebra(3, {{1, 2, 3, -1}, {1, 3, 2, 1}, {2, 3, 1, -1}}, {"A", "B", "C"});
}

inline LieAlgebra sl2_plus_abelian2() {
  return LieAlgebra(5, {{1, 2, 1, -2}, {1, 3, 2, 1}, {2, 3, 3, -2}}, {"X", "H", "Y", "Z1", "Z2"});
}

inline FrameField identity_frame(std::size_t n) {
  return {cube(n, -1, 1), [](const Vec& x) -> Mat { return Mat::Identity(x.size(), x.size()); }};
}

/// A(x) = x1 I on the half-plane x1 > 0: the left frame of the affine group.
inline FrameField affine_halfplane() {
  return {Chart(vec({0.5, -1}), vec({2, 1})),
          [](const Vec& x) -> Mat { return x[0] * Mat::Identity(2, 2); }};
}

/// A(x) = [[1, 0], [sin x2, 1]]: invertible everywhere but not a group frame.
inline FrameField unipotent_sin() {
  return {Chart(vec({-1, -1.5}), vec({1, 1.5})), [](const Vec& x) -> Mat {
            Mat a = Mat::Identity(2, 2);
            a(1, 0) = std::sin(x[1]);
            return a;
          }};
}

/// A(a, b) = [[a, 0], [-b, a]]: the left frame of the Borel group below.
inline FrameField borel_frame() {
  return {Chart(vec({0.5, -1}), vec({2.5, 1})), [](const Vec& x) -> Mat {
            Mat a(2, 2);
            a << x[0], 0, -x[1], x[0];
            return a;
          }};
}

inline LocalGroupMultiplication abelian_group(std::size_t n) {
  return {cube(n, -1, 1), Vec::Zero(static_cast<Eigen::Index>(n)),
          [](const Vec& a, const Vec& b) -> Vec { return a + b; }};
}

/// (a, b)(c, d) = (ac, ad + b): the maps t -> a t + b composed.
inline LocalGroupMultiplication affine_group() {
  return {Chart(vec({0.5, -1}), vec({2, 1})), vec({1, 0}), [](const Vec& p, const Vec& q) -> Vec {
            return vec({p[0] * q[0], p[0] * q[1] + p[1]});
          }};
}

/// (a, b) ~ [[a, b], [0, 1/a]] in SL(2, R), so (a, b)(c, d) = (ac, ad + b/c).
/// The chart reaches a = 2 so that diag(2, 1/2) lies in it.
inline LocalGroupMultiplication borel_sl2_group() {
  return {Chart(vec({0.5, -1}), vec({2.5, 1})), vec({1, 0}), [](const Vec& p, const Vec& q) -> Vec {
            return vec({p[0] * q[0], p[0] * q[1] + p[1] / q[0]});
          }};
}

inline std::vector<std::string> list() {
  std::vector<std::string> names;
  for (std::size_t n = 1; n <= kMaxAbelianAlgebra; ++n) names.push_back("abelian(" + std::to_string(n) + ")");
  for (const char* s : {"heisenberg3", "affine1", "borel_sl2", "sl2", "so3", "sl2_plus_abelian2"})
    names.emplace_back(s);
  for (std::size_t n = 1; n <= kMaxIdentityFrame; ++n) names.push_back("identity(" + std::to_string(n) + ")");
  for (const char* s : {"affine_halfplane", "unipotent_sin", "borel_frame"}) names.emplace_back(s);
  for (std::size_t n = 1; n <= kMaxIdentityFrame; ++n)
    names.push_back("abelian_group(" + std::to_string(n) + ")");
  for (const char* s : {"affine_group", "borel_sl2_group"}) names.emplace_back(s);
  return names;
}

/// Names of entries of one kind, in list() order.
inline std::vector<std::string> list(EntryKind kind);

namespace detail {
// "base(n)" with 1 <= n <= cap, else 0.
inline std::size_t parse_indexed(const std::string& name, const std::string& base, std::size_t cap) {
  if (name.size() < base.size() + 3 || name.compare(0, base.size() + 1, base + "(") != 0 || name.back() != ')')
    return 0;
  const std::string digits = name.substr(base.size() + 1, name.size() - base.size() - 2);
  if (digits.empty() || digits.size() > 2 || digits.find_first_not_of("0123456789") != std::string::npos) return 0;
  const auto n = static_cast<std::size_t>(std::stoul(digits));
  return (n >= 1 && n <= cap && std::to_string(n) == digits) ? n : 0;
}
}  // namespace detail

inline CatalogEntry get(const std::string& name) {
  using K = EntryKind;
  if (auto n = detail::parse_indexed(name, "abelian", kMaxAbelianAlgebra))
    return {name, K::algebra, abelian(n), "zero bracket"};
  if (auto n = detail::parse_indexed(name, "identity", kMaxIdentityFrame))
    return {name, K::frame, identity_frame(n), "A = I on [-1,1]^n; flat, Gamma = 0"};
  if (auto n = detail::parse_indexed(name, "abelian_group", kMaxIdentityFrame))
    return {name, K::multiplication, abelian_group(n), "m(a,b) = a + b, e = 0"};
  if (name == "heisenberg3") return {name, K::algebra, heisenberg3(), "[x,y] = z"};
  if (name == "affine1") return {name, K::algebra, affine1(), "[e1,e2] = e2"};
  if (name == "borel_sl2") return {name, K::algebra, borel_sl2(), "upper-triangular part of sl(2): [h,x] = 2x"};
  if (name == "sl2") return {name, K::algebra, sl2(), "basis (X,H,Y): [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H"};
  if (name == "so3") return {name, K::algebra, so3(), "basis (A,B,C): [A,C] = B, [B,A] = C, [C,B] = A"};
  if (name == "sl2_plus_abelian2")
    return {name, K::algebra, sl2_plus_abelian2(), "sl(2) plus a 2-dimensional center"};
  if (name == "affine_halfplane")
    return {name, K::frame, affine_halfplane(), "A(x) = x1 I, x1 in [0.5,2]; left frame of the affine group"};
  if (name == "unipotent_sin")
    return {name, K::frame, unipotent_sin(), "A(x) = [[1,0],[sin x2,1]]; R2 = sin x2, not a group frame"};
  if (name == "borel_frame")
    return {name, K::frame, borel_frame(), "A(a,b) = [[a,0],[-b,a]]; left frame of the Borel group"};
  if (name == "affine_group")
    return {name, K::multiplication, affine_group(), "(a,b)(c,d) = (ac, ad+b), e = (1,0)"};
  if (name == "borel_sl2_group")
    return {name, K::multiplication, borel_sl2_group(),
            "[[a,b],[0,1/a]] products: (a,b)(c,d) = (ac, ad+b/c), e = (1,0)"};
  throw UnknownName("no catalog entry named '" + name + "'");
}

inline std::vector<std::string> list(EntryKind kind) {
  std::vector<std::string> out;
  for (const auto& n : list())
    if (get(n).kind == kind) out.push_back(n);
  return out;
}

}  // namespace catalog
}  // namespace lieclass
