#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "lieclass/chart.hpp"
#include "lieclass/error.hpp"
#include "lieclass/splitting.hpp"

namespace lieclass {

using Multiplication = std::function<Vec(const Vec&, const Vec&)>;

/// A local multiplication m around the identity e.
struct LocalGroupMultiplication {
  Chart chart;
  Vec identity;
  Multiplication multiply;
};

/// max |m(e, x) - x|, |m(x, e) - x| over the lattice.
inline double identity_law_residual(const LocalGroupMultiplication& g, std::size_t per_axis = 5) {
  double worst = 0;
  for (const auto& x : g.chart.lattice(per_axis)) {
    worst = std::max(worst, (g.multiply(g.identity, x) - x).cwiseAbs().maxCoeff());
    worst = std::max(worst, (g.multiply(x, g.identity) - x).cwiseAbs().maxCoeff());
  }
  return worst;
}

/// d/dy m(a, y) at y = e: the 1-jet of the left translation by a.
inline Mat left_translation_jacobian(const LocalGroupMultiplication& g, const Vec& a, double h) {
  return jacobian([&](const Vec& y) { return g.multiply(a, y); }, g.identity, h);
}

/// d/dx m(x, a) at x = e: the 1-jet of the right translation by a.
inline Mat right_translation_jacobian(const LocalGroupMultiplication& g, const Vec& a, double h) {
  return jacobian([&](const Vec& x) { return g.multiply(x, a); }, g.identity, h);
}

namespace detail {
inline Mat ad_e_at(const LocalGroupMultiplication& g, const Vec& a, double h) {
  const Mat left = left_translation_jacobian(g, a, h);
  if (std::abs(left.determinant()) < 1e-12)
    throw SingularMatrix("left-translation Jacobian is singular");
  return left.inverse() * right_translation_jacobian(g, a, h);
}
}  // namespace detail

/// Ad_e(a) = (d_2 m(a, .)|_e)^{-1} (d_1 m(., a)|_e), the inverse convention x -> g^{-1} x g.
inline Mat ad_e(const LocalGroupMultiplication& g, const Vec& a) {
  if (!g.chart.contains(a)) throw OutOfRange("element outside the multiplication chart");
  return detail::ad_e_at(g, a, g.chart.step());
}

/// The frame A(x) = d_2 m(x, .)|_e, which generates the left-invariant splitting.
inline FrameField left_frame(const LocalGroupMultiplication& g) {
  const double h = g.chart.step();
  MatrixField a = [g, h](const Vec& x) -> Mat { return left_translation_jacobian(g, x, h); };
  return {g.chart, std::move(a)};
}

namespace detail {
inline double log_det_residual(const LocalGroupMultiplication& g, const std::vector<Vec>& points, double h) {
  const LocalGroupMultiplication at_h{g.chart.with_step(h), g.identity, g.multiply};
  const FrameField frame = left_frame(at_h);
  ScalarField log_det = [&at_h, h](const Vec& x) {
    return std::log(std::abs(ad_e_at(at_h, x, h).determinant()));
  };
  double worst = 0;
  for (const auto& x : points)
    worst = std::max(worst, (-gradient(log_det, x, h) - w_at(frame, x, h)).cwiseAbs().maxCoeff());
  return worst;
}
}  // namespace detail

/// max over the lattice of |-grad log det Ad_e - w|, w from the left frame.
inline double log_det_ad_residual(const LocalGroupMultiplication& g, std::size_t per_axis = 5) {
  return detail::log_det_residual(g, g.chart.lattice(per_axis), g.chart.step());
}

/// Convergence study of the same residual at h and h/2 on the coarse lattice.
inline ConvergenceStudy log_det_ad_primitive_check(const LocalGroupMultiplication& g,
                                                   std::size_t per_axis = 5) {
  const auto points = g.chart.lattice(per_axis);
  return convergence_study([&](double h) { return detail::log_det_residual(g, points, h); },
                           g.chart.step(), magnitude_scale(left_frame(g), per_axis));
}

/// Whether det Ad_e(d) = 1 for each element d (the automorphy test).
inline std::vector<bool> automorphy_check(const LocalGroupMultiplication& g, const std::vector<Vec>& elements,
                                          double tol = 1e-9) {
  std::vector<bool> out;
  for (const auto& d : elements) out.push_back(std::abs(ad_e(g, d).determinant() - 1) <= tol);
  return out;
}

/// The same test for elements given directly by their Ad matrices.
inline std::vector<bool> automorphy_check(const std::vector<Mat>& ad_matrices, double tol = 1e-9) {
  std::vector<bool> out;
  for (const auto& m : ad_matrices) out.push_back(std::abs(m.determinant() - 1) <= tol);
  return out;
}

}  // namespace lieclass
