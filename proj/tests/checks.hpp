#pragma once

// Library-level checks shared by the unit tests and the acceptance binary.
// Expected values come from the closed forms in oracles.hpp.

#include <algorithm>
#include <cmath>
#include <string>

#include "lieclass/lieclass.hpp"
#include "oracles.hpp"

namespace checks {

using lieclass::FrameField;
using lieclass::Mat;
using lieclass::Vec;

struct Defect {
  double residual = 0;   // max |lhs - rhs| over the lattice
  double magnitude = 1;  // max(1, |xi|) max(1, |eta|) over the lattice
};

/// Bracket defect of the section map xi -> (xi, Gamma xi):
///   Gamma[xi, eta] - [Gamma xi, Gamma eta] = R_{ab,j}^i X^a Y^b
/// with Gamma~ and R2 (hat = false) or Gamma^ and R1 (hat = true), the
/// right-hand side taken from the closed-form connection.
inline Defect bracket_defect(const FrameField& frame, const oracle::AnalyticFrame& exact, const oracle::PolyField& f,
                             const oracle::PolyField& g, bool hat, std::size_t per_axis = 3) {
  using namespace lieclass;
  const VectorField xi = [f](const Vec& x) { return f(x); };
  const VectorField eta = [g](const Vec& x) { return g(x); };
  auto lift = [&](VectorField v) { return hat ? gamma_hat(frame, std::move(v)) : gamma_tilde(frame, std::move(v)); };
  const J1TSection lhs_a = lift(vector_bracket(frame.chart, xi, eta));
  const J1TSection lhs_b = spencer_bracket(lift(xi), lift(eta));
  const std::size_t n = frame.chart.dim();
  Defect d;
  for (const auto& p : frame.chart.lattice(per_axis)) {
    const Mat lhs = lhs_a.matrix_part(p) - lhs_b.matrix_part(p);
    const Vec u = f(p), v = g(p);
    Mat rhs = Mat::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            const double r = hat ? oracle::r1(exact, p, a, b, j, i) : oracle::r2(exact, p, a, b, j, i);
            rhs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +=
                r * u[static_cast<Eigen::Index>(a)] * v[static_cast<Eigen::Index>(b)];
          }
    d.residual = std::max(d.residual, (lhs - rhs).cwiseAbs().maxCoeff());
    d.magnitude = std::max(d.magnitude, std::max(1.0, u.cwiseAbs().maxCoeff()) * std::max(1.0, v.cwiseAbs().maxCoeff()));
  }
  return d;
}

/// 10 h^2 scale, the "approximately zero" threshold for first-order FD
/// quantities, widened by the magnitude of the arguments.
inline double fd_tolerance(const FrameField& frame, double magnitude = 1) {
  const double h = frame.chart.step();
  return 10 * h * h * lieclass::magnitude_scale(frame) * magnitude;
}

}  // namespace checks
