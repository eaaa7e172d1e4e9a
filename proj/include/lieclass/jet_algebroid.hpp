#pragma once

#include "lieclass/chart.hpp"
#include "lieclass/error.hpp"

namespace lieclass {

/// A section (X^i(x), X^i_j(x)) of J1T over a chart. matrix_part(x)(i, j) = X^i_j.
struct J1TSection {
  Chart chart;
  VectorField vector_part;
  MatrixField matrix_part;
};

/// An algebroid 1-form (omega_i(x), omega^i_j(x)); matrix_part(x)(i, j) = omega^i_j.
struct Form1J1T {
  Chart chart;
  VectorField covector_part;
  MatrixField matrix_part;
};

/// [xi, eta]^i = xi^a d_a eta^i - eta^a d_a xi^i.
inline VectorField vector_bracket(const Chart& chart, VectorField xi, VectorField eta) {
  const double h = chart.step();
  return [xi = std::move(xi), eta = std::move(eta), h](const Vec& x) -> Vec {
    return jacobian(eta, x, h) * xi(x) - jacobian(xi, x, h) * eta(x);
  };
}

/// The Spencer bracket. Vector part is the ordinary bracket of the projections;
/// matrix part is
///   X^a_j Y^i_a - Y^a_j X^i_a + X^a d_a Y^i_j - Y^a d_a X^i_j.
inline J1TSection spencer_bracket(const J1TSection& a, const J1TSection& b) {
  require_same_chart(a.chart, b.chart);
  const double h = a.chart.step();
  MatrixField matrix = [a, b, h](const Vec& x) -> Mat {
    const Mat xa = a.matrix_part(x);
    const Mat yb = b.matrix_part(x);
    const Vec u = a.vector_part(x);
    const Vec v = b.vector_part(x);
    Mat out = yb * xa - xa * yb;
    for (Eigen::Index c = 0; c < x.size(); ++c) {
      const auto k = static_cast<std::size_t>(c);
      out += u[c] * partial(b.matrix_part, x, k, h) - v[c] * partial(a.matrix_part, x, k, h);
    }
    return out;
  };
  return {a.chart, vector_bracket(a.chart, a.vector_part, b.vector_part), std::move(matrix)};
}

/// j_1 xi = (xi, d xi / dx).
inline J1TSection prolong(const Chart& chart, VectorField xi) {
  const double h = chart.step();
  MatrixField jac = [xi, h](const Vec& x) -> Mat { return jacobian(xi, x, h); };
  return {chart, std::move(xi), std::move(jac)};
}

/// D(X)^i_j = d_j X^i - X^i_j.
inline MatrixField spencer_operator(const J1TSection& a) {
  const double h = a.chart.step();
  return [a, h](const Vec& x) -> Mat { return jacobian(a.vector_part, x, h) - a.matrix_part(x); };
}

/// {X, Y}^i = X^a Y^i_a - Y^a X^i_a. Pointwise, no derivatives.
inline VectorField algebraic_bracket(const J1TSection& a, const J1TSection& b) {
  require_same_chart(a.chart, b.chart);
  return [a, b](const Vec& x) -> Vec {
    return b.matrix_part(x) * a.vector_part(x) - a.matrix_part(x) * b.vector_part(x);
  };
}

/// L_X xi = [pi X, xi] + i_xi D(X).
inline VectorField lie_derivative(const J1TSection& a, VectorField xi) {
  const VectorField bracket = vector_bracket(a.chart, a.vector_part, xi);
  const MatrixField d = spencer_operator(a);
  return [bracket, d, xi = std::move(xi)](const Vec& x) -> Vec { return bracket(x) + d(x) * xi(x); };
}

/// omega(X) = X^a omega_a + X^a_b omega^b_a.
inline double pairing(const Form1J1T& w, const J1TSection& a, const Vec& x) {
  return a.vector_part(x).dot(w.covector_part(x)) + (a.matrix_part(x) * w.matrix_part(x)).trace();
}

inline ScalarField pairing_field(const Form1J1T& w, const J1TSection& a) {
  return [w, a](const Vec& x) { return pairing(w, a, x); };
}

/// The exterior derivative of an algebroid 1-form:
///   (X^c Y^a - Y^c X^a) d_c omega_a + (X^c Y^a_b - Y^c X^a_b) d_c omega^b_a
///   - (X^c_b Y^a_c - Y^c_b X^a_c) omega^b_a.
inline ScalarField delta_one_form(const Form1J1T& w, const J1TSection& a, const J1TSection& b) {
  require_same_chart(w.chart, a.chart);
  require_same_chart(a.chart, b.chart);
  const double h = a.chart.step();
  return [w, a, b, h](const Vec& x) -> double {
    const Vec u = a.vector_part(x);
    const Vec v = b.vector_part(x);
    const Mat xm = a.matrix_part(x);
    const Mat ym = b.matrix_part(x);
    double s = 0;
    for (Eigen::Index c = 0; c < x.size(); ++c) {
      const auto k = static_cast<std::size_t>(c);
      const Vec dw = partial(w.covector_part, x, k, h);
      const Mat dW = partial(w.matrix_part, x, k, h);
      s += u[c] * v.dot(dw) - v[c] * u.dot(dw);
      s += u[c] * (ym * dW).trace() - v[c] * (xm * dW).trace();
    }
    s -= ((ym * xm - xm * ym) * w.matrix_part(x)).trace();
    return s;
  };
}

}  // namespace lieclass
