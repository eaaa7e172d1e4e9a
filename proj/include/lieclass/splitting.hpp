#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "lieclass/chart.hpp"
#include "lieclass/error.hpp"
#include "lieclass/jet_algebroid.hpp"
#include "lieclass/lie_algebra.hpp"
#include "lieclass/rational.hpp"

namespace lieclass {

/// Smallest |det A| accepted on the sample lattice.
inline constexpr double kMinFrameDeterminant = 1e-6;

/// An invertible-matrix-valued map A on a chart.
struct FrameField {
  Chart chart;
  MatrixField A;
};

/// min |det A| over the lattice; throws SingularMatrix below the bound.
inline double check_frame(const FrameField& frame, std::size_t per_axis = 5) {
  double smallest = std::numeric_limits<double>::infinity();
  for (const auto& p : frame.chart.lattice(per_axis)) {
    const Mat a = frame.A(p);
    if (a.rows() != static_cast<Eigen::Index>(frame.chart.dim()) || a.cols() != a.rows())
      throw DimensionMismatch("frame matrix has the wrong shape");
    smallest = std::min(smallest, std::abs(a.determinant()));
  }
  if (smallest < kMinFrameDeterminant) throw SingularMatrix("frame is not invertible on its chart");
  return smallest;
}

/// eps(x, y) = A(y) A(x)^{-1}: the 1-arrow from x to y.
class Splitting {
 public:
  explicit Splitting(FrameField frame) : frame_(std::move(frame)) {}
  const FrameField& frame() const noexcept { return frame_; }
  Mat operator()(const Vec& x, const Vec& y) const { return frame_.A(y) * frame_.A(x).inverse(); }

 private:
  FrameField frame_;
};

namespace detail {

// Gamma(k, j, i) = (d_k A . A^{-1})^i_j at step h, no boundary check.
inline Tensor3 gamma_at(const FrameField& frame, const Vec& x, double h) {
  const std::size_t n = frame.chart.dim();
  const Mat inv = frame.A(x).inverse();
  Tensor3 g(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Mat d = partial(frame.A, x, k, h) * inv;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) g(k, j, i) = d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  return g;
}

// d_r Gamma for every r.
inline std::vector<Tensor3> gamma_derivatives(const FrameField& frame, const Vec& x, double h) {
  const std::size_t n = frame.chart.dim();
  std::vector<Tensor3> out;
  for (std::size_t r = 0; r < n; ++r) {
    Vec xp = x;
    Vec xm = x;
    xp[static_cast<Eigen::Index>(r)] += h;
    xm[static_cast<Eigen::Index>(r)] -= h;
    const Tensor3 gp = gamma_at(frame, xp, h);
    const Tensor3 gm = gamma_at(frame, xm, h);
    Tensor3 d(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) d(a, b, c) = (gp(a, b, c) - gm(a, b, c)) / (2 * h);
    out.push_back(std::move(d));
  }
  return out;
}

inline Vec w_at(const FrameField& frame, const Vec& x, double h) {
  const Tensor3 g = gamma_at(frame, x, h);
  const std::size_t n = g.dim();
  Vec w = Vec::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) w[static_cast<Eigen::Index>(i)] += g(i, a, a) - g(a, i, a);
  return w;
}

// Layout (r, j, k, i), alternated as X_{[r,j]} = X(j, r) - X(r, j).
template <class F>
Tensor4 alternate_rj(std::size_t n, const F& f) {
  Tensor4 raw(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) raw(r, j, k, i) = f(r, j, k, i);
  Tensor4 out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) out(r, j, k, i) = raw(j, r, k, i) - raw(r, j, k, i);
  return out;
}

inline Tensor4 r1_at(const FrameField& frame, const Vec& x, double h) {
  const Tensor3 g = gamma_at(frame, x, h);
  const auto dg = gamma_derivatives(frame, x, h);
  const std::size_t n = g.dim();
  return alternate_rj(n, [&](std::size_t r, std::size_t j, std::size_t k, std::size_t i) {
    double s = dg[r](j, k, i);
    for (std::size_t a = 0; a < n; ++a) s += g(r, k, a) * g(j, a, i);
    return s;
  });
}

inline Tensor4 r2_at(const FrameField& frame, const Vec& x, double h) {
  const Tensor3 g = gamma_at(frame, x, h);
  const auto dg = gamma_derivatives(frame, x, h);
  const std::size_t n = g.dim();
  return alternate_rj(n, [&](std::size_t r, std::size_t j, std::size_t k, std::size_t i) {
    double s = dg[r](k, j, i);
    for (std::size_t a = 0; a < n; ++a) s += g(k, r, a) * g(a, j, i);
    return s;
  });
}

inline Mat tr_r2_at(const FrameField& frame, const Vec& x, double h) {
  const Tensor4 r = r2_at(frame, x, h);
  const auto n = static_cast<Eigen::Index>(r.dim());
  Mat t = Mat::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      for (std::size_t c = 0; c < r.dim(); ++c)
        t(a, b) += r(static_cast<std::size_t>(a), static_cast<std::size_t>(b), c, c);
  return t;
}

inline Mat dw_at(const FrameField& frame, const Vec& x, double h) {
  const auto n = x.size();
  Mat d(n, n);
  std::vector<Vec> partials;
  for (Eigen::Index r = 0; r < n; ++r)
    partials.push_back(partial([&](const Vec& y) { return w_at(frame, y, h); }, x,
                               static_cast<std::size_t>(r), h));
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index j = 0; j < n; ++j) d(r, j) = partials[static_cast<std::size_t>(r)][j] -
                                                   partials[static_cast<std::size_t>(j)][r];
  return d;
}

inline Tensor3 r_full_at(const FrameField& frame, const Vec& x, const Vec& y, double h) {
  const Splitting eps(frame);
  const std::size_t n = frame.chart.dim();
  const Mat e = eps(x, y);
  std::vector<Mat> dx, dy;
  for (std::size_t k = 0; k < n; ++k) {
    dx.push_back(partial([&](const Vec& p) { return eps(p, y); }, x, k, h));
    dy.push_back(partial([&](const Vec& q) { return eps(x, q); }, y, k, h));
  }
  // F(k, j)^i = d_{x^k} eps^i_j + d_{y^a} eps^i_j eps^a_k
  auto f = [&](std::size_t k, std::size_t j, std::size_t i) {
    const auto ii = static_cast<Eigen::Index>(i);
    const auto jj = static_cast<Eigen::Index>(j);
    double s = dx[k](ii, jj);
    for (std::size_t a = 0; a < n; ++a) s += dy[a](ii, jj) * e(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(k));
    return s;
  };
  Tensor3 out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) out(k, j, i) = f(j, k, i) - f(k, j, i);
  return out;
}

}  // namespace detail

/// Gamma_{kj}^i(x) = (d_k A . A^{-1})^i_j, stored as g(k, j, i).
inline Tensor3 gamma(const FrameField& frame, const Vec& x) {
  frame.chart.require_interior(x);
  return detail::gamma_at(frame, x, frame.chart.step());
}

/// The same connection obtained by differentiating eps(x, y) in y on the diagonal.
inline Tensor3 gamma_from_splitting(const FrameField& frame, const Vec& x) {
  frame.chart.require_interior(x);
  const Splitting eps(frame);
  const std::size_t n = frame.chart.dim();
  Tensor3 g(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Mat d = partial([&](const Vec& y) { return eps(x, y); }, x, k, frame.chart.step());
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        g(k, j, i) = d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  return g;
}

/// T_{jk}^i = Gamma_{jk}^i - Gamma_{kj}^i, stored as t(j, k, i).
inline Tensor3 torsion(const Tensor3& g) {
  const std::size_t n = g.dim();
  Tensor3 t(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) t(j, k, i) = g(j, k, i) - g(k, j, i);
  return t;
}

/// R1_{rj,k}^i stored as (r, j, k, i); vanishes for every frame.
inline Tensor4 r1(const FrameField& frame, const Vec& x) {
  frame.chart.require_interior(x);
  return detail::r1_at(frame, x, frame.chart.step());
}

/// R2_{rj,k}^i stored as (r, j, k, i); vanishes iff the invariant fields close.
inline Tensor4 r2(const FrameField& frame, const Vec& x) {
  frame.chart.require_interior(x);
  return detail::r2_at(frame, x, frame.chart.step());
}

/// w_i = Gamma_{ia}^a - Gamma_{ai}^a.
inline Vec w_form(const FrameField& frame, const Vec& x) {
  frame.chart.require_interior(x);
  return detail::w_at(frame, x, frame.chart.step());
}

/// (Tr R2)_{rj} = R2_{rj,a}^a.
inline Mat tr_r2(const FrameField& frame, const Vec& x) {
  frame.chart.require_interior(x);
  return detail::tr_r2_at(frame, x, frame.chart.step());
}

/// (dw)_{rj} = d_r w_j - d_j w_r by central differences of w.
inline Mat dw(const FrameField& frame, const Vec& x) {
  frame.chart.require_interior(x);
  return detail::dw_at(frame, x, frame.chart.step());
}

/// R(eps)_{kj}^i(x, y) stored as (k, j, i).
inline Tensor3 r_full(const FrameField& frame, const Vec& x, const Vec& y) {
  frame.chart.require_interior(x);
  frame.chart.require_interior(y);
  return detail::r_full_at(frame, x, y, frame.chart.step());
}

/// xi(x) = eps(p, x) v.
inline VectorField invariant_field(const FrameField& frame, const Vec& p, const Vec& v) {
  if (!frame.chart.contains(p)) throw OutOfRange("base point outside the chart");
  const Vec base = frame.A(p).inverse() * v;
  return [A = frame.A, base](const Vec& x) -> Vec { return A(x) * base; };
}

/// c_{ij}^k(x) stored as c(i, j, k): the brackets of the invariant fields
/// xi_(i) = eps(anchor, .) e_i expanded back in that basis.
inline Tensor3 structure_functions(const FrameField& frame, const Vec& x, const Vec& anchor) {
  frame.chart.require_interior(x);
  const std::size_t n = frame.chart.dim();
  std::vector<VectorField> fields;
  for (std::size_t i = 0; i < n; ++i)
    fields.push_back(invariant_field(frame, anchor, Vec::Unit(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(i))));
  const Mat back = frame.A(anchor) * frame.A(x).inverse();
  Tensor3 c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec b = back * vector_bracket(frame.chart, fields[i], fields[j])(x);
      for (std::size_t k = 0; k < n; ++k) {
        c(i, j, k) = b[static_cast<Eigen::Index>(k)];
        c(j, i, k) = -b[static_cast<Eigen::Index>(k)];
      }
    }
  return c;
}

/// max(1, max |Gamma|)^2 over the lattice: the magnitude scale of the FD
/// tolerance 10 h^2 scale.
inline double magnitude_scale(const FrameField& frame, std::size_t per_axis = 5) {
  double m = 1;
  for (const auto& p : frame.chart.lattice(per_axis))
    m = std::max(m, detail::gamma_at(frame, p, frame.chart.step()).max_abs());
  return m * m;
}

/// The Lie algebra of the invariant fields at p, recovered from constant
/// structure functions. Fails when the structure functions vary over the
/// lattice or the rounded constants violate Jacobi.
inline LieAlgebra local_algebra(const FrameField& frame, const Vec& p, std::size_t per_axis = 5) {
  const std::size_t n = frame.chart.dim();
  const double h = frame.chart.step();
  const double tol = 10 * (10 * h * h * magnitude_scale(frame, per_axis));
  const Tensor3 c0 = structure_functions(frame, p, p);
  double spread = 0;
  for (const auto& q : frame.chart.lattice(per_axis))
    spread = std::max(spread, (structure_functions(frame, q, p) - c0).max_abs());
  if (spread > tol)
    throw LocalAlgebraError("structure functions are not constant (spread " + std::to_string(spread) +
                            " > " + std::to_string(tol) + ")");
  std::vector<StructureConstant> constants;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational q = best_rational_approximation(c0(i, j, k), 64);
        if (std::abs(q.get_d() - c0(i, j, k)) > tol)
          throw LocalAlgebraError("structure constant " + std::to_string(c0(i, j, k)) +
                                  " has no rational approximation with denominator <= 64");
        if (q != 0) constants.push_back({i + 1, j + 1, k + 1, q});
      }
  LieAlgebra alg(n, constants);
  if (!validate(alg).ok) throw LocalAlgebraError("rounded structure constants violate Jacobi");
  return alg;
}

/// omega = (Gamma_{ia}^a, -delta^i_j); omega(X) = X^a Gamma_{ab}^b - X^a_a.
inline Form1J1T canonical_one_form(const FrameField& frame) {
  const double h = frame.chart.step();
  VectorField cov = [frame, h](const Vec& x) -> Vec {
    const Tensor3 g = detail::gamma_at(frame, x, h);
    Vec out = Vec::Zero(x.size());
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t a = 0; a < g.dim(); ++a) out[static_cast<Eigen::Index>(i)] += g(i, a, a);
    return out;
  };
  MatrixField mat = [](const Vec& x) -> Mat { return -Mat::Identity(x.size(), x.size()); };
  return {frame.chart, std::move(cov), std::move(mat)};
}

/// Gamma~ xi = (X^i, Gamma_{ja}^i X^a).
inline J1TSection gamma_tilde(const FrameField& frame, VectorField xi) {
  const double h = frame.chart.step();
  MatrixField mat = [frame, xi, h](const Vec& x) -> Mat {
    const Tensor3 g = detail::gamma_at(frame, x, h);
    const Vec v = xi(x);
    const auto n = x.size();
    Mat m = Mat::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index a = 0; a < n; ++a)
          m(i, j) += g(static_cast<std::size_t>(j), static_cast<std::size_t>(a), static_cast<std::size_t>(i)) * v[a];
    return m;
  };
  return {frame.chart, std::move(xi), std::move(mat)};
}

/// Gamma^ xi = (X^i, Gamma_{aj}^i X^a).
inline J1TSection gamma_hat(const FrameField& frame, VectorField xi) {
  const double h = frame.chart.step();
  MatrixField mat = [frame, xi, h](const Vec& x) -> Mat {
    const Tensor3 g = detail::gamma_at(frame, x, h);
    const Vec v = xi(x);
    const auto n = x.size();
    Mat m = Mat::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index a = 0; a < n; ++a)
          m(i, j) += g(static_cast<std::size_t>(a), static_cast<std::size_t>(j), static_cast<std::size_t>(i)) * v[a];
    return m;
  };
  return {frame.chart, std::move(xi), std::move(mat)};
}

struct SampledCurve {
  std::vector<double> t;
  std::vector<Vec> points;
  bool exited = false;
};

/// Integrates dx/dt = eps(e, x) v with fixed-step classical RK4, stopping
/// (exited = true) before the first step that would leave the chart.
inline SampledCurve one_parameter_curve(const FrameField& frame, const Vec& e, const Vec& v, double T,
                                        std::size_t steps) {
  frame.chart.require_interior(e);
  if (steps == 0) throw OutOfRange("a curve needs at least one step");
  const Vec base = frame.A(e).inverse() * v;
  auto rhs = [&](const Vec& x) -> Vec { return frame.A(x) * base; };
  const double dt = T / static_cast<double>(steps);
  SampledCurve c;
  c.t.push_back(0);
  c.points.push_back(e);
  Vec x = e;
  for (std::size_t s = 0; s < steps; ++s) {
    const Vec k1 = rhs(x);
    const Vec x2 = x + 0.5 * dt * k1;
    if (!frame.chart.contains(x2)) {
      c.exited = true;
      break;
    }
    const Vec k2 = rhs(x2);
    const Vec x3 = x + 0.5 * dt * k2;
    if (!frame.chart.contains(x3)) {
      c.exited = true;
      break;
    }
    const Vec k3 = rhs(x3);
    const Vec x4 = x + dt * k3;
    if (!frame.chart.contains(x4)) {
      c.exited = true;
      break;
    }
    const Vec k4 = rhs(x4);
    const Vec next = x + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    if (!frame.chart.contains(next)) {
      c.exited = true;
      break;
    }
    x = next;
    c.t.push_back(dt * static_cast<double>(s + 1));
    c.points.push_back(x);
  }
  return c;
}

/// max_i |x''^i(0) - Gamma_{ab}^i(e) v^a v^b| along the curve through e, with
/// x'' from the second difference of one RK4 step forward and backward of
/// size h.
inline double geodesic_residual(const FrameField& frame, const Vec& e, const Vec& v) {
  const double h = frame.chart.step();
  const SampledCurve fwd = one_parameter_curve(frame, e, v, h, 1);
  const SampledCurve bwd = one_parameter_curve(frame, e, -v, h, 1);
  if (fwd.exited || bwd.exited) throw BoundaryError("geodesic check leaves the chart");
  const Vec acc = (fwd.points.back() - 2 * e + bwd.points.back()) / (h * h);
  const Tensor3 g = gamma(frame, e);
  const std::size_t n = g.dim();
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) s += g(a, b, i) * v[static_cast<Eigen::Index>(a)] * v[static_cast<Eigen::Index>(b)];
    worst = std::max(worst, std::abs(acc[static_cast<Eigen::Index>(i)] - s));
  }
  return worst;
}

}  // namespace lieclass
