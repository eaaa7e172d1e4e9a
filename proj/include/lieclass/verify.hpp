#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lieclass/catalog.hpp"
#include "lieclass/ce_cohomology.hpp"
#include "lieclass/jet_algebroid.hpp"
#include "lieclass/lie_algebra.hpp"
#include "lieclass/local_group.hpp"
#include "lieclass/report.hpp"
#include "lieclass/splitting.hpp"
#include "lieclass/trace_forms.hpp"

namespace lieclass {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites{"algebra", "forms", "cohomology", "frames", "jets"};
  return suites;
}

namespace detail {

class Sampler {
 public:
  explicit Sampler(std::uint32_t seed) : rng_(seed) {}

  Rational rational() {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    Rational q(num(rng_), den(rng_));
    q.canonicalize();
    return q;
  }
  QVector qvector(std::size_t n) {
    QVector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational());
    return v;
  }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// Random quadratic vector field a + B x + (x^T C_i x)_i with unit-scale coefficients.
  VectorField quadratic_field(std::size_t n) {
    const auto m = static_cast<Eigen::Index>(n);
    Vec a(m);
    Mat b(m, m);
    std::vector<Mat> c(n, Mat(m, m));
    for (Eigen::Index i = 0; i < m; ++i) {
      a[i] = real(-1, 1);
      for (Eigen::Index j = 0; j < m; ++j) {
        b(i, j) = real(-1, 1);
        for (auto& ci : c) ci(i, j) = real(-0.5, 0.5);
      }
    }
    return [a, b, c](const Vec& x) -> Vec {
      Vec out = a + b * x;
      for (std::size_t i = 0; i < c.size(); ++i) out[static_cast<Eigen::Index>(i)] += x.dot(c[i] * x);
      return out;
    };
  }

  /// Random affine matrix field M0 + sum_a x^a M_a.
  MatrixField linear_matrix_field(std::size_t n) {
    const auto m = static_cast<Eigen::Index>(n);
    std::vector<Mat> coeffs(n + 1, Mat(m, m));
    for (auto& c : coeffs)
      for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j) c(i, j) = real(-1, 1);
    return [coeffs](const Vec& x) -> Mat {
      Mat out = coeffs[0];
      for (Eigen::Index a = 0; a < x.size(); ++a) out += x[a] * coeffs[static_cast<std::size_t>(a) + 1];
      return out;
    };
  }

  J1TSection section(const Chart& chart) {
    return {chart, quadratic_field(chart.dim()), linear_matrix_field(chart.dim())};
  }

 private:
  std::mt19937 rng_;
};

inline double max_over(const std::vector<Vec>& points, const std::function<double(const Vec&)>& f) {
  double m = 0;
  for (const auto& p : points) m = std::max(m, std::abs(f(p)));
  return m;
}

inline std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << v;
  return os.str();
}

// FD tolerance for a residual whose terms have size `magnitude`.
inline double fd_tolerance(double h, double magnitude) { return 10 * h * h * std::max(1.0, magnitude); }

}  // namespace detail

inline std::vector<CheckResult> verify_algebra() {
  std::vector<CheckResult> out;
  detail::Sampler rng(20240601);
  for (const auto& name : catalog::list(EntryKind::algebra)) {
    const LieAlgebra alg = catalog::get(name).algebra();
    const std::size_t n = alg.dim();
    out.push_back({"algebra", name + ": Jacobi", validate(alg).ok, ""});
    bool anti = true, hom = true, inv = true;
    const QMatrix kg = killing(alg);
    for (int t = 0; t < 20; ++t) {
      const QVector x = rng.qvector(n), y = rng.qvector(n), z = rng.qvector(n);
      QVector neg = bracket(alg, y, x);
      for (auto& q : neg) q = -q;
      anti = anti && bracket(alg, x, y) == neg;
      const QMatrix ax = ad(alg, x), ay = ad(alg, y);
      hom = hom && ad(alg, bracket(alg, x, y)) == ax * ay - ay * ax;
      inv = inv && killing_value(kg, bracket(alg, x, y), z) == killing_value(kg, x, bracket(alg, y, z));
    }
    out.push_back({"algebra", name + ": bracket antisymmetric", anti, ""});
    out.push_back({"algebra", name + ": ad is a homomorphism", hom, ""});
    out.push_back({"algebra", name + ": Killing form invariant", inv, ""});
    out.push_back({"algebra", name + ": semisimple implies unimodular", !is_semisimple(alg) || is_unimodular(alg), ""});
  }
  return out;
}

inline std::vector<CheckResult> verify_forms() {
  std::vector<CheckResult> out;
  detail::Sampler rng(20240602);
  for (const auto& name : catalog::list(EntryKind::algebra)) {
    const LieAlgebra alg = catalog::get(name).algebra();
    const std::size_t n = alg.dim();
    for (std::size_t k = 2; k <= std::min(n, std::size_t{4}); k += 2)
      out.push_back({"forms", name + ": w" + std::to_string(k) + " = 0", trace_form(alg, k).is_zero(), ""});
    if (n >= 3) {
      const AlternatingForm w3 = trace_form(alg, 3);
      bool agree = true;
      for (int t = 0; t < 100; ++t) {
        const QVector x = rng.qvector(n), y = rng.qvector(n), z = rng.qvector(n);
        agree = agree && w3.evaluate({x, y, z}) == w3_killing(alg, x, y, z);
      }
      out.push_back({"forms", name + ": w3 = kappa(x,[y,z])", agree, ""});
      out.push_back({"forms", name + ": w3 = 0 iff solvable", w3.is_zero() == is_solvable(alg), ""});
    }
    out.push_back({"forms", name + ": w1 = 0 iff unimodular", w1_character(alg).is_zero() == is_unimodular(alg), ""});
    out.push_back({"forms", name + ": w1 = trace_form(1)", w1_character(alg) == trace_form(alg, 1), ""});
  }
  return out;
}

inline std::vector<CheckResult> verify_cohomology() {
  std::vector<CheckResult> out;
  for (const auto& name : catalog::list(EntryKind::algebra)) {
    const LieAlgebra alg = catalog::get(name).algebra();
    const std::size_t n = alg.dim();
    bool dd = true;
    for (std::size_t k = 0; k + 1 <= n; ++k)
      dd = dd && (differential_matrix(alg, k + 1) * differential_matrix(alg, k)).is_zero();
    out.push_back({"cohomology", name + ": d o d = 0", dd, ""});
    bool closed = true;
    for (std::size_t k = 1; k <= std::min(n, kMaxTraceFormDegree); k += 2)
      closed = closed && is_closed(alg, trace_form(alg, k));
    out.push_back({"cohomology", name + ": odd trace forms closed", closed, ""});
    const auto b = betti_table(alg);
    long euler = 0;
    for (std::size_t k = 0; k <= n; ++k) euler += (k % 2 ? -1 : 1) * static_cast<long>(b[k]);
    out.push_back({"cohomology", name + ": b0 = 1 and Euler characteristic 0", b[0] == 1 && euler == 0, ""});
    if (is_semisimple(alg))
      out.push_back({"cohomology", name + ": Whitehead b1 = b2 = 0", b[1] == 0 && b[2] == 0, ""});
  }
  return out;
}

inline std::vector<CheckResult> verify_frames() {
  std::vector<CheckResult> out;
  for (const auto& name : catalog::list(EntryKind::frame)) {
    const FrameField frame = catalog::get(name).frame();
    check_frame(frame);
    const FrameSummary s = summarize_frame(frame);
    const double tol = 10 * s.h * s.h * s.scale;
    out.push_back({"frames", name + ": R1 = 0 with convergence", s.r1_study.passes(),
                   "residual " + detail::num(s.r1_study.residual) + ", ratio " + detail::num(s.r1_study.ratio())});
    out.push_back({"frames", name + ": dw = Tr R2 with convergence", s.dw_tr_r2_study.passes(),
                   "residual " + detail::num(s.dw_tr_r2_study.residual)});
    out.push_back({"frames", name + ": R2 small iff R(eps) small", (s.r2_max < tol) == (s.r_full_max < tol),
                   "R2 " + detail::num(s.r2_max) + ", R(eps) " + detail::num(s.r_full_max)});
    out.push_back({"frames", name + ": R(eps)(x,x) = 0", s.r_full_diagonal_max < tol, ""});
    const Splitting eps(frame);
    double cocycle = 0;
    const auto pts = frame.chart.lattice(3);
    for (std::size_t a = 0; a < pts.size(); ++a) {
      const Vec& x = pts[a];
      const Vec& y = pts[(a + 1) % pts.size()];
      const Vec& z = pts[(a + 2) % pts.size()];
      cocycle = std::max(cocycle, (eps(y, z) * eps(x, y) - eps(x, z)).cwiseAbs().maxCoeff());
      cocycle = std::max(cocycle, (eps(x, x) - Mat::Identity(x.size(), x.size())).cwiseAbs().maxCoeff());
    }
    out.push_back({"frames", name + ": splitting cocycle", cocycle <= 1e-12, detail::num(cocycle)});
  }
  detail::Sampler rng(20240603);
  for (const auto& name : catalog::list(EntryKind::multiplication)) {
    const LocalGroupMultiplication g = catalog::get(name).multiplication();
    out.push_back({"frames", name + ": identity laws", identity_law_residual(g) <= 1e-12, ""});
    double assoc = 0;
    const Vec lo = g.chart.lower(), hi = g.chart.upper();
    // factors near e so that products stay in the chart
    const Vec mid = g.identity;
    for (int t = 0; t < 20; ++t) {
      Vec a(mid.size()), b(mid.size()), c(mid.size());
      for (Eigen::Index i = 0; i < mid.size(); ++i) {
        const double r = 0.2 * std::min(hi[i] - mid[i], mid[i] - lo[i]);
        a[i] = mid[i] + rng.real(-r, r);
        b[i] = mid[i] + rng.real(-r, r);
        c[i] = mid[i] + rng.real(-r, r);
      }
      assoc = std::max(assoc, (g.multiply(g.multiply(a, b), c) - g.multiply(a, g.multiply(b, c))).cwiseAbs().maxCoeff());
    }
    out.push_back({"frames", name + ": associativity", assoc <= 1e-12, detail::num(assoc)});
    const ConvergenceStudy s = log_det_ad_primitive_check(g);
    out.push_back({"frames", name + ": -d log det Ad = w", s.passes(), "residual " + detail::num(s.residual)});
  }
  return out;
}

inline std::vector<CheckResult> verify_jets() {
  std::vector<CheckResult> out;
  detail::Sampler rng(20240604);
  const Chart chart = catalog::cube(2, -1, 1);
  const double h = chart.step();
  const auto pts = chart.lattice(3);
  double eq3 = 0, eq7 = 0, eq25 = 0, jac = 0, mag = 1;
  for (int t = 0; t < 10; ++t) {
    const VectorField xi = rng.quadratic_field(2), eta = rng.quadratic_field(2), zeta = rng.quadratic_field(2);
    const J1TSection a = rng.section(chart), b = rng.section(chart), c = rng.section(chart);
    const Form1J1T w{chart, rng.quadratic_field(2), rng.linear_matrix_field(2)};
    const J1TSection lhs3 = prolong(chart, vector_bracket(chart, xi, eta));
    const J1TSection rhs3 = spencer_bracket(prolong(chart, xi), prolong(chart, eta));
    const J1TSection ab = spencer_bracket(a, b);
    const J1TSection jacobi1 = spencer_bracket(spencer_bracket(a, b), c);
    const J1TSection jacobi2 = spencer_bracket(spencer_bracket(b, c), a);
    const J1TSection jacobi3 = spencer_bracket(spencer_bracket(c, a), b);
    const ScalarField wa = pairing_field(w, a), wb = pairing_field(w, b);
    const ScalarField delta = delta_one_form(w, a, b);
    const VectorField lb = lie_derivative(b, zeta), la = lie_derivative(a, zeta);
    const VectorField lab = lie_derivative(a, lb), lba = lie_derivative(b, la), lbr = lie_derivative(ab, zeta);
    for (const auto& x : pts) {
      eq3 = std::max(eq3, (lhs3.matrix_part(x) - rhs3.matrix_part(x)).cwiseAbs().maxCoeff());
      const double l7 = a.vector_part(x).dot(gradient(wb, x, h)) - b.vector_part(x).dot(gradient(wa, x, h));
      const double r7 = delta(x) + pairing(w, ab, x);
      eq7 = std::max(eq7, std::abs(l7 - r7));
      mag = std::max(mag, std::abs(l7));
      eq25 = std::max(eq25, (lab(x) - lba(x) - lbr(x)).cwiseAbs().maxCoeff());
      const Mat jm = jacobi1.matrix_part(x) + jacobi2.matrix_part(x) + jacobi3.matrix_part(x);
      const Vec jv = jacobi1.vector_part(x) + jacobi2.vector_part(x) + jacobi3.vector_part(x);
      jac = std::max({jac, jm.cwiseAbs().maxCoeff(), jv.cwiseAbs().maxCoeff()});
      mag = std::max(mag, lab(x).cwiseAbs().maxCoeff());
    }
  }
  const double tol = detail::fd_tolerance(h, mag);
  out.push_back({"jets", "prolongation respects the bracket", eq3 <= tol, detail::num(eq3)});
  out.push_back({"jets", "L_X w(Y) - L_Y w(X) = dw(X,Y) + w([X,Y])", eq7 <= tol, detail::num(eq7)});
  out.push_back({"jets", "L is a representation", eq25 <= tol, detail::num(eq25)});
  out.push_back({"jets", "Spencer bracket Jacobi identity", jac <= tol, detail::num(jac)});
  for (const auto& name : catalog::list(EntryKind::frame)) {
    const FrameField frame = catalog::get(name).frame();
    const Form1J1T omega = canonical_one_form(frame);
    double delta = 0;
    bool minus_identity = true;
    const auto fp = frame.chart.lattice(3);
    for (int t = 0; t < 3; ++t) {
      const J1TSection a = rng.section(frame.chart), b = rng.section(frame.chart);
      const ScalarField d = delta_one_form(omega, a, b);
      for (const auto& x : fp) delta = std::max(delta, std::abs(d(x)));
    }
    for (const auto& x : fp)
      minus_identity = minus_identity && omega.matrix_part(x) == -Mat::Identity(x.size(), x.size());
    out.push_back({"jets", name + ": canonical form is closed", delta <= detail::fd_tolerance(frame.chart.step(), magnitude_scale(frame)),
                   detail::num(delta)});
    out.push_back({"jets", name + ": canonical form matrix part = -I", minus_identity, ""});
  }
  return out;
}

inline std::vector<CheckResult> run_verify(const std::string& suite) {
  if (suite == "algebra") return verify_algebra();
  if (suite == "forms") return verify_forms();
  if (suite == "cohomology") return verify_cohomology();
  if (suite == "frames") return verify_frames();
  if (suite == "jets") return verify_jets();
  throw UnknownName("no verification suite named '" + suite + "'");
}

}  // namespace lieclass
