#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "lieclass/error.hpp"

namespace lieclass {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Evaluables on a chart. They must be safe to call concurrently.
using ScalarField = std::function<double(const Vec&)>;
using VectorField = std::function<Vec(const Vec&)>;
using MatrixField = std::function<Mat(const Vec&)>;

/// Axis-aligned coordinate box with a finite-difference step.
class Chart {
 public:
  Chart(Vec lower, Vec upper, double h = 1e-3)
      : lower_(std::move(lower)), upper_(std::move(upper)), h_(h) {
    if (lower_.size() == 0 || lower_.size() != upper_.size())
      throw DimensionMismatch("chart corners must be nonempty and of equal length");
    if ((upper_ - lower_).minCoeff() <= 0) throw OutOfRange("chart box is empty");
    if (!(h_ > 0)) throw OutOfRange("finite-difference step must be positive");
    if (h_ > shortest_side() / 10)
      throw OutOfRange("finite-difference step exceeds 1/10 of the shortest chart side");
  }

  std::size_t dim() const noexcept { return static_cast<std::size_t>(lower_.size()); }
  const Vec& lower() const noexcept { return lower_; }
  const Vec& upper() const noexcept { return upper_; }
  double step() const noexcept { return h_; }
  double shortest_side() const { return (upper_ - lower_).minCoeff(); }
  double margin() const noexcept { return 2 * h_; }

  Chart with_step(double h) const { return Chart(lower_, upper_, h); }

  bool contains(const Vec& x) const {
    if (x.size() != lower_.size()) return false;
    return (x - lower_).minCoeff() >= 0 && (upper_ - x).minCoeff() >= 0;
  }

  /// At least 2h away from every face.
  bool is_interior(const Vec& x) const {
    if (x.size() != lower_.size()) return false;
    return (x - lower_).minCoeff() >= margin() - 1e-15 && (upper_ - x).minCoeff() >= margin() - 1e-15;
  }

  void require_interior(const Vec& x) const {
    if (x.size() != lower_.size())
      throw DimensionMismatch("point of dimension " + std::to_string(x.size()) + " on a " +
                              std::to_string(dim()) + "-dimensional chart");
    if (!is_interior(x)) {
      std::ostringstream os;
      os << "point (" << x.transpose() << ") is within 2h of the chart boundary";
      throw BoundaryError(os.str());
    }
  }

  /// per_axis^n evenly spaced points spanning the box shrunk by the 2h margin.
  std::vector<Vec> lattice(std::size_t per_axis = 5) const {
    if (per_axis < 2) throw OutOfRange("lattice needs at least two points per axis");
    const std::size_t n = dim();
    const Vec lo = lower_.array() + margin();
    const Vec span = (upper_ - lower_).array() - 2 * margin();
    std::vector<Vec> out;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      Vec p(n);
      for (std::size_t a = 0; a < n; ++a)
        p[a] = lo[a] + span[a] * static_cast<double>(idx[a]) / static_cast<double>(per_axis - 1);
      out.push_back(p);
      std::size_t a = 0;
      while (a < n && ++idx[a] == per_axis) idx[a++] = 0;
      if (a == n) break;
    }
    return out;
  }

  friend bool operator==(const Chart& a, const Chart& b) {
    return a.lower_ == b.lower_ && a.upper_ == b.upper_ && a.h_ == b.h_;
  }

 private:
  Vec lower_;
  Vec upper_;
  double h_;
};

inline void require_same_chart(const Chart& a, const Chart& b) {
  if (!(a == b)) throw ChartMismatch("sections live on different charts");
}

/// Central difference of f along coordinate k (0-based); f may return a
/// scalar, Vec or Mat.
template <class F>
auto partial(const F& f, const Vec& x, std::size_t k, double h) {
  Vec xp = x;
  Vec xm = x;
  xp[static_cast<Eigen::Index>(k)] += h;
  xm[static_cast<Eigen::Index>(k)] -= h;
  using R = std::decay_t<decltype(f(x))>;
  if constexpr (std::is_arithmetic_v<R>)
    return (f(xp) - f(xm)) / (2 * h);
  else
    return R((f(xp) - f(xm)) / (2 * h));
}

/// J(i, j) = d f^i / d x^j.
inline Mat jacobian(const VectorField& f, const Vec& x, double h) {
  const auto n = x.size();
  Mat j(n, n);
  for (Eigen::Index k = 0; k < n; ++k) j.col(k) = partial(f, x, static_cast<std::size_t>(k), h);
  return j;
}

inline Vec gradient(const ScalarField& f, const Vec& x, double h) {
  Vec g(x.size());
  for (Eigen::Index k = 0; k < x.size(); ++k) g[k] = partial(f, x, static_cast<std::size_t>(k), h);
  return g;
}

/// Dense n x n x n array addressed as t(a, b, c).
class Tensor3 {
 public:
  explicit Tensor3(std::size_t n = 0) : n_(n), data_(n * n * n, 0.0) {}
  std::size_t dim() const noexcept { return n_; }
  double& operator()(std::size_t a, std::size_t b, std::size_t c) { return data_[(a * n_ + b) * n_ + c]; }
  double operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return data_[(a * n_ + b) * n_ + c];
  }
  double max_abs() const {
    double m = 0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
  }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

/// Dense n^4 array addressed as t(a, b, c, d).
class Tensor4 {
 public:
  explicit Tensor4(std::size_t n = 0) : n_(n), data_(n * n * n * n, 0.0) {}
  std::size_t dim() const noexcept { return n_; }
  double& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return data_[((a * n_ + b) * n_ + c) * n_ + d];
  }
  double operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return data_[((a * n_ + b) * n_ + c) * n_ + d];
  }
  double max_abs() const {
    double m = 0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

/// Outcome of evaluating a residual at step h and h/2.
///
/// A residual passes when it is within 10 h^2 scale and either shrinks by at
/// least 3x under halving (observed order >= 1.5) or already sits at the
/// roundoff floor of nested second differences, where no further shrinkage is
/// possible.
struct ConvergenceStudy {
  double h = 0;
  double residual = 0;
  double residual_half = 0;
  double scale = 1;

  double tolerance() const { return 10 * h * h * scale; }
  double roundoff_floor() const {
    const double hh = h / 2;
    return 100 * std::numeric_limits<double>::epsilon() / (hh * hh) * scale;
  }
  double ratio() const {
    if (residual_half == 0) return residual == 0 ? 1.0 : std::numeric_limits<double>::infinity();
    return residual / residual_half;
  }
  bool within_tolerance() const { return residual <= tolerance(); }
  bool converges() const { return ratio() >= 3.0 || residual_half <= roundoff_floor(); }
  bool passes() const { return within_tolerance() && converges(); }
};

inline ConvergenceStudy convergence_study(const std::function<double(double)>& residual_at, double h,
                                          double scale) {
  ConvergenceStudy s;
  s.h = h;
  s.scale = scale;
  s.residual = residual_at(h);
  s.residual_half = residual_at(h / 2);
  return s;
}

}  // namespace lieclass
