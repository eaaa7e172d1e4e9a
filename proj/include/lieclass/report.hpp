#pragma once

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lieclass/alternating_form.hpp"
#include "lieclass/ce_cohomology.hpp"
#include "lieclass/lie_algebra.hpp"
#include "lieclass/splitting.hpp"
#include "lieclass/trace_forms.hpp"

namespace lieclass {

using Json = nlohmann::json;  // std::map-backed objects: keys serialize sorted

inline Json subset_json(const LieAlgebra& alg, const IndexSet& s) {
  Json labels = Json::array();
  for (auto i : s) labels.push_back(alg.name(i));
  return {{"indices", s}, {"labels", labels}};
}

inline Json form_json(const LieAlgebra& alg, const AlternatingForm& form) {
  Json comps = Json::array();
  const SubsetIndex idx = form.index();
  for (std::size_t s = 0; s < idx.size(); ++s) {
    Json c = subset_json(alg, idx[s]);
    c["value"] = to_string(form.components()[s]);
    comps.push_back(std::move(c));
  }
  return {{"degree", form.degree()}, {"components", comps}, {"zero", form.is_zero()}};
}

/// Full structural report. Invariants are only computed for algebras that
/// satisfy Jacobi; otherwise the report lists the violations.
inline Json analyze_report(const std::string& name, const LieAlgebra& alg,
                           std::optional<std::size_t> max_degree = std::nullopt, bool timing = false) {
  const auto start = std::chrono::steady_clock::now();
  Json r;
  r["name"] = name;
  r["dim"] = alg.dim();
  r["basis"] = alg.names();
  const ValidationReport v = validate(alg);
  r["jacobi_ok"] = v.ok;
  Json viol = Json::array();
  for (const auto& j : v.violations)
    viol.push_back({{"i", j.i}, {"j", j.j}, {"k", j.k}, {"m", j.m}, {"value", to_string(j.value)}});
  r["violations"] = viol;
  if (v.ok) {
    r["solvable"] = is_solvable(alg);
    r["nilpotent"] = is_nilpotent(alg);
    r["semisimple"] = is_semisimple(alg);
    r["unimodular"] = is_unimodular(alg);
    const Inertia in = inertia(killing(alg));
    r["killing_signature"] = {{"positive", in.positive}, {"negative", in.negative}, {"zero", in.zero}};
    r["betti"] = betti_table(alg);
    Json classes = Json::object();
    for (const auto& c : class_report(alg, max_degree.value_or(kMaxTraceFormDegree)))
      classes[std::to_string(c.degree)] = to_string(c.status);
    r["classes"] = classes;
  }
  if (timing)
    r["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  return r;
}

inline Json forms_report(const std::string& name, const LieAlgebra& alg, std::size_t degree) {
  return {{"name", name}, {"form", form_json(alg, trace_form(alg, degree))}};
}

inline Json cohomology_report(const std::string& name, const LieAlgebra& alg, std::size_t degree) {
  Json r{{"name", name}, {"degree", degree}, {"betti", betti(alg, degree)}};
  if (degree >= 1 && degree <= std::min(alg.dim(), kMaxTraceFormDegree)) {
    const AlternatingForm w = trace_form(alg, degree);
    Json t{{"zero_form", w.is_zero()}, {"closed", is_closed(alg, w)}};
    if (t["closed"].get<bool>()) {
      const ExactnessResult ex = is_exact(alg, w);
      t["exact"] = ex.exact;
      t["primitive"] = ex.primitive ? form_json(alg, *ex.primitive) : Json(nullptr);
    }
    r["trace_form"] = t;
  } else {
    r["trace_form"] = nullptr;
  }
  return r;
}

/// Pairs (x, x) and (x, y) over the lattice, y a cyclic offset of about half
/// the lattice. (Reflection through the centre would be degenerate on charts
/// symmetric in a coordinate that the frame only sees through an even function.)
inline std::vector<std::pair<Vec, Vec>> sample_pairs(const Chart& chart, std::size_t per_axis = 5) {
  const auto points = chart.lattice(per_axis);
  const std::size_t shift = points.size() / 2 + 1;
  std::vector<std::pair<Vec, Vec>> out;
  for (std::size_t a = 0; a < points.size(); ++a) {
    out.emplace_back(points[a], points[a]);
    out.emplace_back(points[a], points[(a + shift) % points.size()]);
  }
  return out;
}

/// Lattice maxima of the curvature quantities of a frame, and the
/// residual max |dw - Tr R2| at h and h/2.
struct FrameSummary {
  double h = 0;
  std::size_t lattice = 0;
  double scale = 1;
  double r1_max = 0;
  double r2_max = 0;
  double r_full_max = 0;
  double r_full_diagonal_max = 0;
  double torsion_max = 0;
  double w_max = 0;
  ConvergenceStudy r1_study;
  ConvergenceStudy dw_tr_r2_study;
};

inline FrameSummary summarize_frame(const FrameField& frame, std::size_t per_axis = 5) {
  FrameSummary s;
  s.h = frame.chart.step();
  s.lattice = per_axis;
  s.scale = magnitude_scale(frame, per_axis);
  const auto points = frame.chart.lattice(per_axis);
  for (const auto& x : points) {
    s.r1_max = std::max(s.r1_max, r1(frame, x).max_abs());
    s.r2_max = std::max(s.r2_max, r2(frame, x).max_abs());
    const Tensor3 g = gamma(frame, x);
    s.torsion_max = std::max(s.torsion_max, torsion(g).max_abs());
    s.w_max = std::max(s.w_max, w_form(frame, x).cwiseAbs().maxCoeff());
  }
  for (const auto& [x, y] : sample_pairs(frame.chart, per_axis)) {
    const double m = r_full(frame, x, y).max_abs();
    s.r_full_max = std::max(s.r_full_max, m);
    if (x == y) s.r_full_diagonal_max = std::max(s.r_full_diagonal_max, m);
  }
  s.r1_study = convergence_study(
      [&](double h) {
        double worst = 0;
        for (const auto& x : points) worst = std::max(worst, detail::r1_at(frame, x, h).max_abs());
        return worst;
      },
      s.h, s.scale);
  s.dw_tr_r2_study = convergence_study(
      [&](double h) {
        double worst = 0;
        for (const auto& x : points)
          worst = std::max(worst, (detail::dw_at(frame, x, h) - detail::tr_r2_at(frame, x, h)).cwiseAbs().maxCoeff());
        return worst;
      },
      s.h, s.scale);
  return s;
}

inline Json study_json(const ConvergenceStudy& s) {
  return {{"residual", s.residual},   {"residual_half", s.residual_half}, {"ratio", s.ratio()},
          {"tolerance", s.tolerance()}, {"roundoff_floor", s.roundoff_floor()}, {"passes", s.passes()}};
}

inline Json curvature_report(const std::string& name, const FrameField& frame, std::size_t per_axis = 5) {
  const FrameSummary s = summarize_frame(frame, per_axis);
  return {{"frame", name},
          {"h", s.h},
          {"lattice", s.lattice},
          {"scale", s.scale},
          {"r1_max", s.r1_max},
          {"r2_max", s.r2_max},
          {"r_full_max", s.r_full_max},
          {"r_full_diagonal_max", s.r_full_diagonal_max},
          {"torsion_max", s.torsion_max},
          {"w_max", s.w_max},
          {"r1_convergence", study_json(s.r1_study)},
          {"dw_minus_tr_r2", study_json(s.dw_tr_r2_study)}};
}

/// Human-readable rendering: one "key: value" line per leaf, nested keys
/// joined by dots.
inline void render_text(const Json& j, std::ostream& os, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, os, prefix.empty() ? k : prefix + "." + k);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], os, prefix + "[" + std::to_string(i) + "]");
  } else {
    os << std::left << std::setw(32) << prefix << ' ';
    if (j.is_string())
      os << j.get<std::string>();
    else
      os << j.dump();
    os << '\n';
  }
}

}  // namespace lieclass
