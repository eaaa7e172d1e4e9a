#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "lieclass/lieclass.hpp"

namespace {

using namespace lieclass;

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsageError = 2;

struct Target {
  std::string name;
  LieAlgebra algebra;
};

// "catalog:<name>" or a path to an algebra file.
Target load_target(const std::string& spec) {
  const std::string prefix = "catalog:";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string name = spec.substr(prefix.size());
    const CatalogEntry e = catalog::get(name);
    if (e.kind != EntryKind::algebra) throw UnknownName("catalog entry '" + name + "' is not an algebra");
    return {name, e.algebra()};
  }
  const AlgebraFile f = read_algebra_file(spec);
  return {std::filesystem::path(spec).stem().string(), f.to_algebra()};
}

void emit(const Json& j, const std::string& format) {
  if (format == "text")
    render_text(j, std::cout);
  else
    std::cout << j.dump(2) << '\n';
}

// Cohomology and trace forms assume a Lie algebra.
bool require_jacobi(const Target& t) {
  const ValidationReport v = validate(t.algebra);
  if (!v.ok)
    std::cerr << "error: '" << t.name << "' violates the Jacobi identity (" << v.violations.size()
              << " violated identities; run analyze for the list)\n";
  return v.ok;
}

Json catalog_entry_json(const CatalogEntry& e) {
  Json j{{"name", e.name}, {"kind", to_string(e.kind)}, {"provenance", e.provenance}};
  auto chart_json = [](const Chart& c) {
    return Json{{"lower", std::vector<double>(c.lower().data(), c.lower().data() + c.lower().size())},
                {"upper", std::vector<double>(c.upper().data(), c.upper().data() + c.upper().size())},
                {"h", c.step()}};
  };
  switch (e.kind) {
    case EntryKind::algebra:
      j["dim"] = e.algebra().dim();
      j["file"] = serialize(e.algebra());
      break;
    case EntryKind::frame:
      j["chart"] = chart_json(e.frame().chart);
      break;
    case EntryKind::multiplication: {
      const auto& m = e.multiplication();
      j["chart"] = chart_json(m.chart);
      j["identity"] = std::vector<double>(m.identity.data(), m.identity.data() + m.identity.size());
      break;
    }
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic classes of Lie algebras and local Lie groups"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string target;
  std::size_t max_degree = kMaxTraceFormDegree;
  bool timing = false;
  auto* analyze = app.add_subcommand("analyze", "Structural report of an algebra");
  analyze->add_option("target", target, "Algebra file or catalog:<name>")->required();
  analyze->add_option("--max-degree", max_degree, "Highest odd degree for class statuses");
  analyze->add_flag("--timing", timing, "Include wall-clock timing (non-deterministic)");

  std::size_t degree = 0;
  auto* forms = app.add_subcommand("forms", "Components of the trace form w_k");
  forms->add_option("target", target, "Algebra file or catalog:<name>")->required();
  forms->add_option("--degree", degree, "Form degree k")->required();

  auto* cohomology = app.add_subcommand("cohomology", "Betti number and class of w_k");
  cohomology->add_option("target", target, "Algebra file or catalog:<name>")->required();
  cohomology->add_option("--degree", degree, "Cochain degree k")->required();

  std::string frame_name;
  double h = 1e-3;
  std::size_t lattice = 5;
  auto* curvature = app.add_subcommand("curvature", "Curvature maxima of a catalog frame");
  curvature->set_help_flag("--help", "Print this help message and exit");  // frees --h
  curvature->add_option("--frame", frame_name, "Catalog frame name")->required();
  curvature->add_option("--h", h, "Finite-difference step")->check(CLI::PositiveNumber);
  curvature->add_option("--lattice", lattice, "Lattice points per axis")->check(CLI::Range(2, 50));

  std::string show_name;
  auto* cat = app.add_subcommand("catalog", "Built-in algebras, frames and multiplications");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List entry names");
  auto* cat_show = cat->add_subcommand("show", "Show one entry");
  cat_show->add_option("name", show_name)->required();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(verify_suites()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (analyze->parsed()) {
      const Target t = load_target(target);
      const Json r = analyze_report(t.name, t.algebra, max_degree, timing);
      emit(r, format);
      return r["jacobi_ok"].get<bool>() ? kOk : kMathFailure;
    }
    if (forms->parsed()) {
      const Target t = load_target(target);
      if (!require_jacobi(t)) return kMathFailure;
      emit(forms_report(t.name, t.algebra, degree), format);
      return kOk;
    }
    if (cohomology->parsed()) {
      const Target t = load_target(target);
      if (!require_jacobi(t)) return kMathFailure;
      emit(cohomology_report(t.name, t.algebra, degree), format);
      return kOk;
    }
    if (curvature->parsed()) {
      const CatalogEntry e = catalog::get(frame_name);
      if (e.kind != EntryKind::frame) throw UnknownName("catalog entry '" + frame_name + "' is not a frame");
      FrameField frame = e.frame();
      frame.chart = frame.chart.with_step(h);
      emit(curvature_report(frame_name, frame, lattice), format);
      return kOk;
    }
    if (cat_list->parsed()) {
      Json names = Json::array();
      for (const auto& n : catalog::list()) names.push_back({{"name", n}, {"kind", to_string(catalog::get(n).kind)}});
      emit(Json{{"entries", names}}, format);
      return kOk;
    }
    if (cat_show->parsed()) {
      emit(catalog_entry_json(catalog::get(show_name)), format);
      return kOk;
    }
    if (verify->parsed()) {
      std::size_t passed = 0, failed = 0;
      for (const auto& s : suite.empty() ? verify_suites() : std::vector<std::string>{suite})
        for (const auto& c : run_verify(s)) {
          (c.passed ? passed : failed)++;
          std::cout << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name
                    << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
        }
      std::cout << "passed " << passed << ", failed " << failed << '\n';
      return failed == 0 ? kOk : kMathFailure;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UnknownName& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const OutOfRange& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
