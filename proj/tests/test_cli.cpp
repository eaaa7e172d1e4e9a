#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "lieclass/lieclass.hpp"

using namespace lieclass;

namespace {

struct CliRun {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliRun run_cli(const std::string& args) {
  char err_path[] = "/tmp/lieclass_cli_err_XXXXXX";
  const int fd = mkstemp(err_path);
  if (fd >= 0) close(fd);
  const std::string cmd = std::string("'") + LIECLASS_CLI_PATH + "' " + args + " 2>" + err_path;
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_path);
  std::remove(err_path);
  return r;
}

std::string data(const std::string& name) { return std::string("'") + LIECLASS_DATA_DIR + "/" + name + "'"; }

}  // namespace

// ---- algebra file format ----

TEST(AlgebraFile, ParsesCommentsBasisAndRationals) {
  const AlgebraFile f = parse_algebra_file("# header\n\n dim 2   # two\nbasis a b\n1 2 2 -3/6\n");
  EXPECT_EQ(f.dim, 2u);
  EXPECT_EQ(f.names, (std::vector<std::string>{"a", "b"}));
  ASSERT_EQ(f.constants.size(), 1u);
  EXPECT_EQ(f.constants[0].value, Rational(-1, 2));
  EXPECT_EQ(parse_algebra_file("dim 3\n").to_algebra(), catalog::abelian(3));
  EXPECT_EQ(parse_algebra_file("dim 2\n1 2 1 0\n").constants.size(), 0u);
}

TEST(AlgebraFile, PositionalErrors) {
  auto where = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_algebra_file(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  EXPECT_EQ(where("basis a\n"), (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_EQ(where("dim 2\n2 1 1 1\n"), (std::pair<std::size_t, std::size_t>{2, 1}));
  EXPECT_EQ(where("dim 2\n1 2 3 1\n"), (std::pair<std::size_t, std::size_t>{2, 5}));
  EXPECT_EQ(where("dim 2\n1 2 1 1/0\n"), (std::pair<std::size_t, std::size_t>{2, 7}));
  EXPECT_EQ(where("dim 2\n1 2 1 x\n"), (std::pair<std::size_t, std::size_t>{2, 7}));
  EXPECT_EQ(where("dim 2\n1 2 1\n"), (std::pair<std::size_t, std::size_t>{2, 1}));
  EXPECT_EQ(where("dim 2\n1 2 1 1\n1 2 1 2\n"), (std::pair<std::size_t, std::size_t>{3, 1}));
  EXPECT_EQ(where("dim 2\nbasis a\n"), (std::pair<std::size_t, std::size_t>{2, 1}));
  EXPECT_EQ(where("dim 2\n1 2 1 1\nbasis a b\n"), (std::pair<std::size_t, std::size_t>{3, 1}));
  EXPECT_EQ(where("dim 2\ndim 2\n"), (std::pair<std::size_t, std::size_t>{2, 1}));
  EXPECT_EQ(where("dim 0\n"), (std::pair<std::size_t, std::size_t>{1, 5}));
  EXPECT_EQ(where("# nothing\n"), (std::pair<std::size_t, std::size_t>{2, 1}));
  EXPECT_THROW(read_algebra_file("/nonexistent/file.alg"), Error);
}

TEST(AlgebraFile, RoundTripsEveryCatalogAlgebra) {
  for (const auto& name : catalog::list(EntryKind::algebra)) {
    const LieAlgebra alg = catalog::get(name).algebra();
    EXPECT_EQ(parse_algebra_file(serialize(alg)).to_algebra(), alg) << name;
  }
  const LieAlgebra half = read_algebra_file(std::string(LIECLASS_DATA_DIR) + "/affine_half.alg").to_algebra();
  EXPECT_EQ(parse_algebra_file(serialize(half)).to_algebra(), half);
  EXPECT_NE(serialize(half).find("1/2"), std::string::npos);
}

// ---- the binary ----

TEST(Cli, AnalyzeSl2) {
  const CliRun r = run_cli("analyze catalog:sl2");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["solvable"], false);
  EXPECT_EQ(j["semisimple"], true);
  EXPECT_EQ(j["unimodular"], true);
  EXPECT_EQ(j["betti"], Json::parse("[1,0,0,1]"));
  EXPECT_EQ(j["classes"]["3"], "nonzero_class");
  EXPECT_EQ(j["classes"]["1"], "zero_form");
  EXPECT_EQ(j["killing_signature"]["positive"], 2);
  EXPECT_FALSE(j.contains("timing"));
  EXPECT_TRUE(Json::parse(run_cli("analyze catalog:sl2 --timing").out).contains("timing"));
}

TEST(Cli, AnalyzeFileMatchesCatalog) {
  Json file = Json::parse(run_cli("analyze " + data("sl2.alg")).out);
  Json cat = Json::parse(run_cli("analyze catalog:sl2").out);
  EXPECT_EQ(file["name"], "sl2");
  EXPECT_EQ(file, cat);
}

TEST(Cli, FormsOutput) {
  const CliRun r = run_cli("forms catalog:sl2 --degree 3");
  ASSERT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["form"]["components"][0]["value"], "-8");
  EXPECT_EQ(j["form"]["components"][0]["labels"], Json::parse(R"(["X","H","Y"])"));

  const Json ab = Json::parse(run_cli("forms 'catalog:abelian(4)' --degree 3").out);
  EXPECT_EQ(ab["form"]["components"].size(), 4u);
  for (const auto& c : ab["form"]["components"]) EXPECT_EQ(c["value"], "0");
  EXPECT_EQ(ab["form"]["zero"], true);

  const Json half = Json::parse(run_cli("forms " + data("affine_half.alg") + " --degree 1").out);
  EXPECT_EQ(half["form"]["components"][0]["value"], "1/2");
}

TEST(Cli, CohomologyOutput) {
  const Json j = Json::parse(run_cli("cohomology catalog:sl2 --degree 3").out);
  EXPECT_EQ(j["betti"], 1);
  EXPECT_EQ(j["trace_form"]["closed"], true);
  EXPECT_EQ(j["trace_form"]["exact"], false);
  EXPECT_TRUE(j["trace_form"]["primitive"].is_null());
  const Json h = Json::parse(run_cli("cohomology catalog:heisenberg3 --degree 2").out);
  EXPECT_EQ(h["betti"], 2);
}

TEST(Cli, CurvatureOutput) {
  const CliRun r = run_cli("curvature --frame unipotent_sin");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_GT(j["r2_max"].get<double>(), 0.1);
  EXPECT_EQ(j["dw_minus_tr_r2"]["passes"], true);
  EXPECT_EQ(j["r1_convergence"]["passes"], true);
  const Json a = Json::parse(run_cli("curvature --frame affine_halfplane --h 5e-4 --lattice 3").out);
  EXPECT_EQ(a["h"], 5e-4);
  EXPECT_EQ(a["lattice"], 3);
  EXPECT_LT(a["r2_max"].get<double>(), 1e-5);
}

TEST(Cli, CatalogCommands) {
  const Json list = Json::parse(run_cli("catalog list").out);
  EXPECT_EQ(list["entries"].size(), catalog::list().size());
  const Json show = Json::parse(run_cli("catalog show so3").out);
  EXPECT_EQ(show["kind"], "algebra");
  EXPECT_EQ(parse_algebra_file(show["file"].get<std::string>()).to_algebra(), catalog::so3());
  EXPECT_EQ(Json::parse(run_cli("catalog show borel_sl2_group").out)["identity"], Json::parse("[1.0,0.0]"));
}

TEST(Cli, TextFormat) {
  const CliRun r = run_cli("analyze catalog:heisenberg3 --format text");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("nilpotent"), std::string::npos);
  EXPECT_NE(r.out.find("true"), std::string::npos);
  EXPECT_EQ(r.out.find('{'), std::string::npos);
}

TEST(Cli, Verify) {
  const CliRun r = run_cli("verify --suite cohomology");
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("failed 0"), std::string::npos);
  EXPECT_EQ(run_cli("verify --suite nope").exit_code, 2);
}

TEST(Cli, ExitCodes) {
  const CliRun bad = run_cli("analyze " + data("bad_jacobi.alg"));
  EXPECT_EQ(bad.exit_code, 1);
  const Json j = Json::parse(bad.out);
  EXPECT_EQ(j["jacobi_ok"], false);
  ASSERT_EQ(j["violations"].size(), 1u);
  EXPECT_EQ(j["violations"][0]["m"], 2);
  EXPECT_FALSE(j.contains("betti"));
  EXPECT_EQ(run_cli("forms " + data("bad_jacobi.alg") + " --degree 1").exit_code, 1);
  EXPECT_EQ(run_cli("cohomology " + data("bad_jacobi.alg") + " --degree 1").exit_code, 1);

  EXPECT_EQ(run_cli("analyze /nonexistent.alg").exit_code, 2);
  EXPECT_EQ(run_cli("analyze catalog:nope").exit_code, 2);
  EXPECT_EQ(run_cli("analyze catalog:unipotent_sin").exit_code, 2);
  EXPECT_EQ(run_cli("forms catalog:sl2 --degree 9").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("curvature --frame sl2").exit_code, 2);

  char path[] = "/tmp/lieclass_bad_XXXXXX";
  const int fd = mkstemp(path);
  ASSERT_GE(fd, 0);
  const std::string text = "dim 2\n1 2 1 one\n";
  ASSERT_EQ(write(fd, text.data(), text.size()), static_cast<ssize_t>(text.size()));
  close(fd);
  const CliRun p = run_cli(std::string("analyze ") + path);
  EXPECT_EQ(p.exit_code, 2);
  EXPECT_NE(p.err.find("line 2, column 7"), std::string::npos) << p.err;
  std::remove(path);
}

TEST(Cli, Deterministic) {
  for (const char* args : {"analyze catalog:sl2_plus_abelian2", "forms catalog:so3 --degree 3",
                           "curvature --frame borel_frame", "catalog list"}) {
    const CliRun a = run_cli(args), b = run_cli(args);
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty());
  }
}
