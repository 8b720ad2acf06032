#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "desitter/app.hpp"

using namespace desitter;
using namespace desitter::app;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "desitter_cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> csv_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> r;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) r.push_back(std::stod(cell));
    rows.push_back(r);
  }
  return rows;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("solve writes samples with small residuals") {
  const Outcome o = cli({"solve", "--case", "spherical", "--lambda", "0", "--u0", "0.5", "--du0", "0", "--span", "0", "1.2"});
  CHECK(o.code == 0);
  CHECK(o.out.find("# t,u,du,kappa,residual") != std::string::npos);
  CHECK(o.out.find("# termination = SpanCompleted") != std::string::npos);
  const auto rows = csv_rows(o.out);
  REQUIRE(rows.size() > 1000);
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) CHECK(std::abs(rows[i][4]) < 1e-6);
}

TEST_CASE("exit-code contract") {
  const Outcome lightlike = cli({"solve", "--u0", "0.5", "--du0", "1.1276259652063807"});
  CHECK(lightlike.code == 1);
  CHECK(lightlike.err.find("degenerate initial velocity") != std::string::npos);
  const Outcome boundary = cli({"solve", "--case", "hyperbolic", "--t0", "0"});
  CHECK(boundary.code == 1);
  CHECK(boundary.err.find("outside positive half-space") != std::string::npos);
  const Outcome early = cli({"solve", "--t0", "0"});
  CHECK(early.code == 2);
  CHECK(early.out.find("# termination = LightlikeApproach") != std::string::npos);
  CHECK(cli({"solve", "--grid-n", "4"}).code == 1);
  CHECK(cli({"solve", "--step", "-1"}).code == 1);
  CHECK(cli({"solve", "--case", "elliptic"}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({}).code == 1);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"export", "--curve", "equator", "-o", "/nonexistent-dir/x.csv"}).code == 1);
}

TEST_CASE("verify verdicts") {
  const Outcome par = cli({"verify", "--case", "parabolic", "--lambda", "0"});
  CHECK(par.code == 0);
  CHECK(par.out.find("verdict = catenary, minimal") != std::string::npos);
  CHECK(par.out.find("result = PASS") != std::string::npos);

  RunConfig c = defaults_for(CaseKind::Spherical);
  c.lambda = 0.5;
  const VerifyReport sph = verify(c);
  CHECK(sph.max_residual < 1e-6);
  CHECK(sph.min_abs_H_forms > 1e-2);
  CHECK(sph.verdict == "catenary, not minimal");
  CHECK(sph.passed);

  const VerifyReport in = verify(defaults_for(CaseKind::Intrinsic));
  CHECK(in.verdict == "intrinsic catenary, not minimal");
  CHECK(in.max_path_disagreement < 1e-8);
  CHECK(in.passed);

  // Demanding minimality of a lambda != 0 catenary fails verification.
  c.thresholds.h_floor = 1e3;
  CHECK_FALSE(verify(c).passed);
}

TEST_CASE("verify is deterministic and its JSON parses") {
  const Outcome a = cli({"verify", "--case", "hyperbolic"});
  const Outcome b = cli({"verify", "--case", "hyperbolic"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Outcome j = cli({"verify", "--case", "hyperbolic", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["meta"]["case"] == "hyperbolic");
  CHECK(doc["rows"][0]["result"] == "PASS");
}

TEST_CASE("export") {
  SUBCASE("equator lies on z = 0 and the unit circle") {
    const Outcome o = cli({"export", "--curve", "equator", "--span", "0", "3", "--grid-n", "50"});
    CHECK(o.code == 0);
    const auto rows = csv_rows(o.out);
    CHECK(rows.size() == 51);
    for (const auto& r : rows) {
      CHECK(std::abs(r[1] * r[1] + r[2] * r[2] + r[3] * r[3] - 1) < 1e-12);
      CHECK(std::abs(r[3]) < 1e-12);
    }
  }
  SUBCASE("solved catenary lies on the pseudosphere") {
    const Outcome o = cli({"export", "--case", "spherical"});
    CHECK(o.code == 0);
    for (const auto& r : csv_rows(o.out)) CHECK(std::abs(r[1] * r[1] + r[2] * r[2] - r[3] * r[3] - 1) < 1e-10);
  }
  SUBCASE("json and surface file") {
    const auto dir = std::filesystem::temp_directory_path() / "desitter_test_app";
    std::filesystem::create_directories(dir);
    const auto curve = (dir / "curve.json").string(), surf = (dir / "surf.json").string();
    const std::vector<std::string> args{"export", "--case", "hyperbolic", "--format", "json", "-o", curve,
                                        "--surface-output", surf, "--s-count", "3"};
    const Outcome o = cli(args);
    CHECK(o.code == 0);
    const auto doc = nlohmann::json::parse(slurp(curve));
    CHECK(doc.is_object());
    CHECK(doc["schema"] == 1);
    CHECK(doc["meta"]["command"] == "export");
    CHECK(doc["meta"]["lambda"] == 0.0);
    CHECK(doc["rows"].size() > 100);
    const auto grid = nlohmann::json::parse(slurp(surf));
    CHECK(grid["rows"].size() == 3 * doc["rows"].size());
    for (const auto& r : grid["rows"]) {
      const double x1 = r["x1"], x2 = r["x2"], x3 = r["x3"], x4 = r["x4"];
      CHECK(std::abs(x1 * x1 + x2 * x2 - x3 * x3 + x4 * x4 - 1) < 1e-10);
    }
    // Byte-identical reruns.
    const auto first = slurp(curve), first_grid = slurp(surf);
    CHECK(cli(args).code == 0);
    CHECK(slurp(curve) == first);
    CHECK(slurp(surf) == first_grid);
    std::filesystem::remove_all(dir);
  }
}

TEST_CASE("scan") {
  const Outcome o = cli({"scan", "--case", "spherical", "--lambda", "0.5", "--lambdas", "0", "0.25", "0.5", "0.75"});
  CHECK(o.code == 0);
  CHECK(o.out.find("# argmin_lambda = 0.5") != std::string::npos);
  CHECK(csv_rows(o.out).size() == 4);
}
