#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli_runner.hpp"
#include "vt/sampled.hpp"

using namespace vt;
using vtt::run_cli;

namespace {

std::string cli() {
  const std::string p = vtt::cli_path_from_env();
  REQUIRE_MESSAGE(!p.empty(), "set VT_CLI to the vt binary path");
  return p;
}

constexpr const char* kUnitChirp = R"('{"amp":[1,0],"sigma":[1,0],"beta":[0,0]}')";

}  // namespace

TEST_CASE("transform: Fourier of the unit Gaussian writes a Gaussian CSV") {
  const auto res = run_cli(cli(), std::string("transform --frft 1.5707963 --chirp ") + kUnitChirp +
                                      " --u0 -2 --du 0.05 --n 81");
  REQUIRE(res.exit_code == 0);
  std::stringstream ss(res.out);
  const SampledSignal s = read_csv(ss);
  REQUIRE(s.size() == 81);
  double worst = 0.0;
  for (int i = 0; i < s.size(); ++i) {
    const double u = s.x_at(i);
    worst = std::max(worst, std::abs(s.values[i] - std::exp(-kPi * u * u)));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("transform: the stated Laplace-type versor example runs convergently") {
  const auto res = run_cli(
      cli(),
      "transform --versor 0.0 0.785398 1.570796 --chirp '{\"amp\":[1,0],\"sigma\":[2,0],\"beta\":[0,0]}' "
      "--u0 -0.5 --du 0.05 --n 21 --method oracle");
  CHECK(res.exit_code == 0);
  std::stringstream ss(res.out);
  const SampledSignal s = read_csv(ss);
  CHECK(s.size() == 21);
}

TEST_CASE("transform: frft 0 echoes the input samples") {
  const SampledSignal in = sample(GaussianChirpd{}, -2.0, 0.1, 41);
  write_csv_file("echo_in.tmp.csv", in, "x");
  const auto res = run_cli(cli(), "transform --frft 0 --csv echo_in.tmp.csv --u0 -2 --du 0.1 --n 41");
  REQUIRE(res.exit_code == 0);
  std::stringstream ss(res.out);
  const SampledSignal out = read_csv(ss);
  REQUIRE(out.size() == in.size());
  for (int i = 0; i < in.size(); ++i) CHECK(std::abs(out.values[i] - in.values[i]) <= 1e-12);
  std::remove("echo_in.tmp.csv");
}

TEST_CASE("transform round trip: frft theta then -theta recovers the samples") {
  const SampledSignal in = sample(GaussianChirpd{}, -6.0, 0.01, 1201);
  write_csv_file("rt_in.tmp.csv", in, "x");
  const auto fwd = run_cli(cli(),
                           "transform --frft 1.0471975511965976 --csv rt_in.tmp.csv "
                           "--u0 -6 --du 0.01 --n 1201 --output rt_mid.tmp.csv");
  REQUIRE(fwd.exit_code == 0);
  const auto back = run_cli(cli(),
                            "transform --frft -1.0471975511965976 --csv rt_mid.tmp.csv "
                            "--u0 -6 --du 0.01 --n 1201 --output rt_back.tmp.csv");
  REQUIRE(back.exit_code == 0);
  const SampledSignal rec = read_csv_file("rt_back.tmp.csv");
  REQUIRE(rec.size() == in.size());
  double worst = 0.0;
  for (int i = 0; i < in.size(); ++i) worst = std::max(worst, std::abs(rec.values[i] - in.values[i]));
  CHECK(worst <= 1e-5);
  std::remove("rt_in.tmp.csv");
  std::remove("rt_mid.tmp.csv");
  std::remove("rt_back.tmp.csv");
}

TEST_CASE("verify all at the pi/3 rotation passes nine checks") {
  const auto res = run_cli(cli(), "verify all --frft 1.0471976 --seed 0");
  REQUIRE(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 9);
  for (const auto& rep : j) CHECK(rep.at("verdict") == "Pass");
}

TEST_CASE("verify parseval on a complex-matrix versor is report-only") {
  const auto res = run_cli(cli(), "verify parseval --versor 0 0.785398 1.570796 --seed 1");
  REQUIRE(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0].at("verdict") == "ReportOnly");
  CHECK(j[0].at("residual").get<double>() >= 0.0);
}

TEST_CASE("exit codes") {
  // 2: parse errors
  CHECK(run_cli(cli(), "transform --frft 1.0").exit_code == 2);               // missing grid
  CHECK(run_cli(cli(), "transform --frft 1.0 --u0 0 --du 0.1 --n 5").exit_code == 2);  // no input
  CHECK(run_cli(cli(), std::string("transform --frft 1 --basis J --chirp ") + kUnitChirp +
                           " --u0 0 --du 0.1 --n 5")
            .exit_code == 2);  // two transforms
  CHECK(run_cli(cli(), "verify nonsense --frft 1.0").exit_code == 2);
  CHECK(run_cli(cli(), "nonsense").exit_code == 2);

  // 3: near-degenerate quadrature request
  CHECK(run_cli(cli(), "verify shift-in --frft 0.0001").exit_code == 3);

  // 3: non-convergent request
  CHECK(run_cli(cli(),
                "transform --laplace 0.785398 --chirp '{\"amp\":[1,0],\"sigma\":[0.5,0],\"beta\":[0,0]}' "
                "--u0 0 --du 0.1 --n 5")
            .exit_code == 3);

  // 4: starved node budget
  CHECK(run_cli(cli(), std::string("transform --frft 0.4 --chirp ") + kUnitChirp +
                           " --u0 -8 --du 0.1 --n 161 --max-nodes 16")
            .exit_code == 4);

  // 1: a failing gated identity (cross-correlation needs real coefficients)
  CHECK(run_cli(cli(), "verify corr-time --versor 0.4 1.1 0.0 --seed 0").exit_code == 1);
}

TEST_CASE("deterministic output bytes") {
  const std::string args = std::string("transform --frft 0.9 --chirp ") + kUnitChirp +
                           " --u0 -1 --du 0.05 --n 41";
  const auto a = run_cli(cli(), args);
  const auto b = run_cli(cli(), args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  const auto v1 = run_cli(cli(), "verify all --frft 0.9 --seed 7");
  const auto v2 = run_cli(cli(), "verify all --frft 0.9 --seed 7");
  CHECK(v1.out == v2.out);
}

TEST_CASE("tables, compose, version") {
  const auto comp = run_cli(cli(), "table composition");
  CHECK(comp.exit_code == 0);
  CHECK(comp.out.find("PK") != std::string::npos);

  CHECK(run_cli(cli(), "table frft-cycle").exit_code == 0);
  const auto hyb = run_cli(cli(), "table hybrid");
  CHECK(hyb.exit_code == 0);
  CHECK(hyb.out.find("K^-1") != std::string::npos);

  const auto cmp = run_cli(cli(),
                           "compose --lhs '{\"kind\":\"basis\",\"which\":\"I\"}' "
                           "--rhs '{\"kind\":\"basis\",\"which\":\"J\"}'");
  REQUIRE(cmp.exit_code == 0);
  const auto j = nlohmann::json::parse(cmp.out);
  // I * J = K = [[0, i], [i, 0]]
  CHECK(j.at("matrix")[0][1][1] == 1.0);
  CHECK(j.at("matrix")[1][0][1] == 1.0);

  const auto ver = run_cli(cli(), "version");
  CHECK(ver.exit_code == 0);
  CHECK(ver.out.find("vt") != std::string::npos);

  // degrees flag: 90 degrees is the Fourier point
  const auto deg = run_cli(cli(), std::string("transform --frft 90 --degrees --chirp ") + kUnitChirp +
                                      " --u0 0 --du 0.5 --n 3 --method oracle");
  REQUIRE(deg.exit_code == 0);
  std::stringstream ss(deg.out);
  const SampledSignal s = read_csv(ss);
  CHECK(std::abs(s.values[0] - 1.0) <= 1e-12);
}
