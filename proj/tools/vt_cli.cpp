// vt: apply linear canonical, fractional Fourier, and versor transforms from
// the command line, verify their operator identities, and print the algebra
// tables. Exit codes: 0 ok, 1 failed verification/table mismatch, 2 bad
// arguments, 3 non-convergent or (near-)degenerate request, 4 node budget.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vt/engine.hpp"
#include "vt/identities.hpp"
#include "vt/io_json.hpp"
#include "vt/sampled.hpp"
#include "vt/tables.hpp"
#include "vt/transforms.hpp"

namespace {

constexpr const char* kVersion = "vt 0.1.0";

int exit_code_for(const vt::TransformError& e) {
  switch (e.code()) {
    case vt::ErrorCode::NodeBudgetExceeded: return 4;
    default: return 3;
  }
}

struct TransformFlags {
  std::vector<double> frft, versor, hybrid, scale, laplace;
  std::string basis, matrix_json, descriptor_json;
  bool degrees = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--frft", frft, "fractional Fourier transform, angle in radians")->expected(1);
    cmd->add_option("--versor", versor, "versor transform, angles xi1 eta xi2")->expected(3);
    cmd->add_option("--hybrid", hybrid, "Fourier/Laplace hybrid, angle theta")->expected(1);
    cmd->add_option("--scale", scale, "domain scaling by e^{-i theta}")->expected(1);
    cmd->add_option("--laplace", laplace, "fractional Laplace transform, angle theta")->expected(1);
    cmd->add_option("--basis", basis, "basis operator: 1, P, I, J, or K");
    cmd->add_option("--matrix", matrix_json, "raw unit-determinant 2x2 matrix as JSON");
    cmd->add_option("--descriptor", descriptor_json, "transform descriptor as JSON");
    cmd->add_flag("--degrees", degrees, "interpret angles as degrees");
  }

  double rad(double v) const { return degrees ? v * vt::kPi / 180.0 : v; }

  vt::NamedTransform build() const {
    int given = int(!frft.empty()) + int(!versor.empty()) + int(!hybrid.empty()) +
                int(!scale.empty()) + int(!laplace.empty()) + int(!basis.empty()) +
                int(!matrix_json.empty()) + int(!descriptor_json.empty());
    if (given != 1)
      throw CLI::ValidationError("transform", "specify exactly one transform");
    if (!frft.empty()) return vt::make_frft(rad(frft[0]));
    if (!versor.empty()) return vt::make_versor({rad(versor[0]), rad(versor[1]), rad(versor[2])});
    if (!hybrid.empty()) return vt::make_hybrid(rad(hybrid[0]));
    if (!scale.empty()) return vt::make_scale(rad(scale[0]));
    if (!laplace.empty()) return vt::make_frac_laplace(rad(laplace[0]));
    if (!basis.empty()) {
      nlohmann::json j{{"kind", "basis"}, {"which", basis}};
      return vt::transform_from_json(j);
    }
    if (!matrix_json.empty()) {
      nlohmann::json j{{"kind", "raw"}, {"matrix", nlohmann::json::parse(matrix_json)}};
      return vt::transform_from_json(j);
    }
    return vt::transform_from_json(nlohmann::json::parse(descriptor_json));
  }
};

struct QuadFlags {
  double env_tol = 1e-12;
  double oversample = 8.0;
  int max_nodes = 1 << 20;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--env-tol", env_tol, "envelope truncation tolerance");
    cmd->add_option("--oversample", oversample, "samples per oscillation cycle");
    cmd->add_option("--max-nodes", max_nodes, "quadrature node budget");
  }

  vt::QuadratureConfig config() const { return {env_tol, oversample, max_nodes}; }
};

void write_output(const vt::SampledSignal& s, const std::string& path) {
  if (path.empty()) {
    vt::write_csv(std::cout, s, "u");
  } else {
    vt::write_csv_file(path, s, "u");
  }
}

int cmd_transform(const TransformFlags& tf, const QuadFlags& qf, const std::string& chirp_json,
                  const std::string& csv_path, const std::string& method, double u0, double du,
                  int n, const std::string& output) {
  const vt::NamedTransform t = tf.build();
  const vt::GridSpec grid{u0, du, n};
  if (!(du > 0.0) || n < 1) throw CLI::ValidationError("grid", "--du must be > 0 and --n >= 1");

  if (!chirp_json.empty()) {
    const vt::GaussianChirpd f = vt::chirp_from_json(nlohmann::json::parse(chirp_json));
    const vt::PolyChirpd pf = vt::as_poly_chirp(f);
    vt::SampledSignal out = (method == "oracle")
                                ? vt::sample(t.apply_closed_form(pf), grid.u0, grid.du, grid.n)
                                : t.apply_quadrature(pf, grid, qf.config());
    write_output(out, output);
    return 0;
  }
  if (method == "oracle")
    throw CLI::ValidationError("--method", "the oracle path needs a chirp input");
  const vt::SampledSignal in = vt::read_csv_file(csv_path);
  write_output(t.apply_sampled(in, grid, qf.config()), output);
  return 0;
}

int cmd_verify(const TransformFlags& tf, const QuadFlags& qf, const std::string& name,
               std::uint64_t seed, int order, const std::string& output) {
  const vt::NamedTransform t = tf.build();
  vt::VerifyInputs in = vt::draw_verify_inputs(t, seed);
  in.order = order;
  vt::CheckOptions opt;
  opt.quad = qf.config();

  std::vector<vt::IdentityReport> reports;
  if (name == "all") {
    reports = vt::run_all_identities(t, in, opt);
  } else {
    reports.push_back(vt::run_identity(name, t, in, opt));
  }

  nlohmann::json out = nlohmann::json::array();
  bool failed = false;
  for (const auto& r : reports) {
    out.push_back(vt::to_json(r));
    failed = failed || r.verdict == vt::Verdict::Fail;
  }
  const std::string text = out.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(output);
    os << text;
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear canonical / fractional Fourier / versor transform toolkit"};
  app.require_subcommand(1);

  // transform
  auto* transform = app.add_subcommand("transform", "apply a transform and write u,re,im CSV");
  TransformFlags t_tf;
  QuadFlags t_qf;
  t_tf.add_to(transform);
  t_qf.add_to(transform);
  std::string t_chirp, t_csv, t_method = "quadrature", t_output;
  double t_u0 = 0.0, t_du = 0.0;
  int t_n = 0;
  transform->add_option("--chirp", t_chirp, "Gaussian chirp input as JSON");
  transform->add_option("--csv", t_csv, "sampled input as x,re,im CSV file");
  transform->add_option("--method", t_method, "quadrature | oracle")
      ->check(CLI::IsMember({"quadrature", "oracle"}));
  transform->add_option("--u0", t_u0, "output grid origin")->required();
  transform->add_option("--du", t_du, "output grid spacing")->required();
  transform->add_option("--n", t_n, "output grid size")->required();
  transform->add_option("--output", t_output, "output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "check transform identities, print JSON reports");
  TransformFlags v_tf;
  QuadFlags v_qf;
  std::string v_name;
  std::uint64_t v_seed = 0;
  int v_order = 2;
  std::string v_output;
  verify->add_option("identity", v_name, "shift-in|shift-out|deriv-in|deriv-out|parseval|conv-time|conv-freq|corr-time|corr-freq|all")
      ->required();
  v_tf.add_to(verify);
  v_qf.add_to(verify);
  verify->add_option("--seed", v_seed, "seed for the random test inputs");
  verify->add_option("--order", v_order, "derivative order (1..3)")->check(CLI::Range(1, 3));
  verify->add_option("--output", v_output, "output file (default stdout)");

  // compose
  auto* compose = app.add_subcommand("compose", "matrix of the composite of two transforms");
  std::string c_lhs, c_rhs;
  compose->add_option("--lhs", c_lhs, "left transform descriptor JSON")->required();
  compose->add_option("--rhs", c_rhs, "right transform descriptor JSON")->required();

  // table
  auto* table = app.add_subcommand("table", "print an operator table");
  std::string tbl_name;
  table->add_option("name", tbl_name, "composition | frft-cycle | hybrid")
      ->required()
      ->check(CLI::IsMember({"composition", "frft-cycle", "hybrid"}));

  auto* version = app.add_subcommand("version", "print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (transform->parsed()) {
      if (t_chirp.empty() == t_csv.empty())
        throw CLI::ValidationError("input", "provide exactly one of --chirp or --csv");
      return cmd_transform(t_tf, t_qf, t_chirp, t_csv, t_method, t_u0, t_du, t_n, t_output);
    }
    if (verify->parsed()) {
      bool known = v_name == "all";
      for (const auto& nm : vt::identity_names()) known = known || nm == v_name;
      if (!known) throw CLI::ValidationError("identity", "unknown identity name: " + v_name);
      return cmd_verify(v_tf, v_qf, v_name, v_seed, v_order, v_output);
    }
    if (compose->parsed()) {
      const vt::NamedTransform lhs = vt::transform_from_json(nlohmann::json::parse(c_lhs));
      const vt::NamedTransform rhs = vt::transform_from_json(nlohmann::json::parse(c_rhs));
      nlohmann::json out{{"matrix", vt::to_json(vt::compose_matrices(lhs, rhs))}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (table->parsed()) {
      vt::TableResult res;
      if (tbl_name == "composition") res = vt::composition_table_text();
      if (tbl_name == "frft-cycle") res = vt::frft_cycle_table_text();
      if (tbl_name == "hybrid") res = vt::hybrid_table_text();
      std::cout << res.text;
      if (!res.matches_pinned) {
        std::cerr << "table does not match the pinned expectation\n";
        return 1;
      }
      return 0;
    }
    if (version->parsed()) {
      std::cout << kVersion << "\n";
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "JSON: " << e.what() << "\n";
    return 2;
  } catch (const vt::TransformError& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  return 2;
}
