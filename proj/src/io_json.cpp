#include "vt/io_json.hpp"

namespace vt {

using nlohmann::json;

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex: expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const Quaterniond& q) { return json::array({q.a, q.b, q.c, q.d}); }

Quaterniond quat_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("quaternion: expected [a, b, c, d]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

json to_json(const Sl2cMatrixd& m) {
  return json::array({json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                      json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

Sl2cMatrixd matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() ||
      j[1].size() != 2)
    throw std::invalid_argument("matrix: expected 2x2 array of [re, im] pairs");
  Sl2cMatrixd m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = complex_from_json(j[r][c]);
  return m;
}

json to_json(const GaussianChirpd& f) {
  return json{{"amp", to_json(f.amp)}, {"sigma", to_json(f.sigma)}, {"beta", to_json(f.beta)}};
}

GaussianChirpd chirp_from_json(const json& j) {
  GaussianChirpd f;
  f.amp = complex_from_json(j.at("amp"));
  f.sigma = complex_from_json(j.at("sigma"));
  f.beta = complex_from_json(j.at("beta"));
  if (!(f.sigma.real() > 0.0))
    throw std::invalid_argument("chirp: Re(sigma) must be positive for an input signal");
  return f;
}

json to_json(const NamedTransform& t) {
  json j;
  j["kind"] = to_string(t.kind());
  switch (t.kind()) {
    case TransformKind::FrFT:
    case TransformKind::ScaleI:
    case TransformKind::FracLaplaceK:
    case TransformKind::HybridH:
      j["theta"] = t.theta();
      break;
    case TransformKind::Versor:
      j["xi1"] = t.angles().xi1;
      j["eta"] = t.angles().eta;
      j["xi2"] = t.angles().xi2;
      break;
    case TransformKind::Basis:
      j["which"] = to_string(t.basis());
      break;
    case TransformKind::RawLct:
      j["matrix"] = to_json(t.matrix());
      break;
  }
  return j;
}

NamedTransform transform_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "frft") return make_frft(j.at("theta").get<double>());
  if (kind == "scale") return make_scale(j.at("theta").get<double>());
  if (kind == "laplace") return make_frac_laplace(j.at("theta").get<double>());
  if (kind == "hybrid") return make_hybrid(j.at("theta").get<double>());
  if (kind == "versor")
    return make_versor(
        {j.at("xi1").get<double>(), j.at("eta").get<double>(), j.at("xi2").get<double>()});
  if (kind == "basis") {
    const std::string which = j.at("which").get<std::string>();
    if (which == "1" || which == "one") return make_basis(BasisOp::One);
    if (which == "P" || which == "p") return make_basis(BasisOp::P);
    if (which == "I" || which == "i") return make_basis(BasisOp::I);
    if (which == "J" || which == "j") return make_basis(BasisOp::J);
    if (which == "K" || which == "k") return make_basis(BasisOp::K);
    throw std::invalid_argument("basis: expected one of 1, P, I, J, K");
  }
  if (kind == "raw") {
    const Sl2cMatrixd m = matrix_from_json(j.at("matrix"));
    if (!is_unit_det(m, 1e-9)) throw std::invalid_argument("raw matrix: determinant must be 1");
    return make_raw(m);
  }
  throw std::invalid_argument("unknown transform kind: " + kind);
}

json to_json(const IdentityReport& r) {
  return json{{"identity", r.identity}, {"params", r.params},       {"lhs_norm", r.lhs_norm},
              {"rhs_norm", r.rhs_norm}, {"residual", r.residual},   {"tolerance", r.tolerance},
              {"verdict", to_string(r.verdict)}};
}

}  // namespace vt
