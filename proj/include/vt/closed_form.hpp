#pragma once

#include <vector>

#include "vt/chirp.hpp"
#include "vt/kernel.hpp"

namespace vt {

/// Strict refuses divergent Gaussian integrals; Formal evaluates the same
/// closed formula as an analytic continuation (used for operator-identity
/// checks whose literal integrals diverge, e.g. iterating the Laplace-type
/// kernel).
enum class Continuation { Strict, Formal };

/// Closed-form transform of P(x) f(x) with f a Gaussian chirp.
///
/// The base output follows from completing the square; the polynomial part
/// rides along exactly because x^k f equals the k-th beta-derivative of f.
/// Writing T{f}(u) = A' exp(beta^2/(4p) + lambda beta u) exp(-pi sigma' u^2),
/// repeated d/d(beta) gives T{x^k f}(u) = R_k(beta, u) T{f}(u) with
///   R_0 = 1,  R_{k+1} = dR_k/dB + (B/(2p) + lambda u) R_k,
/// a bivariate polynomial recurrence carried exactly in the coefficients.
inline PolyChirpd closed_form_lct(const LctCoeffs& co, const PolyChirpd& f,
                                  Continuation cont = Continuation::Strict) {
  const Complex sigma_eff = f.base.sigma - kI * co.ab;
  if (cont == Continuation::Strict && !(sigma_eff.real() > 0.0))
    throw TransformError(ErrorCode::NonConvergent,
                         "Re(sigma - i a/b) = " + std::to_string(sigma_eff.real()) + " <= 0");
  const Complex p = kPi * sigma_eff;
  const Complex lambda = -kPi * kI * co.invb / p;

  PolyChirpd out;
  out.base.sigma = -kI * co.db + kPi * co.invb * co.invb / p;
  out.base.beta = lambda * f.base.beta;
  out.base.amp = f.base.amp * co.constant * principal_sqrt(kPi / p) *
                 std::exp(f.base.beta * f.base.beta / (4.0 * p));

  const int deg = int(f.poly.size()) - 1;
  if (deg == 0) {
    out.poly = Poly{f.poly[0]};
    return out;
  }

  // r[i][j] holds the coefficient of B^i u^j in R_k.
  using Bivariate = std::vector<std::vector<Complex>>;
  Bivariate r(1, std::vector<Complex>(1, Complex{1.0, 0.0}));
  Poly acc(deg + 1, Complex{0.0, 0.0});
  acc[0] = f.poly[0];

  const Complex half_inv_p = 1.0 / (2.0 * p);
  for (int k = 1; k <= deg; ++k) {
    Bivariate next(k + 1, std::vector<Complex>(k + 1, Complex{0.0, 0.0}));
    for (int i = 0; i < int(r.size()); ++i)
      for (int j = 0; j < int(r[i].size()); ++j) {
        const Complex v = r[i][j];
        if (v == Complex{0.0, 0.0}) continue;
        if (i >= 1) next[i - 1][j] += double(i) * v;  // dR/dB
        next[i + 1][j] += half_inv_p * v;             // (B/2p) R
        next[i][j + 1] += lambda * v;                 // (lambda u) R
      }
    r = std::move(next);
    // substitute B = beta, accumulate the weighted u-polynomial
    Complex bpow{1.0, 0.0};
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) acc[j] += f.poly[k] * r[i][j] * bpow;
      bpow *= f.base.beta;
    }
  }
  out.poly = std::move(acc);
  return out;
}

inline PolyChirpd closed_form_lct(const KernelSpec& spec, const PolyChirpd& f,
                                  Continuation cont = Continuation::Strict) {
  return closed_form_lct(lct_coeffs(spec), f, cont);
}

/// Exact image of a chirp under u -> prefactor e^{chirp u^2} f(scale u).
inline PolyChirpd apply_degenerate_chirp(const DegenerateAction& act, const PolyChirpd& f) {
  PolyChirpd out = scaled_arg(f, act.scale);
  out.base.amp *= act.prefactor;
  out.base.sigma -= act.chirp / kPi;
  return out;
}

}  // namespace vt
