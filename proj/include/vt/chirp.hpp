#pragma once

#include <cmath>

#include "vt/poly.hpp"
#include "vt/special.hpp"
#include "vt/types.hpp"

namespace vt {

/// f(x) = amp * exp(-pi*sigma*x^2 + beta*x). Inputs to the transforms need
/// Re(sigma) > 0; transform outputs may leave that half-plane (Laplace-type
/// kernels produce growing Gaussians) and stay evaluable pointwise.
template <typename Scalar = double>
struct GaussianChirp {
  std::complex<Scalar> amp{1, 0};
  std::complex<Scalar> sigma{1, 0};
  std::complex<Scalar> beta{0, 0};
};

using GaussianChirpd = GaussianChirp<double>;

template <typename Scalar>
std::complex<Scalar> eval_chirp(const GaussianChirp<Scalar>& f, std::complex<Scalar> x) {
  const Scalar pi = Scalar(kPi);
  return f.amp * std::exp(-pi * f.sigma * x * x + f.beta * x);
}

template <typename Scalar>
bool is_integrable(const GaussianChirp<Scalar>& f) {
  return f.sigma.real() > Scalar(0);
}

template <typename Scalar>
GaussianChirp<Scalar> conjugated(const GaussianChirp<Scalar>& f) {
  return {std::conj(f.amp), std::conj(f.sigma), std::conj(f.beta)};
}

/// f(x - x0) re-expressed in the same family.
template <typename Scalar>
GaussianChirp<Scalar> shifted(const GaussianChirp<Scalar>& f, std::complex<Scalar> x0) {
  const Scalar pi = Scalar(kPi);
  GaussianChirp<Scalar> g = f;
  g.amp = f.amp * std::exp(-pi * f.sigma * x0 * x0 - f.beta * x0);
  g.beta = f.beta + Scalar(2) * pi * f.sigma * x0;
  return g;
}

/// e^{mu x} f(x).
template <typename Scalar>
GaussianChirp<Scalar> modulated(const GaussianChirp<Scalar>& f, std::complex<Scalar> mu) {
  GaussianChirp<Scalar> g = f;
  g.beta += mu;
  return g;
}

/// e^{gamma x^2} f(x).
template <typename Scalar>
GaussianChirp<Scalar> gauss_weighted(const GaussianChirp<Scalar>& f, std::complex<Scalar> gamma) {
  GaussianChirp<Scalar> g = f;
  g.sigma -= gamma / Scalar(kPi);
  return g;
}

template <typename Scalar>
GaussianChirp<Scalar> chirp_product(const GaussianChirp<Scalar>& f, const GaussianChirp<Scalar>& g) {
  return {f.amp * g.amp, f.sigma + g.sigma, f.beta + g.beta};
}

/// [f * g](x) = int f(t) g(x - t) dt, closed form. Needs both factors integrable.
template <typename Scalar>
GaussianChirp<Scalar> convolve_closed(const GaussianChirp<Scalar>& f, const GaussianChirp<Scalar>& g) {
  if (!is_integrable(f) || !is_integrable(g))
    throw TransformError(ErrorCode::NonConvergent, "convolution of non-integrable chirps");
  const Scalar pi = Scalar(kPi);
  const std::complex<Scalar> S = f.sigma + g.sigma;
  GaussianChirp<Scalar> out;
  out.amp = f.amp * g.amp * principal_sqrt(Scalar(1) / S) *
            std::exp((f.beta - g.beta) * (f.beta - g.beta) / (Scalar(4) * pi * S));
  out.sigma = f.sigma * g.sigma / S;
  out.beta = (f.beta * g.sigma + g.beta * f.sigma) / S;
  return out;
}

/// [f (star) g](x) = int conj(f(t)) g(x + t) dt = [fcp * g](x) with
/// fcp(t) = conj(f(-t)).
template <typename Scalar>
GaussianChirp<Scalar> crosscorr_closed(const GaussianChirp<Scalar>& f, const GaussianChirp<Scalar>& g) {
  const GaussianChirp<Scalar> fcp{std::conj(f.amp), std::conj(f.sigma), -std::conj(f.beta)};
  return convolve_closed(fcp, g);
}

/// int f(x) conj(g(x)) dx, closed form.
template <typename Scalar>
std::complex<Scalar> l2_inner_closed(const GaussianChirp<Scalar>& f, const GaussianChirp<Scalar>& g) {
  const Scalar pi = Scalar(kPi);
  return f.amp * std::conj(g.amp) *
         gaussian_integral(pi * (f.sigma + std::conj(g.sigma)), f.beta + std::conj(g.beta));
}

// -------- polynomial-weighted chirps --------

/// P(x) * amp * exp(-pi*sigma*x^2 + beta*x); derivatives and moment weights of
/// a Gaussian chirp live here.
template <typename Scalar = double>
struct PolyChirp {
  GaussianChirp<Scalar> base;
  Poly poly{Complex{1.0, 0.0}};
};

using PolyChirpd = PolyChirp<double>;

template <typename Scalar>
PolyChirp<Scalar> as_poly_chirp(const GaussianChirp<Scalar>& f) {
  return {f, Poly{Complex{1.0, 0.0}}};
}

template <typename Scalar>
std::complex<Scalar> eval_chirp(const PolyChirp<Scalar>& f, std::complex<Scalar> x) {
  return poly_eval(f.poly, x) * eval_chirp(f.base, x);
}

template <typename Scalar>
PolyChirp<Scalar> derivative(const PolyChirp<Scalar>& f) {
  const Scalar pi = Scalar(kPi);
  // (P e^{g})' = (P' + g' P) e^{g} with g' = -2 pi sigma x + beta
  Poly lin{f.base.beta, Scalar(-2) * pi * f.base.sigma};
  PolyChirp<Scalar> out = f;
  out.poly = poly_add(poly_derivative(f.poly), poly_mul(lin, f.poly));
  return out;
}

template <typename Scalar>
PolyChirp<Scalar> derivative(const PolyChirp<Scalar>& f, int n) {
  PolyChirp<Scalar> out = f;
  for (int k = 0; k < n; ++k) out = derivative(out);
  return out;
}

template <typename Scalar>
PolyChirp<Scalar> times_poly(const PolyChirp<Scalar>& f, const Poly& p) {
  PolyChirp<Scalar> out = f;
  out.poly = poly_mul(f.poly, p);
  return out;
}

template <typename Scalar>
PolyChirp<Scalar> gauss_weighted(const PolyChirp<Scalar>& f, std::complex<Scalar> gamma) {
  PolyChirp<Scalar> out = f;
  out.base = gauss_weighted(f.base, gamma);
  return out;
}

template <typename Scalar>
PolyChirp<Scalar> modulated(const PolyChirp<Scalar>& f, std::complex<Scalar> mu) {
  PolyChirp<Scalar> out = f;
  out.base = modulated(f.base, mu);
  return out;
}

template <typename Scalar>
PolyChirp<Scalar> shifted(const PolyChirp<Scalar>& f, std::complex<Scalar> x0) {
  PolyChirp<Scalar> out;
  out.base = shifted(f.base, x0);
  out.poly = poly_shift_arg(f.poly, -x0);
  return out;
}

template <typename Scalar>
PolyChirp<Scalar> conjugated(const PolyChirp<Scalar>& f) {
  return {conjugated(f.base), poly_conj_coeffs(f.poly)};
}

/// f(s*x).
template <typename Scalar>
PolyChirp<Scalar> scaled_arg(const PolyChirp<Scalar>& f, std::complex<Scalar> s) {
  PolyChirp<Scalar> out;
  out.base.amp = f.base.amp;
  out.base.sigma = f.base.sigma * s * s;
  out.base.beta = f.base.beta * s;
  out.poly = poly_scale_arg(f.poly, s);
  return out;
}

}  // namespace vt
