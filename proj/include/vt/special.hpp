#pragma once

#include <cmath>

#include "vt/poly.hpp"
#include "vt/types.hpp"

namespace vt {

/// Principal-branch complex square root: Re(result) >= 0, and exactly +i*sqrt(|z|)
/// on the negative real axis regardless of the sign of the zero imaginary part.
inline Complex principal_sqrt(Complex z) {
  if (z.imag() == 0.0 && z.real() < 0.0) return Complex{0.0, std::sqrt(-z.real())};
  return std::sqrt(z);
}

/// Probabilists' Hermite polynomial He_m via He_{m+1}(y) = y He_m(y) - m He_{m-1}(y).
inline Complex hermite_prob(int m, Complex y) {
  if (m < 0) throw std::invalid_argument("hermite_prob: negative order");
  Complex p0{1.0, 0.0};
  if (m == 0) return p0;
  Complex p1 = y;
  for (int k = 1; k < m; ++k) {
    Complex p2 = y * p1 - double(k) * p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

/// Physicists' Hermite polynomial H_m via H_{m+1}(y) = 2y H_m(y) - 2m H_{m-1}(y).
inline Complex hermite_phys(int m, Complex y) {
  if (m < 0) throw std::invalid_argument("hermite_phys: negative order");
  Complex p0{1.0, 0.0};
  if (m == 0) return p0;
  Complex p1 = 2.0 * y;
  for (int k = 1; k < m; ++k) {
    Complex p2 = 2.0 * y * p1 - 2.0 * double(k) * p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

struct ChirpDerivativeRequest {
  int m = 0;       // derivative order, capped at 32
  Complex c;       // chirp coefficient: g_m(x) = e^{-c x^2} d^m/dx^m e^{c x^2}
  Complex x;       // evaluation point
};

/// Coefficients of g_m as a degree-m polynomial, from g_0 = 1 and
/// g_{m+1} = g_m' + 2 c x g_m. Exact in the coefficients.
inline Poly chirp_derivative_poly(int m, Complex c) {
  if (m < 0 || m > 32) throw std::invalid_argument("chirp_derivative_poly: order out of range [0,32]");
  Poly g{Complex{1.0, 0.0}};
  for (int step = 0; step < m; ++step) {
    Poly next(g.size() + 1, Complex{0.0, 0.0});
    for (std::size_t k = 1; k < g.size(); ++k) next[k - 1] += double(k) * g[k];
    for (std::size_t k = 0; k < g.size(); ++k) next[k + 1] += 2.0 * c * g[k];
    g = std::move(next);
  }
  return g;
}

inline Complex chirp_derivative(const ChirpDerivativeRequest& req) {
  return poly_eval(chirp_derivative_poly(req.m, req.c), req.x);
}

/// Closed-form line integral of e^{-p x^2 + q x} over the real axis:
/// sqrt(pi/p) * e^{q^2/(4p)}. Requires Re(p) > 0.
inline Complex gaussian_integral(Complex p, Complex q) {
  if (!(p.real() > 0.0))
    throw TransformError(ErrorCode::NonConvergent,
                         "gaussian_integral requires Re(p) > 0, got Re(p) = " + std::to_string(p.real()));
  return principal_sqrt(kPi / p) * std::exp(q * q / (4.0 * p));
}

/// Same formula without the convergence gate; used where the analytic
/// continuation of the integral is the intended meaning.
inline Complex gaussian_integral_formula(Complex p, Complex q) {
  return principal_sqrt(kPi / p) * std::exp(q * q / (4.0 * p));
}

}  // namespace vt
