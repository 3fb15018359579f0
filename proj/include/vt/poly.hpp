#pragma once

#include <vector>

#include "vt/types.hpp"

namespace vt {

/// Dense polynomial with complex coefficients, ascending powers: p[k] * x^k.
using Poly = std::vector<Complex>;

inline Complex poly_eval(const Poly& p, Complex x) {
  Complex acc{0.0, 0.0};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return {Complex{0.0, 0.0}};
  Poly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = double(k) * p[k];
  return d;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

/// p(s*x): coefficient k picks up s^k.
inline Poly poly_scale_arg(const Poly& p, Complex s) {
  Poly out(p);
  Complex sk{1.0, 0.0};
  for (auto& c : out) {
    c *= sk;
    sk *= s;
  }
  return out;
}

/// p(x + t), expanded by the binomial theorem.
inline Poly poly_shift_arg(const Poly& p, Complex t) {
  Poly out(p.size(), Complex{0.0, 0.0});
  for (std::size_t k = 0; k < p.size(); ++k) {
    // row[j] = C(k, j) * t^{k-j}, so p[k]*(x+t)^k contributes p[k]*row[j] to x^j
    std::vector<Complex> row(k + 1);
    row[k] = Complex{1.0, 0.0};
    for (int j = int(k) - 1; j >= 0; --j) row[j] = row[j + 1] * t * double(j + 1) / double(k - j);
    for (std::size_t j = 0; j <= k; ++j) out[j] += p[k] * row[j];
  }
  return out;
}

inline Poly poly_conj_coeffs(const Poly& p) {
  Poly out(p);
  for (auto& c : out) c = std::conj(c);
  return out;
}

}  // namespace vt
