#pragma once

#include <cmath>

#include "vt/quaternion.hpp"
#include "vt/sl2c.hpp"
#include "vt/special.hpp"
#include "vt/types.hpp"

namespace vt {

enum class ConstantMode { LctDefault, FrftStyle, Explicit };

/// Integral-kernel description for a transform with b != 0. The leading
/// constant is resolved at construction; FrftStyle matrices must come from the
/// named constructors, which supply their exact constant.
struct KernelSpec {
  Sl2cMatrixd matrix;
  ConstantMode mode = ConstantMode::LctDefault;
  Complex constant{1.0, 0.0};
  /// |sin theta| (or |sin eta|, or |b| for raw matrices); the quadrature path
  /// refuses values below 0.05.
  double degeneracy_margin = 1.0;
};

inline KernelSpec make_kernel_spec(const Sl2cMatrixd& m, ConstantMode mode,
                                   Complex constant = Complex{1.0, 0.0},
                                   double margin = -1.0) {
  const Complex b = m(0, 1);
  if (b == Complex{0.0, 0.0})
    throw TransformError(ErrorCode::DegenerateMatrix, "kernel form requires b != 0");
  KernelSpec spec;
  spec.matrix = m;
  spec.mode = mode;
  spec.constant = (mode == ConstantMode::LctDefault) ? principal_sqrt(1.0 / (kI * b)) : constant;
  spec.degeneracy_margin = margin >= 0.0 ? margin : std::abs(b);
  return spec;
}

/// constant * exp(pi i (a x^2 + d u^2)/b) * exp(-2 pi i x u / b).
inline Complex lct_kernel(const KernelSpec& spec, Complex x, Complex u) {
  const Complex a = spec.matrix(0, 0), b = spec.matrix(0, 1), d = spec.matrix(1, 1);
  if (b == Complex{0.0, 0.0})
    throw TransformError(ErrorCode::DegenerateMatrix, "lct_kernel requires b != 0");
  const Complex invb = 1.0 / b;
  return spec.constant *
         std::exp(kPi * kI * invb * (a * x * x + d * u * u) - 2.0 * kPi * kI * invb * x * u);
}

/// u -> prefactor * e^{chirp u^2} * f(scale * u); the b = 0 branch.
struct DegenerateAction {
  Complex prefactor{1.0, 0.0};
  Complex chirp{0.0, 0.0};
  Complex scale{1.0, 0.0};
};

/// b = 0 branch of a raw matrix: sqrt(d) e^{pi i c d u^2} f(d u).
inline DegenerateAction degenerate_action(const Sl2cMatrixd& m) {
  if (m(0, 1) != Complex{0.0, 0.0})
    throw TransformError(ErrorCode::NotDegenerate, "matrix has b != 0");
  const Complex c = m(1, 0), d = m(1, 1);
  return {principal_sqrt(d), kPi * kI * c * d, d};
}

/// sin(eta) = 0 branch of the versor family: f(u e^{-i xi1} cos eta), no prefactor.
/// Angles within 1e-9 of a multiple of pi/2 are treated exactly.
inline DegenerateAction degenerate_action(const HopfAnglesd& h) {
  const SnappedTrig e = snapped_cos_sin(h.eta);
  if (e.sin_v != 0.0)
    throw TransformError(ErrorCode::NotDegenerate, "sin(eta) != 0");
  return {Complex{1.0, 0.0}, Complex{0.0, 0.0}, snapped_cis(-h.xi1) * e.cos_v};
}

/// Coefficient bundle the engine and identity checkers consume. The entries can
/// be filled either from the matrix or from the trig-specialized forms of the
/// named transforms; both describe the same kernel.
struct LctCoeffs {
  Complex a{1.0, 0.0};      // matrix entry a
  Complex c{0.0, 0.0};      // matrix entry c
  Complex ab{0.0, 0.0};     // a / b
  Complex db{0.0, 0.0};     // d / b
  Complex invb{1.0, 0.0};   // 1 / b
  Complex constant{1.0, 0.0};
  /// Square root appearing in the frequency-side convolution constants:
  /// sqrt(1 + i cot)-style for named transforms, sqrt(1/(-i b)) for raw ones.
  Complex freq_sqrt{1.0, 0.0};
  bool real_coeffs = true;
  double degeneracy_margin = 1.0;
};

inline LctCoeffs lct_coeffs(const KernelSpec& spec) {
  const Complex a = spec.matrix(0, 0), b = spec.matrix(0, 1), c = spec.matrix(1, 0),
                d = spec.matrix(1, 1);
  LctCoeffs co;
  co.a = a;
  co.c = c;
  co.ab = a / b;
  co.db = d / b;
  co.invb = 1.0 / b;
  co.constant = spec.constant;
  co.freq_sqrt = principal_sqrt(1.0 / (-kI * b));
  co.real_coeffs = a.imag() == 0.0 && b.imag() == 0.0 && c.imag() == 0.0 && d.imag() == 0.0;
  co.degeneracy_margin = spec.degeneracy_margin;
  return co;
}

/// True iff the transform integral of a chirp with the given width converges:
/// Re(sigma - i a/b) > 0.
inline bool convergence_check(const LctCoeffs& co, Complex sigma) {
  return (sigma - kI * co.ab).real() > 0.0;
}

inline bool convergence_check(const KernelSpec& spec, Complex sigma) {
  return convergence_check(lct_coeffs(spec), sigma);
}

/// Width of the closed-form output chirp: sigma' = -i d/b + (1/b^2)/(sigma - i a/b).
inline Complex lct_output_sigma(const LctCoeffs& co, Complex sigma) {
  return -kI * co.db + co.invb * co.invb / (sigma - kI * co.ab);
}

inline Complex lct_output_beta(const LctCoeffs& co, Complex sigma, Complex beta) {
  return -kI * co.invb * beta / (sigma - kI * co.ab);
}

}  // namespace vt
