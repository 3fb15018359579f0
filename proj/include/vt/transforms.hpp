#pragma once

#include <optional>
#include <string>
#include <variant>

#include "vt/closed_form.hpp"
#include "vt/engine.hpp"
#include "vt/kernel.hpp"
#include "vt/sampled.hpp"

namespace vt {

enum class TransformKind { RawLct, FrFT, ScaleI, FracLaplaceK, HybridH, Versor, Basis };

const char* to_string(TransformKind kind);

/// Which coefficient fill the identity machinery uses: entries derived from the
/// stored matrix, or the trig-specialized forms of the named transforms. Both
/// describe the same kernel; Trig is only available for FrFT/Versor-family kinds.
enum class SpecializationForm { General, Trig };

/// A transform bound to its matrix, normalization constant, and degenerate
/// branch. Constructor angles within 1e-9 of a multiple of pi/2 snap to exact
/// values, so the operator tables hold exactly rather than through
/// near-singular trig.
class NamedTransform {
 public:
  TransformKind kind() const { return kind_; }
  const Sl2cMatrixd& matrix() const { return matrix_; }
  bool is_degenerate() const { return std::holds_alternative<DegenerateAction>(action_); }
  const DegenerateAction& action() const { return std::get<DegenerateAction>(action_); }
  const KernelSpec& kernel_spec() const { return std::get<KernelSpec>(action_); }

  double theta() const { return theta_; }
  const HopfAnglesd& angles() const { return angles_; }
  BasisOp basis() const { return basis_; }

  LctCoeffs coeffs(SpecializationForm form = SpecializationForm::General) const;

  /// Exact closed-form image of a polynomial-weighted chirp.
  PolyChirpd apply_closed_form(const PolyChirpd& f, Continuation cont = Continuation::Strict) const;

  /// Quadrature image on a grid (exact evaluation on the degenerate branch).
  SampledSignal apply_quadrature(const PolyChirpd& f, const GridSpec& grid,
                                 const QuadratureConfig& cfg = {}) const;

  SampledSignal apply_sampled(const SampledSignal& s, const GridSpec& grid,
                              const QuadratureConfig& cfg = {}) const;

  friend NamedTransform make_frft(double theta);
  friend NamedTransform make_versor(const HopfAnglesd& angles);
  friend NamedTransform make_hybrid(double theta);
  friend NamedTransform make_scale(double theta);
  friend NamedTransform make_frac_laplace(double theta);
  friend NamedTransform make_basis(BasisOp which);
  friend NamedTransform make_raw(const Sl2cMatrixd& m);

 private:
  NamedTransform() = default;

  TransformKind kind_ = TransformKind::Basis;
  double theta_ = 0.0;
  HopfAnglesd angles_{};
  BasisOp basis_ = BasisOp::One;
  Sl2cMatrixd matrix_ = Sl2cMatrixd::Identity();
  std::variant<KernelSpec, DegenerateAction> action_ = DegenerateAction{};
};

/// Rotation matrix [[cos, sin], [-sin, cos]] with constant sqrt(1 - i cot);
/// theta = 0 mod 2pi is the identity, theta = pi mod 2pi is parity.
NamedTransform make_frft(double theta);

/// Hopf-matrix transform with constant sqrt(1 - i e^{-i xi2} cot eta);
/// sin eta = 0 degenerates to scaling by e^{-i xi1} cos eta.
NamedTransform make_versor(const HopfAnglesd& angles);

/// V(0, pi/2, theta): kernel e^{-2 pi i e^{-i theta} x u}, constant 1.
NamedTransform make_hybrid(double theta);

/// I_theta: f(u e^{-i theta}).
NamedTransform make_scale(double theta);

/// K_theta: constant sqrt(1 - cot), kernel e^{pi cot (x^2+u^2)} e^{-2 pi csc x u}.
NamedTransform make_frac_laplace(double theta);

NamedTransform make_basis(BasisOp which);

/// Raw unit-determinant matrix with the default constant sqrt(1/(i b));
/// b = 0 routes to the degenerate branch sqrt(d) e^{pi i c d u^2} f(d u).
NamedTransform make_raw(const Sl2cMatrixd& m);

NamedTransform invert(const NamedTransform& t);

/// Matrix of the composite t1 after t2; the scalar factor the composed
/// operators may pick up is not tracked.
Sl2cMatrixd compose_matrices(const NamedTransform& t1, const NamedTransform& t2);

}  // namespace vt
