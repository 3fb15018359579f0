#include "vt/transforms.hpp"

#include <cmath>

namespace vt {

const char* to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::RawLct: return "raw";
    case TransformKind::FrFT: return "frft";
    case TransformKind::ScaleI: return "scale";
    case TransformKind::FracLaplaceK: return "laplace";
    case TransformKind::HybridH: return "hybrid";
    case TransformKind::Versor: return "versor";
    case TransformKind::Basis: return "basis";
  }
  return "?";
}

NamedTransform make_frft(double theta) {
  NamedTransform t;
  t.kind_ = TransformKind::FrFT;
  t.theta_ = theta;
  const SnappedTrig tr = snapped_cos_sin(theta);
  t.matrix_ << Complex(tr.cos_v, 0), Complex(tr.sin_v, 0), Complex(-tr.sin_v, 0), Complex(tr.cos_v, 0);
  if (tr.sin_v == 0.0) {
    // identity at theta = 0 mod 2pi, parity at theta = pi mod 2pi
    t.action_ = DegenerateAction{Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex(tr.cos_v, 0.0)};
  } else {
    const double cot = tr.cos_v / tr.sin_v;
    t.action_ = make_kernel_spec(t.matrix_, ConstantMode::FrftStyle,
                                 principal_sqrt(Complex(1.0, -cot)), std::abs(tr.sin_v));
  }
  return t;
}

NamedTransform make_versor(const HopfAnglesd& angles) {
  NamedTransform t;
  t.kind_ = TransformKind::Versor;
  t.angles_ = angles;
  const SnappedTrig te = snapped_cos_sin(angles.eta);
  const Complex e1 = snapped_cis(angles.xi1), e1m = snapped_cis(-angles.xi1);
  const Complex e2 = snapped_cis(angles.xi2), e2m = snapped_cis(-angles.xi2);
  t.matrix_ << e1 * te.cos_v, e2 * te.sin_v, -e2m * te.sin_v, e1m * te.cos_v;
  if (te.sin_v == 0.0) {
    t.action_ = DegenerateAction{Complex{1.0, 0.0}, Complex{0.0, 0.0}, e1m * te.cos_v};
  } else {
    const Complex rho = e2m * (te.cos_v / te.sin_v);
    t.action_ = make_kernel_spec(t.matrix_, ConstantMode::FrftStyle, principal_sqrt(1.0 - kI * rho),
                                 std::abs(te.sin_v));
  }
  return t;
}

NamedTransform make_hybrid(double theta) {
  NamedTransform t = make_versor({0.0, kPi / 2.0, theta});
  t.kind_ = TransformKind::HybridH;
  t.theta_ = theta;
  return t;
}

NamedTransform make_scale(double theta) {
  NamedTransform t;
  t.kind_ = TransformKind::ScaleI;
  t.theta_ = theta;
  const Complex e = snapped_cis(theta), em = snapped_cis(-theta);
  t.matrix_ << e, Complex{0.0, 0.0}, Complex{0.0, 0.0}, em;
  t.action_ = DegenerateAction{Complex{1.0, 0.0}, Complex{0.0, 0.0}, em};
  return t;
}

NamedTransform make_frac_laplace(double theta) {
  NamedTransform t = make_versor({0.0, theta, kPi / 2.0});
  t.kind_ = TransformKind::FracLaplaceK;
  t.theta_ = theta;
  return t;
}

NamedTransform make_basis(BasisOp which) {
  NamedTransform t;
  t.kind_ = TransformKind::Basis;
  t.basis_ = which;
  t.matrix_ = basis_matrix(which);
  switch (which) {
    case BasisOp::One:
      t.action_ = DegenerateAction{Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{1.0, 0.0}};
      break;
    case BasisOp::P:
      t.action_ = DegenerateAction{Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{-1.0, 0.0}};
      break;
    case BasisOp::I:
      // scaling of the domain by i: f(u/i)
      t.action_ = DegenerateAction{Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, -1.0}};
      break;
    case BasisOp::J:
    case BasisOp::K:
      t.action_ = make_kernel_spec(t.matrix_, ConstantMode::FrftStyle, Complex{1.0, 0.0}, 1.0);
      break;
  }
  return t;
}

NamedTransform make_raw(const Sl2cMatrixd& m) {
  NamedTransform t;
  t.kind_ = TransformKind::RawLct;
  t.matrix_ = m;
  if (m(0, 1) == Complex{0.0, 0.0}) {
    t.action_ = degenerate_action(m);
  } else {
    t.action_ = make_kernel_spec(m, ConstantMode::LctDefault);
  }
  return t;
}

NamedTransform invert(const NamedTransform& t) {
  switch (t.kind()) {
    case TransformKind::FrFT: return make_frft(-t.theta());
    case TransformKind::Versor:
      return make_versor({-t.angles().xi1, -t.angles().eta, t.angles().xi2});
    case TransformKind::HybridH:
      return make_versor({0.0, -kPi / 2.0, t.theta()});
    case TransformKind::ScaleI: return make_scale(-t.theta());
    case TransformKind::FracLaplaceK:
      return make_versor({0.0, -t.theta(), kPi / 2.0});
    case TransformKind::Basis:
      switch (t.basis()) {
        case BasisOp::One: return make_basis(BasisOp::One);
        case BasisOp::P: return make_basis(BasisOp::P);
        case BasisOp::I: return make_scale(-kPi / 2.0);
        case BasisOp::J: return make_frft(-kPi / 2.0);
        case BasisOp::K: return make_versor({0.0, -kPi / 2.0, kPi / 2.0});
      }
      break;
    case TransformKind::RawLct: return make_raw(matrix_inverse(t.matrix()));
  }
  throw std::logic_error("invert: unhandled kind");
}

Sl2cMatrixd compose_matrices(const NamedTransform& t1, const NamedTransform& t2) {
  return matrix_mul(t1.matrix(), t2.matrix());
}

LctCoeffs NamedTransform::coeffs(SpecializationForm form) const {
  if (is_degenerate())
    throw TransformError(ErrorCode::DegenerateMatrix, "degenerate transform has no kernel coefficients");
  const KernelSpec& spec = kernel_spec();
  LctCoeffs co = lct_coeffs(spec);

  if (form == SpecializationForm::Trig) {
    switch (kind_) {
      case TransformKind::FrFT: {
        const SnappedTrig tr = snapped_cos_sin(theta_);
        const double cot = tr.cos_v / tr.sin_v, csc = 1.0 / tr.sin_v;
        co.a = Complex(tr.cos_v, 0.0);
        co.c = Complex(-tr.sin_v, 0.0);
        co.ab = Complex(cot, 0.0);
        co.db = Complex(cot, 0.0);
        co.invb = Complex(csc, 0.0);
        break;
      }
      case TransformKind::Versor:
      case TransformKind::HybridH:
      case TransformKind::FracLaplaceK: {
        const HopfAnglesd h = (kind_ == TransformKind::Versor) ? angles_
                              : (kind_ == TransformKind::HybridH)
                                  ? HopfAnglesd{0.0, kPi / 2.0, theta_}
                                  : HopfAnglesd{0.0, theta_, kPi / 2.0};
        const SnappedTrig te = snapped_cos_sin(h.eta);
        const Complex e1 = snapped_cis(h.xi1), e1m = snapped_cis(-h.xi1);
        const Complex e2m = snapped_cis(-h.xi2);
        const double cot = te.cos_v / te.sin_v, csc = 1.0 / te.sin_v;
        co.a = e1 * te.cos_v;
        co.c = -e2m * te.sin_v;
        co.ab = e1 * e2m * cot;
        co.db = e1m * e2m * cot;
        co.invb = e2m * csc;
        break;
      }
      default:
        throw std::invalid_argument("Trig coefficient form is only defined for the named transforms");
    }
  }

  // frequency-side convolution constants: sqrt(1 + i cot)-style for the named
  // transforms, sqrt(1/(-i b)) for raw matrices
  switch (kind_) {
    case TransformKind::FrFT: {
      const SnappedTrig tr = snapped_cos_sin(theta_);
      co.freq_sqrt = principal_sqrt(Complex(1.0, tr.cos_v / tr.sin_v));
      break;
    }
    case TransformKind::Versor:
    case TransformKind::HybridH:
    case TransformKind::FracLaplaceK: {
      const HopfAnglesd h = (kind_ == TransformKind::Versor) ? angles_
                            : (kind_ == TransformKind::HybridH)
                                ? HopfAnglesd{0.0, kPi / 2.0, theta_}
                                : HopfAnglesd{0.0, theta_, kPi / 2.0};
      const SnappedTrig te = snapped_cos_sin(h.eta);
      const Complex rho = snapped_cis(-h.xi2) * (te.cos_v / te.sin_v);
      co.freq_sqrt = principal_sqrt(1.0 + kI * rho);
      break;
    }
    case TransformKind::Basis:
      // J = F_{pi/2}, K = V(0, pi/2, pi/2); both have cot = 0
      co.freq_sqrt = Complex{1.0, 0.0};
      break;
    case TransformKind::RawLct:
      break;  // already sqrt(1/(-i b)) from lct_coeffs
    default:
      break;
  }

  co.real_coeffs = co.a.imag() == 0.0 && co.c.imag() == 0.0 && co.ab.imag() == 0.0 &&
                   co.db.imag() == 0.0 && co.invb.imag() == 0.0;
  return co;
}

PolyChirpd NamedTransform::apply_closed_form(const PolyChirpd& f, Continuation cont) const {
  if (is_degenerate()) return apply_degenerate_chirp(action(), f);
  return closed_form_lct(coeffs(), f, cont);
}

SampledSignal NamedTransform::apply_quadrature(const PolyChirpd& f, const GridSpec& grid,
                                               const QuadratureConfig& cfg) const {
  if (is_degenerate()) return apply_degenerate(action(), f, grid);
  return transform_analytic(kernel_spec(), f, grid, cfg);
}

SampledSignal NamedTransform::apply_sampled(const SampledSignal& s, const GridSpec& grid,
                                            const QuadratureConfig& cfg) const {
  if (is_degenerate()) return apply_degenerate(action(), s, grid);
  return transform_sampled(kernel_spec(), s, grid, cfg);
}

}  // namespace vt
