#pragma once

#include <array>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "vt/quaternion.hpp"
#include "vt/types.hpp"

namespace vt {

template <typename Scalar = double>
using Sl2cMatrix = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

using Sl2cMatrixd = Sl2cMatrix<double>;

template <typename Scalar>
std::complex<Scalar> det2(const Sl2cMatrix<Scalar>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

template <typename Scalar>
bool is_unit_det(const Sl2cMatrix<Scalar>& m, Scalar tol = Scalar(1e-12)) {
  return std::abs(det2(m) - std::complex<Scalar>(1, 0)) <= tol;
}

template <typename Scalar>
Sl2cMatrix<Scalar> matrix_mul(const Sl2cMatrix<Scalar>& m1, const Sl2cMatrix<Scalar>& m2) {
  return m1 * m2;
}

/// Inverse of a unit-determinant matrix: [[d, -b], [-c, a]].
template <typename Scalar>
Sl2cMatrix<Scalar> matrix_inverse(const Sl2cMatrix<Scalar>& m) {
  Sl2cMatrix<Scalar> inv;
  inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return inv;
}

/// 2x2 complex representation of a quaternion: [[a+bi, c+di], [-c+di, a-bi]].
template <typename Scalar>
Sl2cMatrix<Scalar> quat_to_matrix(const Quaternion<Scalar>& q) {
  Sl2cMatrix<Scalar> m;
  m << std::complex<Scalar>(q.a, q.b), std::complex<Scalar>(q.c, q.d),
      std::complex<Scalar>(-q.c, q.d), std::complex<Scalar>(q.a, -q.b);
  return m;
}

/// [[e^{i xi1} cos eta, e^{i xi2} sin eta], [-e^{-i xi2} sin eta, e^{-i xi1} cos eta]].
template <typename Scalar>
Sl2cMatrix<Scalar> hopf_to_matrix(const HopfAngles<Scalar>& h) {
  using C = std::complex<Scalar>;
  const Scalar ce = std::cos(h.eta), se = std::sin(h.eta);
  const C e1 = std::polar(Scalar(1), h.xi1);
  const C e2 = std::polar(Scalar(1), h.xi2);
  Sl2cMatrix<Scalar> m;
  m << e1 * ce, e2 * se, -std::conj(e2) * se, std::conj(e1) * ce;
  return m;
}

template <typename Scalar>
bool is_real_matrix(const Sl2cMatrix<Scalar>& m, Scalar tol = Scalar(0)) {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      if (std::abs(m(r, c).imag()) > tol) return false;
  return true;
}

// -------- basis operators and the composition table --------

enum class BasisOp { One, P, I, J, K };

inline const char* to_string(BasisOp b) {
  switch (b) {
    case BasisOp::One: return "1";
    case BasisOp::P: return "P";
    case BasisOp::I: return "I";
    case BasisOp::J: return "J";
    case BasisOp::K: return "K";
  }
  return "?";
}

inline Sl2cMatrixd basis_matrix(BasisOp b) {
  Sl2cMatrixd m;
  switch (b) {
    case BasisOp::One: m << 1, 0, 0, 1; break;
    case BasisOp::P: m << -1, 0, 0, -1; break;
    case BasisOp::I: m << kI, 0, 0, -kI; break;
    case BasisOp::J: m << 0, 1, -1, 0; break;
    case BasisOp::K: m << 0, kI, kI, 0; break;
  }
  return m;
}

/// A basis matrix with an optional sign, e.g. "PK" for -K.
struct SignedBasis {
  bool negated = false;
  BasisOp basis = BasisOp::One;

  std::string label() const {
    std::string s = negated ? "P" : "";
    if (basis != BasisOp::One || !negated) s += to_string(basis);
    return s;
  }
};

/// Match a matrix against +/- {1, I, J, K} exactly (entries are integers or i).
inline SignedBasis identify_signed_basis(const Sl2cMatrixd& m) {
  constexpr BasisOp ops[4] = {BasisOp::One, BasisOp::I, BasisOp::J, BasisOp::K};
  for (BasisOp op : ops) {
    const Sl2cMatrixd b = basis_matrix(op);
    if ((m - b).cwiseAbs().maxCoeff() == 0.0) return {false, op};
    if ((m + b).cwiseAbs().maxCoeff() == 0.0) return {true, op};
  }
  throw std::invalid_argument("matrix is not a signed basis element");
}

/// Row R, column C holds the product Mat(R) * Mat(C); the parity operator
/// corresponds to -1, so "PJ" means the matrix -J.
inline std::array<std::array<SignedBasis, 4>, 4> composition_table() {
  constexpr BasisOp ops[4] = {BasisOp::One, BasisOp::I, BasisOp::J, BasisOp::K};
  std::array<std::array<SignedBasis, 4>, 4> table;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      table[r][c] = identify_signed_basis(matrix_mul(basis_matrix(ops[r]), basis_matrix(ops[c])));
  return table;
}

// -------- exact trig at snapped angles --------

/// cos/sin with angles within 1e-9 of a multiple of pi/2 treated exactly.
struct SnappedTrig {
  double cos_v = 1.0;
  double sin_v = 0.0;
  bool exact = false;  // landed on a multiple of pi/2
};

inline SnappedTrig snapped_cos_sin(double angle) {
  const double half_pi = kPi / 2.0;
  const double k = std::round(angle / half_pi);
  if (std::abs(angle - k * half_pi) <= 1e-9) {
    static constexpr double cos_q[4] = {1.0, 0.0, -1.0, 0.0};
    static constexpr double sin_q[4] = {0.0, 1.0, 0.0, -1.0};
    const int q = int(((long long)(k) % 4 + 4) % 4);
    return {cos_q[q], sin_q[q], true};
  }
  return {std::cos(angle), std::sin(angle), false};
}

inline Complex snapped_cis(double angle) {
  const SnappedTrig t = snapped_cos_sin(angle);
  return {t.cos_v, t.sin_v};
}

}  // namespace vt
