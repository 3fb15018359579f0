#pragma once

#include <cmath>

#include "vt/types.hpp"

namespace vt {

/// Quaternion a + b i + c j + d k with real components.
template <typename Scalar = double>
struct Quaternion {
  Scalar a{0}, b{0}, c{0}, d{0};
};

using Quaterniond = Quaternion<double>;

/// Hamilton product (i^2 = j^2 = k^2 = ijk = -1).
template <typename Scalar>
Quaternion<Scalar> quat_mul(const Quaternion<Scalar>& p, const Quaternion<Scalar>& q) {
  return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
          p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
          p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
          p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}

template <typename Scalar>
Scalar quat_norm(const Quaternion<Scalar>& q) {
  return std::sqrt(q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d);
}

template <typename Scalar>
bool is_versor(const Quaternion<Scalar>& q, Scalar tol = Scalar(1e-12)) {
  return std::abs(quat_norm(q) - Scalar(1)) <= tol;
}

/// Angles (xi1, eta, xi2) parameterizing the 3-sphere.
template <typename Scalar = double>
struct HopfAngles {
  Scalar xi1{0}, eta{0}, xi2{0};
};

using HopfAnglesd = HopfAngles<double>;

template <typename Scalar>
Quaternion<Scalar> hopf_to_quat(const HopfAngles<Scalar>& h) {
  const Scalar ce = std::cos(h.eta), se = std::sin(h.eta);
  return {std::cos(h.xi1) * ce, std::sin(h.xi1) * ce, std::cos(h.xi2) * se, std::sin(h.xi2) * se};
}

/// Chart inversion. At the poles (cos eta = 0 or sin eta = 0) one angle is
/// undetermined; it is reported as 0 with the corresponding flag cleared.
template <typename Scalar = double>
struct HopfRecovery {
  HopfAngles<Scalar> angles;
  bool xi1_defined = true;
  bool xi2_defined = true;
};

template <typename Scalar>
HopfRecovery<Scalar> hopf_from_quat(const Quaternion<Scalar>& q) {
  if (!is_versor(q, Scalar(1e-6)))
    throw std::invalid_argument("hopf_from_quat expects a unit quaternion");
  const Scalar pole_tol = Scalar(1e-9);
  const Scalar ce = std::hypot(q.a, q.b);
  const Scalar se = std::hypot(q.c, q.d);
  HopfRecovery<Scalar> out;
  out.angles.eta = std::atan2(se, ce);
  if (ce > pole_tol) {
    out.angles.xi1 = std::atan2(q.b, q.a);
  } else {
    out.angles.xi1 = Scalar(0);
    out.xi1_defined = false;
  }
  if (se > pole_tol) {
    out.angles.xi2 = std::atan2(q.d, q.c);
  } else {
    out.angles.xi2 = Scalar(0);
    out.xi2_defined = false;
  }
  return out;
}

}  // namespace vt
