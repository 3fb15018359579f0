#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace vt {

using Real = double;
using Complex = std::complex<double>;
using VectorXc = Eigen::VectorXcd;
using VectorXr = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

/// Typed failure modes shared by the kernel/engine/identity layers.
enum class ErrorCode {
  NonConvergent,
  NearDegenerate,
  NodeBudgetExceeded,
  DegenerateMatrix,
  NotDegenerate,
  ComplexScaleOnSamples,
  InadmissibleAuxiliary,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::NearDegenerate: return "NearDegenerate";
    case ErrorCode::NodeBudgetExceeded: return "NodeBudgetExceeded";
    case ErrorCode::DegenerateMatrix: return "DegenerateMatrix";
    case ErrorCode::NotDegenerate: return "NotDegenerate";
    case ErrorCode::ComplexScaleOnSamples: return "ComplexScaleOnSamples";
    case ErrorCode::InadmissibleAuxiliary: return "InadmissibleAuxiliary";
  }
  return "Unknown";
}

class TransformError : public std::runtime_error {
 public:
  TransformError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Uniform output grid: points u0 + k*du for k = 0..n-1.
struct GridSpec {
  double u0 = 0.0;
  double du = 1.0;
  int n = 1;
};

inline VectorXr grid_points(const GridSpec& g) {
  VectorXr u(g.n);
  for (int k = 0; k < g.n; ++k) u[k] = g.u0 + k * g.du;
  return u;
}

}  // namespace vt
