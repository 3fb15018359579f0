#pragma once

#include <span>
#include <vector>

#include "vt/chirp.hpp"
#include "vt/kernel.hpp"
#include "vt/sampled.hpp"
#include "vt/types.hpp"

namespace vt {

/// Deterministic composite-trapezoid quadrature settings.
struct QuadratureConfig {
  double env_tol = 1e-12;   // envelope truncation tolerance
  double oversample = 8.0;  // samples per oscillation cycle
  int max_nodes = 1 << 20;
};

void validate(const QuadratureConfig& cfg);

/// Quadrature path refuses kernels this close to a delta limit.
inline constexpr double kDegeneracyFloor = 0.05;

/// Evaluate the transform integral of a polynomial-weighted chirp at arbitrary
/// (possibly complex) output points. One shared truncation radius and node
/// count serve all points.
std::vector<Complex> transform_points(const LctCoeffs& co, const PolyChirpd& f,
                                      std::span<const Complex> targets,
                                      const QuadratureConfig& cfg);

SampledSignal transform_analytic(const KernelSpec& spec, const PolyChirpd& f, const GridSpec& grid,
                                 const QuadratureConfig& cfg);

/// Kernel-matrix product out[j] = sum_i K(x_i, u_j) s_i dx with trapezoid
/// end-weights; ascending-index summation, O(N*M).
SampledSignal transform_sampled(const KernelSpec& spec, const SampledSignal& s, const GridSpec& grid,
                                const QuadratureConfig& cfg = {});

SampledSignal apply_degenerate(const DegenerateAction& act, const PolyChirpd& f, const GridSpec& grid);

/// Resamples with cubic interpolation for a real scale factor; complex scales
/// on bare samples are undefined and rejected.
SampledSignal apply_degenerate(const DegenerateAction& act, const SampledSignal& s, const GridSpec& grid);

/// Integral of a polynomial-weighted chirp over the real line.
Complex integrate_poly_chirp(const PolyChirpd& f, const QuadratureConfig& cfg);

/// Grid covering the region where |f| exceeds tol * peak, with spacing fine
/// enough for the chirp's oscillation at the given oversampling rate.
GridSpec coverage_grid(const GaussianChirpd& f, double tol, double oversample, int max_points = 20000);

}  // namespace vt
