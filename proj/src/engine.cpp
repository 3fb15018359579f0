#include "vt/engine.hpp"

#include <algorithm>
#include <cmath>

#include "vt/closed_form.hpp"

namespace vt {

void validate(const QuadratureConfig& cfg) {
  if (!(cfg.env_tol > 0.0 && cfg.env_tol < 1.0))
    throw std::invalid_argument("QuadratureConfig: env_tol must lie in (0, 1)");
  if (!(cfg.oversample >= 2.0))
    throw std::invalid_argument("QuadratureConfig: oversample must be >= 2");
  if (cfg.max_nodes < 16) throw std::invalid_argument("QuadratureConfig: max_nodes must be >= 16");
}

namespace {

constexpr int kMinNodes = 64;

// Half-width R with exp(-pi*s*R^2 + t*R) <= exp(-budget).
double truncation_radius(double s, double t, double budget) {
  return (t + std::sqrt(t * t + 4.0 * kPi * s * budget)) / (2.0 * kPi * s);
}

// Trapezoid intervals for the shared [-R, R] rule; errors if the budget binds.
int node_count(double cycles, const QuadratureConfig& cfg) {
  const double need = cfg.oversample * cycles;
  if (need > double(cfg.max_nodes))
    throw TransformError(ErrorCode::NodeBudgetExceeded,
                         "required " + std::to_string(std::llround(need)) + " nodes, cap is " +
                             std::to_string(cfg.max_nodes));
  return std::max(kMinNodes, int(std::ceil(need)));
}

double poly_growth(const Poly& p, double R) {
  double g = 0.0;
  double rk = 1.0;
  const double r = std::max(1.0, R);
  for (const Complex& c : p) {
    g += std::abs(c) * rk;
    rk *= r;
  }
  return std::max(1.0, g);
}

}  // namespace

std::vector<Complex> transform_points(const LctCoeffs& co, const PolyChirpd& f,
                                      std::span<const Complex> targets,
                                      const QuadratureConfig& cfg) {
  validate(cfg);
  if (co.degeneracy_margin < kDegeneracyFloor)
    throw TransformError(ErrorCode::NearDegenerate,
                         "|sin|-margin " + std::to_string(co.degeneracy_margin) + " below " +
                             std::to_string(kDegeneracyFloor));
  const Complex sigma_eff = f.base.sigma - kI * co.ab;
  const double s = sigma_eff.real();
  if (!(s > 0.0))
    throw TransformError(ErrorCode::NonConvergent,
                         "Re(sigma - i a/b) = " + std::to_string(s) + " <= 0");

  // worst-case linear growth of the integrand envelope over all targets
  double t_lin = std::abs(f.base.beta.real());
  double u_max = 0.0;
  for (const Complex& u : targets) {
    const Complex lin = f.base.beta - 2.0 * kPi * kI * co.invb * u;
    t_lin = std::max(t_lin, std::abs(lin.real()));
    u_max = std::max(u_max, std::abs(u));
  }

  double budget = -std::log(cfg.env_tol);
  double R = truncation_radius(s, t_lin, budget);
  budget += std::log(poly_growth(f.poly, R));
  R = truncation_radius(s, t_lin, budget);

  const double cycles =
      2.0 * R * (std::abs(co.ab) * R + u_max * std::abs(co.invb) + std::abs(f.base.beta.imag()) / kPi);
  const int nodes = node_count(cycles, cfg);
  const double h = 2.0 * R / nodes;

  // x-only part: w * P(x) * exp((pi i a/b - pi sigma) x^2 + beta x)
  const Complex quad_coeff = kPi * kI * co.ab - kPi * f.base.sigma;
  std::vector<Complex> xs(nodes + 1), ex(nodes + 1);
  for (int k = 0; k <= nodes; ++k) {
    const double x = -R + k * h;
    const double w = (k == 0 || k == nodes) ? 0.5 * h : h;
    xs[k] = Complex(x, 0.0);
    ex[k] = w * poly_eval(f.poly, xs[k]) * std::exp(quad_coeff * xs[k] * xs[k] + f.base.beta * xs[k]);
  }

  std::vector<Complex> out(targets.size());
  for (std::size_t j = 0; j < targets.size(); ++j) {
    const Complex u = targets[j];
    const Complex mu = -2.0 * kPi * kI * co.invb * u;
    Complex acc{0.0, 0.0};
    for (int k = 0; k <= nodes; ++k) acc += ex[k] * std::exp(mu * xs[k]);
    out[j] = co.constant * std::exp(kPi * kI * co.db * u * u) * f.base.amp * acc;
  }
  return out;
}

SampledSignal transform_analytic(const KernelSpec& spec, const PolyChirpd& f, const GridSpec& grid,
                                 const QuadratureConfig& cfg) {
  const VectorXr u = grid_points(grid);
  std::vector<Complex> targets(u.size());
  for (Eigen::Index k = 0; k < u.size(); ++k) targets[k] = Complex(u[k], 0.0);
  const std::vector<Complex> vals = transform_points(lct_coeffs(spec), f, targets, cfg);
  VectorXc v(Eigen::Index(vals.size()));
  for (std::size_t k = 0; k < vals.size(); ++k) v[Eigen::Index(k)] = vals[k];
  return SampledSignal(grid.u0, grid.du, std::move(v));
}

SampledSignal transform_sampled(const KernelSpec& spec, const SampledSignal& s, const GridSpec& grid,
                                const QuadratureConfig& cfg) {
  validate(cfg);
  if (spec.degeneracy_margin < kDegeneracyFloor)
    throw TransformError(ErrorCode::NearDegenerate,
                         "|sin|-margin " + std::to_string(spec.degeneracy_margin) + " below " +
                             std::to_string(kDegeneracyFloor));
  const LctCoeffs co = lct_coeffs(spec);
  const int n = s.size();
  std::vector<Complex> pre(n);
  for (int i = 0; i < n; ++i) {
    const double x = s.x_at(i);
    const double w = (i == 0 || i == n - 1) ? 0.5 * s.dx : s.dx;
    pre[i] = w * s.values[i] * std::exp(kPi * kI * co.ab * (x * x));
  }
  VectorXc out(grid.n);
  for (int j = 0; j < grid.n; ++j) {
    const double u = grid.u0 + j * grid.du;
    const Complex mu = -2.0 * kPi * kI * co.invb * u;
    Complex acc{0.0, 0.0};
    for (int i = 0; i < n; ++i) acc += pre[i] * std::exp(mu * s.x_at(i));
    out[j] = co.constant * std::exp(kPi * kI * co.db * (u * u)) * acc;
  }
  return SampledSignal(grid.u0, grid.du, std::move(out));
}

SampledSignal apply_degenerate(const DegenerateAction& act, const PolyChirpd& f, const GridSpec& grid) {
  const PolyChirpd g = apply_degenerate_chirp(act, f);
  return sample(g, grid.u0, grid.du, grid.n);
}

namespace {

// Catmull-Rom on the sample lattice; zero outside the covered range.
Complex interp_samples(const SampledSignal& s, double x) {
  const double t = (x - s.x0) / s.dx;
  const int n = s.size();
  if (t < 0.0 || t > double(n - 1)) return {0.0, 0.0};
  int i1 = int(std::floor(t));
  if (i1 >= n - 1) i1 = n - 2;
  if (i1 < 0) i1 = 0;
  const double fr = t - i1;
  const auto at = [&](int i) { return s.values[std::clamp(i, 0, n - 1)]; };
  const Complex p0 = at(i1 - 1), p1 = at(i1), p2 = at(i1 + 1), p3 = at(i1 + 2);
  const double f2 = fr * fr, f3 = f2 * fr;
  return 0.5 * ((2.0 * p1) + (-p0 + p2) * fr + (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) * f2 +
                (-p0 + 3.0 * p1 - 3.0 * p2 + p3) * f3);
}

}  // namespace

SampledSignal apply_degenerate(const DegenerateAction& act, const SampledSignal& s, const GridSpec& grid) {
  const double scale_im = std::abs(act.scale.imag());
  if (scale_im > 1e-12 * std::max(1.0, std::abs(act.scale)))
    throw TransformError(ErrorCode::ComplexScaleOnSamples,
                         "complex-argument resampling of bare samples is undefined");
  const double sc = act.scale.real();
  VectorXc out(grid.n);
  for (int j = 0; j < grid.n; ++j) {
    const double u = grid.u0 + j * grid.du;
    out[j] = act.prefactor * std::exp(act.chirp * Complex(u * u, 0.0)) * interp_samples(s, sc * u);
  }
  return SampledSignal(grid.u0, grid.du, std::move(out));
}

Complex integrate_poly_chirp(const PolyChirpd& f, const QuadratureConfig& cfg) {
  validate(cfg);
  const double s = f.base.sigma.real();
  if (!(s > 0.0))
    throw TransformError(ErrorCode::NonConvergent,
                         "Re(sigma) = " + std::to_string(s) + " <= 0");
  const double t_lin = std::abs(f.base.beta.real());
  double budget = -std::log(cfg.env_tol);
  double R = truncation_radius(s, t_lin, budget);
  budget += std::log(poly_growth(f.poly, R));
  R = truncation_radius(s, t_lin, budget);

  const double cycles =
      2.0 * R * (std::abs(f.base.sigma.imag()) * R + std::abs(f.base.beta.imag()) / kPi);
  const int nodes = node_count(cycles, cfg);
  const double h = 2.0 * R / nodes;
  Complex acc{0.0, 0.0};
  for (int k = 0; k <= nodes; ++k) {
    const Complex x(-R + k * h, 0.0);
    const double w = (k == 0 || k == nodes) ? 0.5 * h : h;
    acc += w * eval_chirp(f, x);
  }
  return acc;
}

GridSpec coverage_grid(const GaussianChirpd& f, double tol, double oversample, int max_points) {
  const double s = f.sigma.real();
  if (!(s > 0.0))
    throw TransformError(ErrorCode::NonConvergent,
                         "coverage_grid: Re(sigma) = " + std::to_string(s) + " <= 0");
  const double budget = -std::log(tol);
  const double center = f.beta.real() / (2.0 * kPi * s);
  const double half = std::sqrt(budget / (kPi * s));
  // spacing resolves the chirp oscillation and the Gaussian's own bandwidth
  const double freq = std::abs(f.sigma.imag()) * (std::abs(center) + half) +
                      std::abs(f.beta.imag()) / (2.0 * kPi) + std::sqrt(s * budget / kPi);
  double du = 1.0 / (oversample * std::max(freq, 0.5));
  int n = int(std::ceil(2.0 * half / du)) + 1;
  if (n > max_points) {
    n = max_points;
    du = 2.0 * half / (n - 1);
  }
  return {center - half, du, n};
}

}  // namespace vt
