#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "vt/closed_form.hpp"
#include "vt/engine.hpp"
#include "vt/rng.hpp"
#include "vt/sampled.hpp"
#include "vt/transforms.hpp"

using namespace vt;

namespace {

Sl2cMatrixd random_real_sl2(Rng& rng) {
  for (;;) {
    const double a = (rng.coin() ? 1 : -1) * rng.uniform(0.5, 1.5);
    const double b = (rng.coin() ? 1 : -1) * rng.uniform(0.3, 1.2);
    const double c = rng.uniform(-1.0, 1.0);
    const double d = (1.0 + b * c) / a;
    if (std::abs(d) > 3.0) continue;
    Sl2cMatrixd m;
    m << a, b, c, d;
    return m;
  }
}

GaussianChirpd random_chirp(Rng& rng) {
  GaussianChirpd f;
  f.amp = rng.complex_in(0.5, 1.5, -0.5, 0.5);
  f.sigma = rng.complex_in(0.6, 2.0, -0.4, 0.4);
  f.beta = rng.complex_in(-1.0, 1.0, -1.0, 1.0);
  return f;
}

}  // namespace

TEST_CASE("pointwise evaluation") {
  const GaussianChirpd unit{};  // e^{-pi x^2}
  CHECK(eval_chirp(unit, Complex{0, 0}) == Complex{1, 0});
  CHECK(std::abs(eval_chirp(unit, Complex{1, 0}) - std::exp(-kPi)) < 1e-16);
  const GaussianChirpd f{{2, 0}, {1, 0}, {1, 0}};
  CHECK(std::abs(eval_chirp(f, Complex{1, 0}) - 2.0 * std::exp(1.0 - kPi)) < 1e-15);
}

TEST_CASE("sampling equals pointwise evaluation") {
  const GaussianChirpd unit{};
  const SampledSignal s = sample(unit, -1.0, 1.0, 3);
  CHECK(std::abs(s.values[0] - std::exp(-kPi)) < 1e-16);
  CHECK(s.values[1] == Complex{1, 0});
  CHECK(std::abs(s.values[2] - std::exp(-kPi)) < 1e-16);

  const GaussianChirpd f = {{1, 0}, {1.3, 0.2}, {0.4, -0.1}};
  const SampledSignal one = sample(f, 0.0, 0.5, 1);
  CHECK(one.size() == 1);
  CHECK(one.values[0] == eval_chirp(f, Complex{0, 0}));

  const SampledSignal many = sample(f, -2.0, 0.25, 17);
  for (int i = 0; i < many.size(); ++i)
    CHECK(std::abs(many.values[i] - eval_chirp(f, Complex(many.x_at(i), 0))) <= 1e-15);

  CHECK_THROWS_AS(sample(f, 0.0, -0.1, 4), std::invalid_argument);
}

TEST_CASE("closed form: Fourier fixes the unit Gaussian") {
  // F_{pi/2} with the fractional constant sqrt(1 - i cot) = 1
  const NamedTransform fourier = make_frft(kPi / 2.0);
  const PolyChirpd out = fourier.apply_closed_form(as_poly_chirp(GaussianChirpd{}));
  CHECK(std::abs(out.base.amp - 1.0) < 1e-15);
  CHECK(std::abs(out.base.sigma - 1.0) < 1e-15);
  CHECK(std::abs(out.base.beta) < 1e-15);
}

TEST_CASE("closed form: bilateral-Laplace-type K sends e^{-pi x^2} to e^{+pi u^2}") {
  const NamedTransform K = make_basis(BasisOp::K);
  const PolyChirpd out = K.apply_closed_form(as_poly_chirp(GaussianChirpd{}));
  CHECK(std::abs(out.base.amp - 1.0) < 1e-14);
  CHECK(std::abs(out.base.sigma - Complex{-1.0, 0.0}) < 1e-14);
  CHECK(std::abs(out.base.beta) < 1e-14);
}

TEST_CASE("identity matrix routes through the degenerate branch") {
  const NamedTransform one = make_raw(Sl2cMatrixd::Identity());
  CHECK(one.is_degenerate());
  const GaussianChirpd f = {{1, 0}, {1.2, 0.3}, {0.2, 0.1}};
  const PolyChirpd out = one.apply_closed_form(as_poly_chirp(f));
  CHECK(out.base.amp == f.amp);
  CHECK(out.base.sigma == f.sigma);
  CHECK(out.base.beta == f.beta);
}

TEST_CASE("closed form raises on non-convergent requests") {
  const NamedTransform K = make_basis(BasisOp::K);
  GaussianChirpd growing;
  growing.sigma = Complex{-1.0, 0.0};
  CHECK_THROWS_AS(K.apply_closed_form(as_poly_chirp(growing)), TransformError);
}

TEST_CASE("chirp algebra: shift, modulation, conjugation, derivative") {
  Rng rng(21);
  const GaussianChirpd f = random_chirp(rng);
  const Complex x{0.37, 0.0};

  const GaussianChirpd sh = shifted(f, Complex{0.8, 0.0});
  CHECK(std::abs(eval_chirp(sh, x) - eval_chirp(f, x - 0.8)) < 1e-14);

  const GaussianChirpd md = modulated(f, Complex{0.0, 2.0});
  CHECK(std::abs(eval_chirp(md, x) - eval_chirp(f, x) * std::exp(Complex{0.0, 2.0} * x)) < 1e-15);

  CHECK(std::abs(eval_chirp(conjugated(f), x) - std::conj(eval_chirp(f, x))) < 1e-15);

  // symbolic derivative of a poly chirp vs a central difference
  const PolyChirpd pf = times_poly(as_poly_chirp(f), Poly{Complex{0.5, 0}, Complex{1, 0}});
  const PolyChirpd dpf = derivative(pf);
  const double h = 1e-5;
  const Complex fd =
      (eval_chirp(pf, x + h) - eval_chirp(pf, x - h)) / (2.0 * h);
  CHECK(std::abs(eval_chirp(dpf, x) - fd) < 1e-8);

  const PolyChirpd shp = shifted(pf, Complex{0.4, 0.0});
  CHECK(std::abs(eval_chirp(shp, x) - eval_chirp(pf, x - 0.4)) < 1e-14);
}

TEST_CASE("closed-form convolution of two unit Gaussians") {
  const GaussianChirpd unit{};
  const GaussianChirpd conv = convolve_closed(unit, unit);
  // (1/sqrt 2) e^{-pi x^2 / 2}
  CHECK(std::abs(conv.amp - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(conv.sigma - 0.5) < 1e-15);
  CHECK(std::abs(conv.beta) < 1e-15);
}

TEST_CASE("closed-form convolution against a discrete convolution") {
  Rng rng(22);
  const GaussianChirpd f = random_chirp(rng), g = random_chirp(rng);
  const GaussianChirpd conv = convolve_closed(f, g);
  const double dt = 0.02;
  const int half = 400;
  for (double x : {-0.7, 0.0, 0.55}) {
    Complex acc{0, 0};
    for (int i = -half; i <= half; ++i) {
      const double tau = i * dt;
      acc += eval_chirp(f, Complex(tau, 0)) * eval_chirp(g, Complex(x - tau, 0)) * dt;
    }
    CHECK(std::abs(acc - eval_chirp(conv, Complex(x, 0))) < 1e-8);
  }
}

TEST_CASE("cross-correlation at zero ties to the squared norm") {
  Rng rng(23);
  const GaussianChirpd f = random_chirp(rng);
  const GaussianChirpd cc = crosscorr_closed(f, f);
  const Complex norm2 = l2_inner_closed(f, f);
  CHECK(std::abs(eval_chirp(cc, Complex{0, 0}) - norm2) <= 1e-13 * std::abs(norm2));
  CHECK(norm2.real() > 0.0);
  CHECK(std::abs(norm2.imag()) < 1e-14 * norm2.real());
}

TEST_CASE("group action up to a unimodular constant, real matrices") {
  Rng rng(24);
  for (int it = 0; it < 10; ++it) {
    const Sl2cMatrixd m1 = random_real_sl2(rng), m2 = random_real_sl2(rng);
    const Sl2cMatrixd m12 = matrix_mul(m1, m2);
    if (std::abs(m12(0, 1)) < 0.1) continue;
    const GaussianChirpd f = random_chirp(rng);

    const NamedTransform t1 = make_raw(m1), t2 = make_raw(m2), t12 = make_raw(m12);
    const PolyChirpd chained = t1.apply_closed_form(t2.apply_closed_form(as_poly_chirp(f)));
    const PolyChirpd direct = t12.apply_closed_form(as_poly_chirp(f));

    std::vector<Complex> ratios;
    for (double u = -1.0; u <= 1.0; u += 0.125) {
      const Complex dv = eval_chirp(direct, Complex(u, 0));
      if (std::abs(dv) < 1e-6) continue;
      ratios.push_back(eval_chirp(chained, Complex(u, 0)) / dv);
    }
    REQUIRE(ratios.size() > 4);
    Complex mean{0, 0};
    for (const Complex& r : ratios) mean += r;
    mean /= double(ratios.size());
    double sd = 0.0;
    for (const Complex& r : ratios) sd = std::max(sd, std::abs(r - mean));
    CHECK(sd < 1e-8);
    CHECK(std::abs(std::abs(mean) - 1.0) < 1e-9);  // unimodular constant
  }
}

TEST_CASE("closure: real-matrix outputs stay integrable") {
  Rng rng(25);
  for (int it = 0; it < 50; ++it) {
    const Sl2cMatrixd m = random_real_sl2(rng);
    const GaussianChirpd f = random_chirp(rng);
    const PolyChirpd out = make_raw(m).apply_closed_form(as_poly_chirp(f));
    CHECK(out.base.sigma.real() > 0.0);
  }
}

TEST_CASE("moment transforms from the closed form match quadrature") {
  // validates the beta-derivative recurrence behind polynomial-weighted outputs
  Rng rng(26);
  const NamedTransform t = make_frft(1.1);
  const GaussianChirpd f = random_chirp(rng);
  for (int deg = 1; deg <= 3; ++deg) {
    Poly mono(deg + 1, Complex{0, 0});
    mono[deg] = Complex{1, 0};
    const PolyChirpd xf = times_poly(as_poly_chirp(f), mono);
    const PolyChirpd cf = t.apply_closed_form(xf);

    const GridSpec grid{-2.0, 0.25, 17};
    const SampledSignal num = t.apply_quadrature(xf, grid, {});
    for (int j = 0; j < grid.n; ++j) {
      const Complex ref = eval_chirp(cf, Complex(num.x_at(j), 0));
      CHECK(std::abs(num.values[j] - ref) < 1e-8);
    }
  }
}
