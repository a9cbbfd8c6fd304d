#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracle/oracle_values.hpp"
#include "zeta/rs_detail.hpp"
#include "zetaladder/error.hpp"
#include "zetaladder/z_batch.hpp"
#include "zetaladder/zeta.hpp"

using namespace zl;

TEST_CASE("theta matches log-gamma oracle values") {
  for (const auto& v : oracle::kTheta) {
    const double tol = v.t >= 1e5 ? 1e-9 : 1e-10;
    CHECK(std::abs(theta(v.t) - v.theta) <= tol);
  }
}

TEST_CASE("theta_mod_2pi agrees with the reduced theta") {
  for (double t : {15.0, 123.456, 5e4, 1e6}) {
    const double r = theta_mod_2pi(t);
    CHECK(r >= -detail::kPi);
    CHECK(r <= detail::kPi);
    CHECK(std::abs(std::remainder(theta(t) - r, detail::kTwoPi)) <= 1e-8);
  }
}

TEST_CASE("theta slope vanishes near t = 2pi at leading order") {
  // d/dt [(t/2) ln(t/2pi) - t/2] = (1/2) ln(t/2pi).
  const double t = detail::kTwoPi;
  CHECK(0.5 * std::log(t / detail::kTwoPi) == doctest::Approx(0.0));
}

TEST_CASE("Z matches the log-spaced oracle sweep") {
  for (const auto& v : oracle::kZLogSweep) {
    INFO("t = " << v.t);
    CHECK(std::abs(hardy_z(v.t).z - v.z) <= 1e-6);
  }
  for (const auto& v : oracle::kZExtra) {
    INFO("t = " << v.t);
    CHECK(std::abs(hardy_z(v.t).z - v.z) <= 1e-6);
  }
}

TEST_CASE("Z path selection and term count") {
  const ZSample lo = hardy_z(150.0);
  CHECK(lo.method == ZMethod::euler_maclaurin);
  const ZSample hi = hardy_z(1e6);
  CHECK(hi.method == ZMethod::riemann_siegel);
  CHECK(hi.terms_used == rs_terms(1e6));
  CHECK(rs_terms(1e6) == static_cast<std::int64_t>(std::floor(std::sqrt(1e6 / detail::kTwoPi))));
}

TEST_CASE("Z rejects heights below the minimum") {
  CHECK_THROWS_AS(hardy_z(5.0), DomainError);
  CHECK_THROWS_AS(theta(-1.0), DomainError);
}

TEST_CASE("Riemann-Siegel and Euler-Maclaurin agree across the crossover") {
  double worst = 0.0;
  for (double t = 180.0; t <= 260.0; t += 0.37)
    worst = std::max(worst, std::abs(z_riemann_siegel(t) - z_euler_maclaurin(t)));
  CHECK(worst <= 1e-7);
}

TEST_CASE("|zeta|^2 oracle and Z^2 consistency") {
  for (const auto& v : oracle::kAbsZetaSq)
    CHECK(abs_zeta_sq(v.t) == doctest::Approx(v.abs_zeta_sq).epsilon(1e-8));
  for (double t : {30.0, 199.0, 201.0, 777.7, 1e5}) {
    const double z = hardy_z(t).z;
    const double zeta_abs = std::sqrt(abs_zeta_sq(t));
    CHECK(std::abs(z * z - zeta_abs * zeta_abs) <= 2e-6 * std::max(zeta_abs, 1.0));
  }
  CHECK(std::abs(zeta_critical_em(20.0)) == doctest::Approx(std::sqrt(abs_zeta_sq(20.0))));
}

TEST_CASE("first twenty zeros are bracketed by sign changes of Z") {
  for (const auto& zero : oracle::kZetaZeros) {
    INFO("zero #" << zero.n);
    const double a = hardy_z(zero.gamma - 1e-6).z;
    const double b = hardy_z(zero.gamma + 1e-6).z;
    CHECK(a * b < 0.0);
  }
}

TEST_CASE("batched panel evaluator tracks pointwise Z") {
  const std::vector<double> offsets = {-0.9, -0.3, 0.0, 0.41, 1.0};
  for (double start : {250.0, 1e4, 1e6}) {
    const double stride = 1.7;
    ZPanelBatch batch(start, stride, offsets);
    std::vector<double> out(offsets.size());
    const double tol = start < 1e5 ? 1e-9 : 1e-7;
    for (int p = 0; p < 40; ++p) {
      batch.evaluate(out);
      for (std::size_t j = 0; j < offsets.size(); ++j) {
        const double t = start + p * stride + offsets[j];
        REQUIRE(std::abs(out[j] - hardy_z(t).z) <= tol);
      }
      batch.advance();
    }
  }
}

TEST_CASE("spectral window construction") {
  const double x = detail::kTwoPi * 1e4;
  const SpectralWindow w = spectral_window(x, std::pow(x, 0.25));
  CHECK(w.tau == doctest::Approx(100.0));
  CHECK(w.oscillators.size() == 100);
  CHECK(w.oscillators.front().n == 1);
  CHECK(w.oscillators.front().amplitude == 2.0);
  CHECK(w.oscillators.front().omega == doctest::Approx(std::log(w.tau)));

  const SpectralWindow w6 = spectral_window(1e6, 10.0);
  CHECK(w6.psi == doctest::Approx(-1e6 / 2 - detail::kPi / 8));
}

TEST_CASE("single-oscillator window is one cosine") {
  // tau < 2 needs x < 8 pi.
  const double x = 20.0;
  const SpectralWindow w = spectral_window(x, 1.0);
  REQUIRE(w.oscillators.size() == 1);
  const double t = x + 0.5;
  const double expect = 2.0 * std::cos(t * w.oscillators[0].omega + w.psi);
  CHECK(spectral_z(w, t) == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("spectral form stays within a calibrated multiple of x^-1/4") {
  // C below is calibrated from the sup error over 100 points per window.
  constexpr double kC = 2.0;
  for (double x : {1e4, 1e5, 1e6}) {
    const double v = std::pow(x, 0.25);
    const SpectralWindow w = spectral_window(x, v);
    for (int i = 0; i < 100; ++i) {
      const double t = x + v * i / 99.0;
      REQUIRE(std::abs(spectral_z(w, t) - hardy_z(t).z) <= kC * std::pow(x, -0.25));
    }
  }
  const SpectralWindow w = spectral_window(1e4, 10.0);
  CHECK(std::abs(spectral_z(w, 1e4 + 5) - hardy_z(1e4 + 5).z) <= kC * 0.1);
}

TEST_CASE("spectral window rejects out-of-range arguments") {
  CHECK_THROWS_AS(spectral_window(1e4, 50.0), DomainError);
  const SpectralWindow w = spectral_window(1e4, 5.0);
  CHECK_THROWS_AS(spectral_z(w, 1e4 + 6.0), DomainError);
  CHECK_THROWS_AS(spectral_z(w, 1e4 - 1.0), DomainError);
}
