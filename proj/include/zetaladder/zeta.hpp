#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace zl {

/// Lowest height accepted by theta / hardy_z.
inline constexpr double kTMin = 10.0;
/// Below this height Z is evaluated from Euler-Maclaurin summation of zeta.
inline constexpr double kTCross = 200.0;

enum class ZMethod { riemann_siegel, euler_maclaurin };

const char* to_string(ZMethod m) noexcept;

struct ZSample {
  double t = 0.0;
  double z = 0.0;
  std::int64_t terms_used = 0;  // floor(sqrt(t/2pi)) for Riemann-Siegel
  ZMethod method = ZMethod::riemann_siegel;
};

/// Riemann-Siegel theta, Im log Gamma(1/4 + it/2) - (t/2) log pi.
double theta(double t);

/// theta(t) reduced into [-pi, pi], keeping the digits lost by a plain
/// double reduction at large t.
double theta_mod_2pi(double t);

/// Hardy's Z(t) = exp(i theta(t)) zeta(1/2 + it), real with |Z| = |zeta|.
ZSample hardy_z(double t);

/// Length of the Riemann-Siegel main sum, floor(sqrt(t / 2pi)).
std::int64_t rs_terms(double t);

/// Z(t) from the Riemann-Siegel formula with corrections C0..C4.
/// Valid (to 1e-6) for t >= kTCross; usable lower down for overlap checks.
double z_riemann_siegel(double t);

/// Z(t) from Euler-Maclaurin summation of zeta(1/2 + it).
double z_euler_maclaurin(double t);

/// zeta(1/2 + it) by Euler-Maclaurin summation, any t >= 0.
std::complex<double> zeta_critical_em(double t);

/// |zeta(1/2 + it)|^2 for any t >= 0, picking the evaluation path by height.
double abs_zeta_sq(double t);

// -- local spectral form --------------------------------------------------

struct Oscillator {
  std::int64_t n = 0;
  double amplitude = 0.0;  // 2 / sqrt(n)
  double omega = 0.0;      // ln(tau / n)
};

/// Frozen-phase oscillator bank of Z near an anchor height x.
struct SpectralWindow {
  double x = 0.0;
  double v = 0.0;
  double tau = 0.0;  // sqrt(x / 2pi)
  double psi = 0.0;  // -x/2 - pi/8
  std::vector<Oscillator> oscillators;
};

SpectralWindow spectral_window(double x, double v);

/// Sum of the window's oscillators at t in [x, x + v]. A diagnostic only.
double spectral_z(const SpectralWindow& w, double t);

}  // namespace zl
