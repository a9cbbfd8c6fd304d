#include <cmath>
#include <complex>
#include <string>

#include "zeta/rs_detail.hpp"
#include "zetaladder/error.hpp"
#include "zetaladder/zeta.hpp"

namespace zl {
namespace {

using detail::kPiL;
using detail::kTwoPiL;

constexpr long double kAsymptoticFrom = 100.0L;

// Asymptotic expansion through the 1/t^3 term; the next term is
// 31/(80640 t^5) < 4e-14 for t >= 100.
long double theta_asymptotic(long double t) {
  const long double main = t / 2.0L * (std::log(t / kTwoPiL) - 1.0L) - kPiL / 8.0L;
  return main + 1.0L / (48.0L * t) + 7.0L / (5760.0L * t * t * t);
}

// Im log Gamma(w) for Re w > 0 via upward shift and Stirling's series.
long double im_log_gamma(std::complex<long double> w) {
  constexpr int kShift = 20;
  long double args = 0.0L;
  for (int j = 0; j < kShift; ++j) args += std::arg(w + static_cast<long double>(j));
  const std::complex<long double> u = w + static_cast<long double>(kShift);
  // B_{2k} / (2k (2k-1)) for k = 1..8
  constexpr long double kStirling[] = {
      1.0L / 12.0L,           -1.0L / 360.0L,      1.0L / 1260.0L,
      -1.0L / 1680.0L,        1.0L / 1188.0L,      -691.0L / 360360.0L,
      1.0L / 156.0L,          -3617.0L / 122400.0L};
  const std::complex<long double> inv = 1.0L / u;
  const std::complex<long double> inv2 = inv * inv;
  std::complex<long double> series = 0.0L;
  std::complex<long double> pw = inv;
  for (long double c : kStirling) {
    series += c * pw;
    pw *= inv2;
  }
  const std::complex<long double> lg =
      (u - 0.5L) * std::log(u) - u + 0.5L * std::log(kTwoPiL) + series;
  return lg.imag() - args;
}

long double theta_long(long double t) {
  if (t >= kAsymptoticFrom) return theta_asymptotic(t);
  return im_log_gamma({0.25L, t / 2.0L}) - t / 2.0L * std::log(kPiL);
}

void check_domain(double t, const char* op) {
  if (!(t >= kTMin) || !std::isfinite(t))
    throw DomainError(std::string(op) + ": t = " + std::to_string(t) +
                      " is below t_min = " + std::to_string(kTMin));
}

}  // namespace

double theta(double t) {
  check_domain(t, "theta");
  return static_cast<double>(theta_long(t));
}

double theta_mod_2pi(double t) {
  check_domain(t, "theta");
  long double th = std::fmod(theta_long(t), kTwoPiL);
  if (th > kPiL) th -= kTwoPiL;
  if (th < -kPiL) th += kTwoPiL;
  return static_cast<double>(th);
}

}  // namespace zl
