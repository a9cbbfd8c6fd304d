#include <cmath>
#include <string>

#include "zeta/rs_detail.hpp"
#include "zetaladder/error.hpp"
#include "zetaladder/zeta.hpp"

namespace zl {

SpectralWindow spectral_window(double x, double v) {
  if (!(x >= kTMin) || !std::isfinite(x))
    throw DomainError("spectral_window: x = " + std::to_string(x) + " is below t_min");
  if (!(v > 0.0) || v > std::pow(x, 0.25))
    throw DomainError("spectral_window: v = " + std::to_string(v) +
                      " must satisfy 0 < v <= x^(1/4)");
  SpectralWindow w;
  w.x = x;
  w.v = v;
  w.tau = std::sqrt(x / detail::kTwoPi);
  w.psi = -x / 2.0 - detail::kPi / 8.0;
  const auto count = static_cast<std::int64_t>(std::floor(w.tau));
  w.oscillators.reserve(static_cast<std::size_t>(count));
  for (std::int64_t n = 1; n <= count; ++n) {
    const double dn = static_cast<double>(n);
    w.oscillators.push_back({n, 2.0 / std::sqrt(dn), std::log(w.tau / dn)});
  }
  return w;
}

double spectral_z(const SpectralWindow& w, double t) {
  if (!(t >= w.x && t <= w.x + w.v))
    throw DomainError("spectral_z: t = " + std::to_string(t) + " lies outside [x, x + v]");
  // t * omega and psi are both of size x; combine them in extended precision.
  const long double psi = -static_cast<long double>(w.x) / 2.0L - detail::kPiL / 8.0L;
  double sum = 0.0;
  for (const Oscillator& o : w.oscillators) {
    const long double ph =
        std::fmod(static_cast<long double>(t) * o.omega + psi, detail::kTwoPiL);
    sum += o.amplitude * std::cos(static_cast<double>(ph));
  }
  return sum;
}

}  // namespace zl
