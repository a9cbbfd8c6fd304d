#include <cmath>
#include <complex>
#include <string>

#include "zeta/rs_detail.hpp"
#include "zetaladder/error.hpp"
#include "zetaladder/zeta.hpp"

namespace zl {
namespace detail {

// N >= |s| keeps the ratio of successive correction terms near
// (|s| / 2 pi N)^2 < 1/39; twelve corrections then reach ~1e-17.
std::int64_t em_terms(double t) {
  const double mod_s = std::hypot(0.5, t);
  return std::max<std::int64_t>(20, static_cast<std::int64_t>(std::ceil(mod_s)) + 5);
}

}  // namespace detail

namespace {

// B_{2k} for k = 1..12.
constexpr double kBernoulli[] = {
    1.0 / 6.0,        -1.0 / 30.0,          1.0 / 42.0,       -1.0 / 30.0,
    5.0 / 66.0,       -691.0 / 2730.0,      7.0 / 6.0,        -3617.0 / 510.0,
    43867.0 / 798.0,  -174611.0 / 330.0,    854513.0 / 138.0, -236364091.0 / 2730.0};

}  // namespace

std::complex<double> zeta_critical_em(double t) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw DomainError("zeta_critical_em: t must be finite and nonnegative");
  using cd = std::complex<double>;
  const cd s{0.5, t};
  const std::int64_t n_terms = detail::em_terms(t);

  // sum_{n < N} n^-s, accumulated from the small terms upward.
  cd head{0.0, 0.0};
  for (std::int64_t n = n_terms - 1; n >= 1; --n) {
    const double ln = std::log(static_cast<double>(n));
    head += std::polar(std::exp(-0.5 * ln), -t * ln);
  }

  const double big_n = static_cast<double>(n_terms);
  const double ln_n = std::log(big_n);
  const cd n_pow_minus_s = std::polar(std::exp(-0.5 * ln_n), -t * ln_n);
  cd tail = n_pow_minus_s * big_n / (s - 1.0) + 0.5 * n_pow_minus_s;

  // Corrections B_{2k}/(2k)! s(s+1)...(s+2k-2) N^(-s-2k+1).
  cd rising = s;                 // s(s+1)...(s+2k-2)
  cd n_pow = n_pow_minus_s / big_n;  // N^(-s-1)
  double factorial = 2.0;        // (2k)!
  for (int k = 1; k <= 12; ++k) {
    tail += kBernoulli[k - 1] / factorial * rising * n_pow;
    const double a = 2.0 * k - 1.0;
    rising *= (s + a) * (s + a + 1.0);
    n_pow /= big_n * big_n;
    factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  return head + tail;
}

double z_euler_maclaurin(double t) {
  const double th = theta_mod_2pi(t);
  const std::complex<double> zeta = zeta_critical_em(t);
  return std::cos(th) * zeta.real() - std::sin(th) * zeta.imag();
}

}  // namespace zl
