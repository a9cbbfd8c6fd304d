#pragma once

// Internal pieces shared by the pointwise Z evaluator and the batched panel
// evaluator: term tables, a vectorisable cosine and the C0..C4 remainder.

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace zl::detail {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;
inline constexpr double kInvTwoPi = 0.159154943091895335768883763372514362;
inline constexpr long double kTwoPiL = 6.28318530717958647692528676655900577L;
inline constexpr long double kPiL = 3.14159265358979323846264338327950288L;

// 2pi split into three pieces of at most 24 significant bits each, so k * piece
// is exact for |k| < 2^29.
inline constexpr double kTwoPiA = 6.283185482025146484375;
inline constexpr double kTwoPiB = -1.7484555314695172e-07;
inline constexpr double kTwoPiC = -6.8604979977715316e-15;

/// x - 2pi * round(x / 2pi), in [-pi, pi]. Exact reduction while
/// |x / 2pi| < 2^29; the error grows slowly past that.
inline double reduce_2pi(double x) {
  double k = x * kInvTwoPi;
  k = (k + 0x1.8p52) - 0x1.8p52;
  return ((x - k * kTwoPiA) - k * kTwoPiB) - k * kTwoPiC;
}

/// cos(x), branch-free so loops over it vectorise; ~1e-15 absolute.
inline double cos_fast(double x) {
  const double r = reduce_2pi(x);
  const double r2 = r * r;
  // cos r = 1 - r^2 p(r^2), p = sum_{j>=1} (-1)^(j-1) r^(2j-2) / (2j)!; |r| <= pi.
  double p = 1.0 / 265252859812191058636308480000000.0;
  p = p * r2 - 1.0 / 304888344611713860501504000000.0;
  p = p * r2 + 1.0 / 403291461126605635584000000.0;
  p = p * r2 - 1.0 / 620448401733239439360000.0;
  p = p * r2 + 1.0 / 1124000727777607680000.0;
  p = p * r2 - 1.0 / 2432902008176640000.0;
  p = p * r2 + 1.0 / 6402373705728000.0;
  p = p * r2 - 1.0 / 20922789888000.0;
  p = p * r2 + 1.0 / 87178291200.0;
  p = p * r2 - 1.0 / 479001600.0;
  p = p * r2 + 1.0 / 3628800.0;
  p = p * r2 - 1.0 / 40320.0;
  p = p * r2 + 1.0 / 720.0;
  p = p * r2 - 1.0 / 24.0;
  p = p * r2 + 1.0 / 2.0;
  return 1.0 - r2 * p;
}

/// Width of a term group in ln n; Taylor moments are taken about each
/// group's centre.
inline constexpr double kGroupWidth = 1.0;
/// Number of Taylor moments per group. With |offset| <= 1 and
/// |ln n - centre| <= 1/2 the truncation error is below 1e-18.
inline constexpr int kMoments = 16;

struct TermGroup {
  std::int64_t first = 0;  // inclusive
  std::int64_t last = 0;   // inclusive
  double centre = 0.0;     // in ln n
};

struct RsTables {
  std::int64_t max_terms = 0;
  std::vector<double> log_n;     // index n, entry 0 unused
  std::vector<double> inv_sqrt;  // n^(-1/2)
  std::vector<TermGroup> groups;
  // eta_pow[n][k] = (ln n - centre(n))^k
  std::vector<std::array<double, kMoments>> eta_pow;
};

/// Tables covering every main-sum length used for t <= kTableMaxT.
inline constexpr double kTableMaxT = 1.01e9;
const RsTables& rs_tables();

/// Remainder (-1)^(N-1) (t/2pi)^(-1/4) sum_k C_k(p) (t/2pi)^(-k/2).
double rs_remainder(double t, std::int64_t n_terms);

/// sum_{n<=N} n^(-1/2) cos(t ln n - theta_red), theta_red = theta mod 2pi.
double rs_main_sum(double t, double theta_red, std::int64_t n_terms);

/// Length of the direct sum used by Euler-Maclaurin summation at height t.
std::int64_t em_terms(double t);

}  // namespace zl::detail
