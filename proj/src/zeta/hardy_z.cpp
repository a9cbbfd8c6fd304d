#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "zeta/rs_detail.hpp"
#include "zetaladder/error.hpp"
#include "zetaladder/zeta.hpp"

namespace zl {
namespace detail {
namespace {

#include "zeta/rs_coefficients.inc"

// C0..C4 coefficients side by side, zero padded, so the five Horner chains
// run interleaved.
constexpr std::size_t kRsLen =
    std::max({kRsC0.size(), kRsC1.size(), kRsC2.size(), kRsC3.size(), kRsC4.size()});

template <std::size_t N>
constexpr void pack_column(std::array<std::array<double, 5>, kRsLen>& out, std::size_t k,
                           const std::array<double, N>& c) {
  for (std::size_t j = 0; j < N; ++j) out[j][k] = c[j];
}

constexpr std::array<std::array<double, 5>, kRsLen> pack_coefficients() {
  std::array<std::array<double, 5>, kRsLen> out{};
  pack_column(out, 0, kRsC0);
  pack_column(out, 1, kRsC1);
  pack_column(out, 2, kRsC2);
  pack_column(out, 3, kRsC3);
  pack_column(out, 4, kRsC4);
  return out;
}

constexpr auto kRsPacked = pack_coefficients();

RsTables build_tables() {
  RsTables tb;
  tb.max_terms = static_cast<std::int64_t>(std::sqrt(kTableMaxT / kTwoPi)) + 2;
  const auto n_max = static_cast<std::size_t>(tb.max_terms);
  tb.log_n.assign(n_max + 1, 0.0);
  tb.inv_sqrt.assign(n_max + 1, 0.0);
  tb.eta_pow.assign(n_max + 1, {});
  for (std::size_t n = 1; n <= n_max; ++n) {
    tb.log_n[n] = std::log(static_cast<double>(n));
    tb.inv_sqrt[n] = 1.0 / std::sqrt(static_cast<double>(n));
  }
  std::size_t n = 1;
  while (n <= n_max) {
    const auto g = static_cast<int>(std::floor(tb.log_n[n] / kGroupWidth));
    TermGroup grp;
    grp.first = static_cast<std::int64_t>(n);
    grp.centre = (g + 0.5) * kGroupWidth;
    while (n <= n_max && static_cast<int>(std::floor(tb.log_n[n] / kGroupWidth)) == g) {
      const double eta = tb.log_n[n] - grp.centre;
      double pw = 1.0;
      for (int k = 0; k < kMoments; ++k) {
        tb.eta_pow[n][static_cast<std::size_t>(k)] = pw;
        pw *= eta;
      }
      ++n;
    }
    grp.last = static_cast<std::int64_t>(n) - 1;
    tb.groups.push_back(grp);
  }
  return tb;
}

}  // namespace

const RsTables& rs_tables() {
  static const RsTables tables = build_tables();
  return tables;
}

double rs_remainder(double t, std::int64_t n_terms) {
  const double a = std::sqrt(t / kTwoPi);
  const double x = (a - static_cast<double>(n_terms)) - 0.5;
  const double u = 1.0 / a;
  double acc[5] = {0.0, 0.0, 0.0, 0.0, 0.0};
  for (std::size_t j = kRsLen; j-- > 0;)
    for (std::size_t k = 0; k < 5; ++k) acc[k] = acc[k] * x + kRsPacked[j][k];
  const double sum = acc[0] + u * (acc[1] + u * (acc[2] + u * (acc[3] + u * acc[4])));
  const double sign = ((n_terms - 1) % 2 == 0) ? 1.0 : -1.0;
  return sign * sum / std::sqrt(a);
}

double rs_main_sum(double t, double theta_red, std::int64_t n_terms) {
  const RsTables& tb = rs_tables();
  const std::int64_t in_table = std::min(n_terms, tb.max_terms);
  const double* log_n = tb.log_n.data();
  const double* inv_sqrt = tb.inv_sqrt.data();
  double acc = 0.0;
#pragma omp simd reduction(+ : acc)
  for (std::int64_t n = 1; n <= in_table; ++n)
    acc += inv_sqrt[n] * cos_fast(t * log_n[n] - theta_red);
  for (std::int64_t n = in_table + 1; n <= n_terms; ++n) {
    const double dn = static_cast<double>(n);
    acc += cos_fast(t * std::log(dn) - theta_red) / std::sqrt(dn);
  }
  return acc;
}

}  // namespace detail

const char* to_string(ZMethod m) noexcept {
  return m == ZMethod::riemann_siegel ? "riemann_siegel" : "euler_maclaurin";
}

std::int64_t rs_terms(double t) {
  return static_cast<std::int64_t>(std::floor(std::sqrt(t / detail::kTwoPi)));
}

double z_riemann_siegel(double t) {
  const double th = theta_mod_2pi(t);
  const std::int64_t n = rs_terms(t);
  return 2.0 * detail::rs_main_sum(t, th, n) + detail::rs_remainder(t, n);
}

ZSample hardy_z(double t) {
  if (!(t >= kTMin) || !std::isfinite(t))
    throw DomainError("z: t = " + std::to_string(t) + " is below t_min = " +
                      std::to_string(kTMin));
  ZSample s;
  s.t = t;
  if (t < kTCross) {
    s.method = ZMethod::euler_maclaurin;
    s.z = z_euler_maclaurin(t);
    s.terms_used = detail::em_terms(t);
  } else {
    s.method = ZMethod::riemann_siegel;
    s.terms_used = rs_terms(t);
    s.z = z_riemann_siegel(t);
  }
  return s;
}

double abs_zeta_sq(double t) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw DomainError("abs_zeta_sq: t must be finite and nonnegative");
  if (t < kTCross) return std::norm(zeta_critical_em(t));
  const double z = z_riemann_siegel(t);
  return z * z;
}

}  // namespace zl
