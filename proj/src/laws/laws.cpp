#include "zetaladder/laws.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "zetaladder/error.hpp"
#include "zetaladder/primes.hpp"
#include "zetaladder/zeta.hpp"

namespace zl {
namespace {

struct LawName {
  LawId id;
  const char* name;
};

constexpr std::array<LawName, 13> kNames = {{
    {LawId::increment, "INCREMENT"},
    {LawId::mean, "MEAN"},
    {LawId::window_mean, "WINDOW_MEAN"},
    {LawId::incr_diff, "INCR_DIFF"},
    {LawId::mult, "MULT"},
    {LawId::power, "POWER"},
    {LawId::add, "ADD"},
    {LawId::mixed, "MIXED"},
    {LawId::gen1, "GEN1"},
    {LawId::gen2, "GEN2"},
    {LawId::complement, "COMPLEMENT"},
    {LawId::rho, "RHO"},
    {LawId::box2, "BOX2"},
}};

constexpr std::array<LawId, 13> kAll = {
    LawId::increment, LawId::mean,  LawId::window_mean, LawId::incr_diff, LawId::mult,
    LawId::power,     LawId::add,   LawId::mixed,       LawId::gen1,      LawId::gen2,
    LawId::complement, LawId::rho, LawId::box2};

double dj(HardyLittlewood& hl, double a, double b) { return hl.increment(a, b).value; }

bool is_product_law(LawId id) {
  return id == LawId::mult || id == LawId::power || id == LawId::mixed || id == LawId::rho;
}

// Highest point phi1_inverse may probe when called at x.
double inverse_endpoint(double x, double c_bar) { return x * (1.0 + 4.0 * c_bar / std::log(x)); }

void guard_endpoint(LawId id, double x, double c_bar) {
  const double end = inverse_endpoint(x, c_bar);
  if (!(end <= kEndpointGuard))
    throw CapabilityError(std::string(to_string(id)) + ": integration endpoint " +
                          std::to_string(end) + " exceeds the guard " +
                          std::to_string(kEndpointGuard));
}

double box2_double_sum(double t0, double t1, double t2) {
  const std::vector<QuadratureNode> xs = quadrature_nodes(t0, t1);
  const std::vector<QuadratureNode> ys = quadrature_nodes(t1, t2);
  const double pairs = static_cast<double>(xs.size()) * static_cast<double>(ys.size());
  if (pairs > kBox2PairGuard)
    throw CapabilityError("BOX2: " + std::to_string(pairs) + " node pairs exceed the guard " +
                          std::to_string(kBox2PairGuard));
  std::vector<double> fy(ys.size());
  for (std::size_t j = 0; j < ys.size(); ++j) {
    const double z = hardy_z(ys[j].t).z;
    fy[j] = ys[j].weight * z * z;
  }
  double total = 0.0;
  for (const QuadratureNode& x : xs) {
    const double zx = hardy_z(x.t).z;
    const double fx = x.weight * zx * zx;
    double row = 0.0;
    for (double f : fy) row += fx * f;
    total += row;
  }
  return total;
}

}  // namespace

const char* to_string(LawId id) noexcept {
  for (const LawName& n : kNames)
    if (n.id == id) return n.name;
  return "UNKNOWN";
}

std::optional<LawId> parse_law_id(std::string_view name) {
  for (const LawName& n : kNames)
    if (name == n.name) return n.id;
  return std::nullopt;
}

std::span<const LawId> all_laws() noexcept { return kAll; }

double relative_residual(double lhs, double rhs) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

double mult_rhs(std::span<const double> increments, double c_bar) {
  double prod = 1.0;
  for (double d : increments) prod *= d;
  return prod * std::pow(c_bar, 1.0 - static_cast<double>(increments.size()));
}

double add_rhs(std::span<const double> increments) {
  double sum = 0.0;
  for (double d : increments) sum += d;
  return sum;
}

double generation_rhs(double increment, double lambda, double c_bar) {
  const double scaled = increment / c_bar;
  return scaled * std::log(std::exp(lambda) * scaled);
}

LawReport verify_law(LawId id, double T, int k, int r, const Constants& consts,
                     HardyLittlewood& hl) {
  const std::string name = to_string(id);
  if (k < 1 || k > kMaxSequenceLength || r < 1 || r > k)
    throw DomainError(name + ": need 1 <= r <= k <= " + std::to_string(kMaxSequenceLength));
  const double min_t = is_product_law(id) ? kProductLawMinT : kLawMinT;
  if (!(T >= min_t) || !std::isfinite(T))
    throw DomainError(name + ": T = " + std::to_string(T) + " is below " + std::to_string(min_t));

  const double cb = consts.c_bar();
  LawReport rep;
  rep.law_id = id;
  rep.T = T;
  rep.k = k;
  rep.r = r;

  auto sequence = [&](int len) { return reverse_sequence(T, len, consts, hl).points; };

  switch (id) {
    case LawId::increment: {
      const auto p = sequence(k);
      rep.lhs = dj(hl, p[r - 1], p[r]);
      rep.rhs = cb * p[r - 1];
      break;
    }
    case LawId::mean: {
      const auto p = sequence(k);
      rep.lhs = dj(hl, p[r - 1], p[r]) / p[r - 1];
      rep.rhs = cb;
      break;
    }
    case LawId::window_mean: {
      const auto p = sequence(k);
      const double width = p[r] - p[r - 1];
      rep.lhs = dj(hl, p[r - 1], p[r]) / width;
      rep.rhs = cb * p[r - 1] / width;
      break;
    }
    case LawId::incr_diff: {
      if (r + 1 > kMaxSequenceLength)
        throw DomainError(name + ": needs T^(r+1), so r <= " +
                          std::to_string(kMaxSequenceLength - 1));
      const auto p = sequence(std::max(k, r + 1));
      rep.lhs = dj(hl, p[r], p[r + 1]) - dj(hl, p[r - 1], p[r]);
      rep.rhs = cb * (p[r] - p[r - 1]);
      rep.notes = "uses T^(r+1)";
      break;
    }
    case LawId::mult: {
      const auto p = sequence(k);
      double prod = 1.0;
      for (int i = 0; i < k; ++i) prod *= p[static_cast<std::size_t>(i)];
      guard_endpoint(id, prod, cb);
      std::vector<double> incs;
      for (int i = 1; i <= k; ++i) incs.push_back(dj(hl, p[i - 1], p[i]));
      rep.lhs = dj(hl, prod, phi1_inverse(prod, consts, hl));
      rep.rhs = mult_rhs(incs, cb);
      rep.notes = "P = " + std::to_string(prod);
      break;
    }
    case LawId::power: {
      const double tk = std::pow(T, k);
      guard_endpoint(id, tk, cb);
      const double t1 = phi1_inverse(T, consts, hl);
      const double inc = dj(hl, T, t1);
      rep.lhs = dj(hl, tk, phi1_inverse(tk, consts, hl));
      rep.rhs = std::pow(cb, 1.0 - k) * std::pow(inc, k);
      rep.notes = "T^k = " + std::to_string(tk);
      break;
    }
    case LawId::add: {
      const auto p = sequence(k);
      double sum = 0.0;
      for (int i = 0; i < k; ++i) sum += p[static_cast<std::size_t>(i)];
      guard_endpoint(id, sum, cb);
      std::vector<double> incs;
      for (int i = 1; i <= k; ++i) incs.push_back(dj(hl, p[i - 1], p[i]));
      rep.lhs = k == 1 ? incs[0] : dj(hl, sum, phi1_inverse(sum, consts, hl));
      rep.rhs = add_rhs(incs);
      break;
    }
    case LawId::mixed: {
      const auto p = sequence(3);
      const double m = p[0] + p[1] * p[2];
      guard_endpoint(id, m, cb);
      rep.lhs = dj(hl, m, phi1_inverse(m, consts, hl));
      rep.rhs = dj(hl, p[0], p[1]) + dj(hl, p[1], p[2]) * dj(hl, p[2], p[3]) / cb;
      rep.notes = "M = T + T^1 T^2; k and r unused";
      break;
    }
    case LawId::gen1: {
      const auto p = sequence(k);
      rep.lhs = hl.integral(p[r - 1]).value;
      rep.rhs = generation_rhs(dj(hl, p[r - 1], p[r]), consts.lambda1(), cb);
      rep.notes = "logarithmic form";
      break;
    }
    case LawId::gen2: {
      const auto p = sequence(k);
      rep.lhs = hl.integral(p[r]).value;
      rep.rhs = generation_rhs(dj(hl, p[r - 1], p[r]), consts.lambda2(), cb);
      rep.notes = "logarithmic form";
      break;
    }
    case LawId::complement: {
      const LadderPoint pt = phi1(T, consts, hl);
      const PrimePiResult pi = prime_pi(T, PrimePiMode::exact_sieve);
      rep.lhs = pt.phi1 + cb * pi.value;
      rep.rhs = T;
      rep.notes = "pi(T) = " + std::to_string(pi.count);
      break;
    }
    case LawId::rho: {
      const auto p = sequence(k);
      double prod = 1.0;
      for (int i = 0; i < k; ++i) prod *= p[static_cast<std::size_t>(i)];
      rep.lhs = prod - p[static_cast<std::size_t>(k)];
      rep.rhs = 0.9 * std::pow(T, k);
      rep.notes = "lhs > rhs is the claimed bound";
      break;
    }
    case LawId::box2: {
      const auto p = sequence(2);
      rep.lhs = box2_double_sum(p[0], p[1], p[2]);
      rep.rhs = dj(hl, p[0], p[1]) * dj(hl, p[1], p[2]);
      rep.notes = "k and r unused";
      break;
    }
  }
  rep.abs_residual = std::abs(rep.lhs - rep.rhs);
  rep.rel_residual = relative_residual(rep.lhs, rep.rhs);
  return rep;
}

EulerEstimate estimate_euler_constant(double T, int r, const Constants& consts,
                                      HardyLittlewood& hl) {
  if (!(T >= kLawMinT) || !std::isfinite(T))
    throw DomainError("estimate_euler_constant: T must be at least 1e3");
  if (r < 1 || r > kMaxSequenceLength)
    throw DomainError("estimate_euler_constant: r must lie in [1, 8]");
  const auto p = reverse_sequence(T, r, consts, hl).points;
  EulerEstimate e;
  e.c_bar_hat = dj(hl, p[r - 1], p[r]) / p[r - 1];
  e.c_hat = 1.0 - e.c_bar_hat;
  return e;
}

ResidualDiagnostic hli_residual(double T, const Constants& consts, HardyLittlewood& hl) {
  if (!(T >= kLawMinT) || !std::isfinite(T))
    throw DomainError("hli_residual: T must be at least 1e3");
  ResidualDiagnostic d;
  d.t = T;
  const double j = hl.integral(T).value;
  d.r_t = j - T * std::log(T) + (1.0 + consts.ln2pi() - 2.0 * consts.c()) * T;
  d.ratio_quarter = std::abs(d.r_t) / std::pow(T, 0.25);
  d.ratio_third = std::abs(d.r_t) / std::pow(T, consts.a_exp() + consts.delta());
  return d;
}

}  // namespace zl
