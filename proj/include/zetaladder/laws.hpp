#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "zetaladder/ladder.hpp"

namespace zl {

enum class LawId {
  increment,
  mean,
  window_mean,
  incr_diff,
  mult,
  power,
  add,
  mixed,
  gen1,
  gen2,
  complement,
  rho,
  box2,
};

/// Upper-case name, e.g. "INCREMENT".
const char* to_string(LawId id) noexcept;
std::optional<LawId> parse_law_id(std::string_view name);
std::span<const LawId> all_laws() noexcept;

struct LawReport {
  LawId law_id = LawId::increment;
  double T = 0.0;
  int k = 1;
  int r = 1;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  std::string notes;
};

struct ResidualDiagnostic {
  double t = 0.0;
  double r_t = 0.0;            // J(T) - T ln T + (1 + ln 2pi - 2c) T
  double ratio_quarter = 0.0;  // |R| / T^(1/4)
  double ratio_third = 0.0;    // |R| / T^(a_exp + delta)
};

struct EulerEstimate {
  double c_hat = 0.0;
  double c_bar_hat = 0.0;  // 1 - c_hat
};

/// Smallest T accepted by laws evaluated at the scale of T itself.
inline constexpr double kLawMinT = 1e3;
/// Smallest T for MULT, POWER, MIXED and RHO, whose work happens at a
/// derived endpoint far above T.
inline constexpr double kProductLawMinT = 100.0;
/// Largest integration endpoint any law may request.
inline constexpr double kEndpointGuard = 1e9;
/// Largest node-pair count for the BOX2 double sum.
inline constexpr double kBox2PairGuard = 1e9;

/// |lhs - rhs| / max(|lhs|, |rhs|), or 0 when both vanish.
double relative_residual(double lhs, double rhs);

/// Right-hand sides shared by the law table, exposed for algebraic checks.
double mult_rhs(std::span<const double> increments, double c_bar);
double add_rhs(std::span<const double> increments);
double generation_rhs(double increment, double lambda, double c_bar);

/// Evaluates one law; never judges pass or fail. Requires 1 <= r <= k <= 8.
LawReport verify_law(LawId id, double T, int k, int r, const Constants& consts,
                     HardyLittlewood& hl);

/// c_hat = 1 - J(T^(r-1), T^r) / T^(r-1).
EulerEstimate estimate_euler_constant(double T, int r, const Constants& consts,
                                      HardyLittlewood& hl);

/// Euler's constant as the integral of (1/(1+t) - e^-t) / t over (0, inf).
double euler_reference_dirichlet(double tol);

ResidualDiagnostic hli_residual(double T, const Constants& consts, HardyLittlewood& hl);

}  // namespace zl
