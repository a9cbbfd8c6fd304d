#include "zetaladder/ladder.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ladder/root_find.hpp"
#include "zetaladder/error.hpp"
#include "zetaladder/zeta.hpp"

namespace zl {
namespace {

constexpr double kNoTol = std::numeric_limits<double>::infinity();
// The inverse is solved a little tighter than its contract so that the
// forward map, whose slope is Z^2 / ln, still round-trips to 1e-10.
constexpr double kInverseSolveTol = 1e-12;

double ladder_slope(double w, const Constants& k) { return std::log(w) + 1.0 + k.c() - k.ln2pi(); }

// Below this w the left side of the ladder equation is not increasing.
double w_guard(const Constants& k) { return std::exp(k.ln2pi() - 1.0 - k.c()); }

double j_value(HardyLittlewood& hl, double t) { return hl.integral(t, kNoTol).value; }

void check_t(double t, const char* op) {
  if (!(t >= kLadderMinT) || !std::isfinite(t))
    throw DomainError(std::string(op) + ": t = " + std::to_string(t) + " is below " +
                      std::to_string(kLadderMinT));
}

[[noreturn]] void rethrow_with_step(const Error& e, int r) {
  const std::string msg = "reverse_sequence step r = " + std::to_string(r) + ": " + e.what();
  switch (e.code()) {
    case ErrorCode::non_convergence: {
      const auto& nc = static_cast<const NonConvergence&>(e);
      throw NonConvergence(msg, nc.best_estimate(), nc.err_estimate());
    }
    case ErrorCode::domain: throw DomainError(msg);
    case ErrorCode::capability: throw CapabilityError(msg);
    case ErrorCode::load: throw LoadError(msg);
    case ErrorCode::bracket: throw BracketError(msg);
    case ErrorCode::usage: throw UsageError(msg);
    case ErrorCode::io: throw IoError(msg);
  }
  throw Error(e.code(), msg);
}

}  // namespace

double ladder_rhs(double w, const Constants& k) {
  return w * std::log(w) + (k.c() - k.ln2pi()) * w + k.c0();
}

double solve_ladder_equation(double j, const Constants& k, double w0, double lo, double hi) {
  if (!std::isfinite(j)) throw DomainError("phi1: J must be finite");
  if (!(lo > w_guard(k)) || !(hi > lo))
    throw DomainError("phi1: search interval must lie above the monotonicity guard");
  auto f = [&](double w) { return std::make_pair(ladder_rhs(w, k) - j, ladder_slope(w, k)); };
  return detail::safeguarded_newton(f, lo, hi, w0, kPhi1RelTol, "phi1");
}

LadderPoint phi1(double t, const Constants& k, HardyLittlewood& hl) {
  check_t(t, "phi1");
  LadderPoint p;
  p.t = t;
  p.j = j_value(hl, t);
  p.phi1 = solve_ladder_equation(p.j, k, t, 0.5 * t, 2.0 * t);
  p.residual = ladder_rhs(p.phi1, k) - p.j;
  return p;
}

double phi1_inverse(double t_target, const Constants& k, HardyLittlewood& hl) {
  check_t(t_target, "phi1_inverse");
  const double target_j = ladder_rhs(t_target, k);
  const double spread = k.c_bar() / std::log(t_target);
  const double lo = t_target;
  const double hi = t_target * (1.0 + 4.0 * spread);
  const double x0 = t_target * (1.0 + spread);
  auto g = [&](double x) {
    const double z = hardy_z(x).z;
    return std::make_pair(j_value(hl, x) - target_j, z * z);
  };
  return detail::safeguarded_newton(g, lo, hi, x0, kInverseSolveTol, "phi1_inverse");
}

ReverseSequence reverse_sequence(double t, int k, const Constants& consts, HardyLittlewood& hl) {
  check_t(t, "reverse_sequence");
  if (k < 1 || k > kMaxSequenceLength)
    throw DomainError("reverse_sequence: k must lie in [1, " +
                      std::to_string(kMaxSequenceLength) + "]");
  ReverseSequence seq;
  seq.base = t;
  seq.k = k;
  seq.points.push_back(t);
  for (int r = 1; r <= k; ++r) {
    try {
      seq.points.push_back(phi1_inverse(seq.points.back(), consts, hl));
    } catch (const Error& e) {
      rethrow_with_step(e, r);
    }
  }
  return seq;
}

double phi1_derivative(const LadderPoint& p, const Constants& k) {
  if (!(p.t >= kTMin) || !(p.phi1 > w_guard(k)) || !std::isfinite(p.phi1))
    throw DomainError("phi1_derivative: point outside the guarded region");
  const double z = hardy_z(p.t).z;
  return z * z / ladder_slope(p.phi1, k);
}

}  // namespace zl
