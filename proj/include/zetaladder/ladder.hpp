#pragma once

#include <vector>

#include "zetaladder/quadrature.hpp"

namespace zl {

/// Numeric constants used by the ladder and the laws. Derived values are
/// computed from c on every access.
class Constants {
 public:
  static constexpr double kEuler = 0.57721566490153286060651209;

  /// Throws DomainError unless 1/4 <= a_exp <= 1/3, delta > 0 and all values
  /// are finite.
  explicit Constants(double c0 = 0.0, double a_exp = 1.0 / 3.0, double delta = 0.05);

  double c() const noexcept { return kEuler; }
  double c_bar() const noexcept { return 1.0 - kEuler; }
  double ln2pi() const noexcept;
  double lambda1() const noexcept { return 2.0 * c() - 1.0 - ln2pi(); }
  double lambda2() const noexcept { return c() - ln2pi(); }
  double c0() const noexcept { return c0_; }
  double a_exp() const noexcept { return a_exp_; }
  double delta() const noexcept { return delta_; }

 private:
  double c0_;
  double a_exp_;
  double delta_;
};

struct LadderPoint {
  double t = 0.0;
  double j = 0.0;         // J(t)
  double phi1 = 0.0;
  double residual = 0.0;  // ladder_rhs(phi1) - J(t)
};

struct ReverseSequence {
  double base = 0.0;
  int k = 0;
  std::vector<double> points;  // T^0 = base, ..., T^k
};

inline constexpr double kPhi1RelTol = 1e-12;
inline constexpr double kInverseRelTol = 1e-10;
inline constexpr double kLadderMinT = 100.0;
inline constexpr int kMaxSequenceLength = 8;

/// w ln w + (c - ln 2pi) w + c0.
double ladder_rhs(double w, const Constants& k);

/// Root w of ladder_rhs(w) = j in [lo, hi] by safeguarded Newton from w0.
/// Throws BracketError when the interval does not bracket the root.
double solve_ladder_equation(double j, const Constants& k, double w0, double lo, double hi);

/// phi1(t): the root of ladder_rhs(w) = J(t), searched in [t/2, 2t].
LadderPoint phi1(double t, const Constants& k, HardyLittlewood& hl);

/// x > t_target with phi1(x) = t_target, solved as J(x) = ladder_rhs(t_target).
double phi1_inverse(double t_target, const Constants& k, HardyLittlewood& hl);

/// T^0 = t, T^r = phi1_inverse(T^(r-1)) for r = 1..k, 1 <= k <= 8.
ReverseSequence reverse_sequence(double t, int k, const Constants& consts, HardyLittlewood& hl);

/// d phi1 / dt = Z(t)^2 / (ln phi1 + 1 + c - ln 2pi).
double phi1_derivative(const LadderPoint& p, const Constants& k);

}  // namespace zl
