#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "zetaladder/error.hpp"

namespace zl::detail {

/// Root of an increasing function on [lo, hi]. `f(x)` returns (value,
/// derivative). Newton steps are taken while they stay inside the shrinking
/// bracket and converge fast enough; bisection otherwise.
template <class F>
double safeguarded_newton(F&& f, double lo, double hi, double x0, double rel_tol,
                          const std::string& op, int max_iter = 200) {
  const double f_lo = f(lo).first;
  const double f_hi = f(hi).first;
  if (!(f_lo <= 0.0) || !(f_hi >= 0.0))
    throw BracketError(op + ": root not bracketed by [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "] (f = " + std::to_string(f_lo) + ", " +
                       std::to_string(f_hi) + ")");
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;

  double x = std::clamp(x0, lo, hi);
  auto [fx, dfx] = f(x);
  double dx_prev = hi - lo;
  double dx = dx_prev;
  for (int it = 0; it < max_iter; ++it) {
    if (fx == 0.0) return x;
    if (fx < 0.0)
      lo = x;
    else
      hi = x;
    const double newton = dfx > 0.0 ? x - fx / dfx : lo - 1.0;
    const bool take_newton =
        newton > lo && newton < hi && std::abs(2.0 * fx) <= std::abs(dx_prev * dfx);
    dx_prev = dx;
    if (take_newton) {
      dx = x - newton;
      x = newton;
    } else {
      dx = 0.5 * (hi - lo);
      x = lo + dx;
    }
    std::tie(fx, dfx) = f(x);
    if (std::abs(dx) <= rel_tol * std::abs(x) || hi - lo <= rel_tol * std::abs(x)) return x;
  }
  throw NonConvergence(op + ": no convergence after " + std::to_string(max_iter) + " iterations",
                       x, hi - lo);
}

}  // namespace zl::detail
