#include <cmath>

#include "zetaladder/quadrature.hpp"

namespace zl {
namespace {

GaussRule build_rule() {
  constexpr int n = 16;
  GaussRule rule{};
  const long double pi = 3.14159265358979323846264338327950288L;
  for (int i = 0; i < n / 2; ++i) {
    long double x = std::cos(pi * (i + 0.75L) / (n + 0.5L));
    long double dp = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1.0L, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0L);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    const long double w = 2.0L / ((1.0L - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = static_cast<double>(-x);
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = static_cast<double>(x);
    rule.weights[static_cast<std::size_t>(i)] = static_cast<double>(w);
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = static_cast<double>(w);
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre_16() {
  static const GaussRule rule = build_rule();
  return rule;
}

}  // namespace zl
