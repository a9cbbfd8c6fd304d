#include <cmath>
#include <string>

#include "zetaladder/error.hpp"
#include "zetaladder/laws.hpp"
#include "zetaladder/quadrature.hpp"

namespace zl {
namespace {

constexpr double kCutoff = 40.0;
constexpr int kMaxDepth = 30;

// (1/(1+t) - e^-t) / t, written to avoid cancellation near 0.
double integrand(double t) {
  if (t == 0.0) return 0.5;
  return -std::expm1(-t) / t - 1.0 / (1.0 + t);
}

double gauss(double a, double b) {
  const GaussRule& g = gauss_legendre_16();
  const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t k = 0; k < 16; ++k) s += g.weights[k] * integrand(c + hw * g.nodes[k]);
  return hw * s;
}

double adaptive(double a, double b, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double l = gauss(a, m), r = gauss(m, b);
  if (std::abs(l + r - whole) <= tol || depth >= kMaxDepth) return l + r;
  return adaptive(a, m, l, 0.5 * tol, depth + 1) + adaptive(m, b, r, 0.5 * tol, depth + 1);
}

// E1(x) for x >= 1 by its continued fraction (modified Lentz).
double exp_integral_e1(double x) {
  double b = x + 1.0, c = 1.0 / 1e-300, d = 1.0 / b, h = d;
  for (int i = 1; i < 200; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x);
}

}  // namespace

double euler_reference_dirichlet(double tol) {
  if (!(tol >= 1e-12) || !std::isfinite(tol))
    throw DomainError("euler_reference_dirichlet: tol must be at least 1e-12");
  // The quadrature runs far below tol; only the split points are fixed.
  const double inner = 1e-3 * tol;
  const double head = adaptive(0.0, 1.0, gauss(0.0, 1.0), inner, 0);
  const double body = adaptive(1.0, kCutoff, gauss(1.0, kCutoff), inner, 0);
  // Beyond the cutoff: the integral of 1/(t(1+t)) minus that of e^-t / t.
  const double tail = std::log1p(1.0 / kCutoff) - exp_integral_e1(kCutoff);
  return head + body + tail;
}

}  // namespace zl
