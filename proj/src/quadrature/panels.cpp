#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "quadrature/panels.hpp"
#include "zetaladder/quadrature.hpp"
#include "zetaladder/z_batch.hpp"
#include "zetaladder/zeta.hpp"

namespace zl::detail {
namespace {

constexpr int kMaxDepth = 12;
constexpr double kHeadBudgetRate = 1e-12;

double z_squared(double t) {
  const double z = hardy_z(t).z;
  return z * z;
}

// Coarse rule on [a, b] and the fine rule on its two halves; the fine value
// is kept and the difference is the error estimate.
template <class F>
PanelSum gauss_pair(double a, double b, F&& f) {
  const GaussRule& g = gauss_legendre_16();
  const double c = 0.5 * (a + b);
  const double hw = 0.5 * (b - a);
  double coarse = 0.0, left = 0.0, right = 0.0;
  for (std::size_t k = 0; k < 16; ++k) {
    coarse += g.weights[k] * f(c + hw * g.nodes[k]);
    left += g.weights[k] * f(c - 0.5 * hw + 0.5 * hw * g.nodes[k]);
    right += g.weights[k] * f(c + 0.5 * hw + 0.5 * hw * g.nodes[k]);
  }
  coarse *= hw;
  const double fine = 0.5 * hw * (left + right);
  return {fine, std::abs(fine - coarse), 1};
}

template <class F>
PanelSum adaptive(double a, double b, double budget_rate, int depth, F&& f) {
  PanelSum s = gauss_pair(a, b, f);
  if (s.err <= budget_rate * (b - a) || depth >= kMaxDepth) return s;
  const double m = 0.5 * (a + b);
  const PanelSum l = adaptive(a, m, budget_rate, depth + 1, f);
  const PanelSum r = adaptive(m, b, budget_rate, depth + 1, f);
  return {l.value + r.value, l.err + r.err, s.panels + l.panels + r.panels};
}

std::array<double, 48> panel_offsets(double h) {
  const GaussRule& g = gauss_legendre_16();
  const double hw = 0.5 * h;
  std::array<double, 48> off{};
  for (std::size_t k = 0; k < 16; ++k) {
    off[k] = hw * g.nodes[k];
    off[16 + k] = -0.5 * hw + 0.5 * hw * g.nodes[k];
    off[32 + k] = 0.5 * hw + 0.5 * hw * g.nodes[k];
  }
  return off;
}

// Folds the 48 node values of one panel into (fine, |fine - coarse|).
PanelSum combine(const std::array<double, 48>& z, double h) {
  const GaussRule& g = gauss_legendre_16();
  const double hw = 0.5 * h;
  double coarse = 0.0, left = 0.0, right = 0.0;
  for (std::size_t k = 0; k < 16; ++k) {
    coarse += g.weights[k] * z[k] * z[k];
    left += g.weights[k] * z[16 + k] * z[16 + k];
    right += g.weights[k] * z[32 + k] * z[32 + k];
  }
  coarse *= hw;
  const double fine = 0.5 * hw * (left + right);
  return {fine, std::abs(fine - coarse), 1};
}

}  // namespace

PanelSum panel_direct(double a, double b) {
  if (!(b > a)) return {};
  return adaptive(a, b, kDefaultTolRate, 0, z_squared);
}

PanelSum head_integral(double a, double b) {
  PanelSum total;
  if (!(b > a)) return total;
  // Unit panels on the integer grid keep the head decomposition fixed.
  double lo = a;
  while (lo < b) {
    const double hi = std::min(b, std::floor(lo) + 1.0);
    const PanelSum s = adaptive(lo, hi, kHeadBudgetRate, 0, abs_zeta_sq);
    total.value += s.value;
    total.err += s.err;
    total.panels += s.panels;
    lo = hi;
  }
  return total;
}

PanelSum run_panels(double start, double h, std::int64_t count) {
  PanelSum total;
  if (count <= 0) return total;
  const std::array<double, 48> off = panel_offsets(h);
  std::array<double, 48> z{};
  const double first_centre = start + 0.5 * h;

  auto accept = [&](const PanelSum& s, double centre) {
    if (s.err <= kDefaultTolRate * h) {
      total.value += s.value;
      total.err += s.err;
      total.panels += 1;
      return;
    }
    const PanelSum r = panel_direct(centre - 0.5 * h, centre + 0.5 * h);
    total.value += r.value;
    total.err += r.err;
    total.panels += 1 + r.panels;
  };

  if (start >= kTCross) {
    ZPanelBatch batch(first_centre, h, off);
    for (std::int64_t i = 0; i < count; ++i) {
      batch.evaluate(z);
      accept(combine(z, h), batch.centre());
      batch.advance();
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      const double centre = first_centre + static_cast<double>(i) * h;
      for (std::size_t j = 0; j < 48; ++j) z[j] = hardy_z(centre + off[j]).z;
      accept(combine(z, h), centre);
    }
  }
  return total;
}

void parallel_for(std::int64_t count, unsigned threads,
                  const std::function<void(std::int64_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const auto n_workers =
      static_cast<unsigned>(std::min<std::int64_t>(threads, count));
  std::atomic<std::int64_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;
  std::int64_t first_error_index = count;
  auto worker = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (i < first_error_index) {
          first_error_index = i;
          first_error = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace zl::detail
