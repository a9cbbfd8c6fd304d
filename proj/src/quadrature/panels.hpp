#pragma once

// Panel-level quadrature shared by the cached J(T) integrator and the
// standalone integrate_z2.

#include <cstdint>
#include <functional>

namespace zl::detail {

struct PanelSum {
  double value = 0.0;
  double err = 0.0;
  std::int64_t panels = 0;
};

/// Panels [start + i h, start + (i + 1) h] for i < count, each integrated
/// with the coarse/fine Gauss pair and refined by halving when the two
/// disagree by more than the default budget. Needs start >= 10.
PanelSum run_panels(double start, double h, std::int64_t count);

/// Z(t)^2 over an arbitrary [a, b] with a >= 10, as a single refined panel.
PanelSum panel_direct(double a, double b);

/// |zeta(1/2 + it)|^2 over [a, b], 0 <= a <= b <= 10.
PanelSum head_integral(double a, double b);

/// Runs fn(i) for i < count on up to `threads` threads. Results must be
/// written to per-index slots by fn.
void parallel_for(std::int64_t count, unsigned threads,
                  const std::function<void(std::int64_t)>& fn);

}  // namespace zl::detail
