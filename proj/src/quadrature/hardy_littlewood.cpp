#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "quadrature/panels.hpp"
#include "zeta/rs_detail.hpp"
#include "zetaladder/error.hpp"
#include "zetaladder/quadrature.hpp"
#include "zetaladder/zeta.hpp"

namespace zl {
namespace {

using Hl = HardyLittlewood;

constexpr std::int64_t kChunkPanels = 64;
constexpr std::int64_t kBlocksPerRound = 256;
// Every 2^16 units of height a block boundary is written to the store.
constexpr std::int64_t kAnchorStride = 1024;
constexpr double kMaxHeight = detail::kTableMaxT;

double block_start(std::int64_t m) { return Hl::kGridStart + Hl::kBlockLength * static_cast<double>(m); }

std::int64_t block_panels(std::int64_t m) {
  return static_cast<std::int64_t>(std::ceil(Hl::kBlockLength / panel_width(block_start(m + 1))));
}

bool is_anchor(std::int64_t m) {
  if (m % kAnchorStride == 0) return true;
  for (int j = 2; j <= 18; ++j) {
    const double x = std::pow(10.0, j / 2.0);
    if (static_cast<std::int64_t>(std::floor((x - Hl::kGridStart) / Hl::kBlockLength)) == m)
      return true;
  }
  return false;
}

// Block index of a boundary height, or -1.
std::int64_t boundary_index(double t) {
  if (t < Hl::kGridStart) return -1;
  const auto k = static_cast<std::int64_t>(std::llround((t - Hl::kGridStart) / Hl::kBlockLength));
  return block_start(k) == t ? k : -1;
}

void check_tol(double tol, const char* op) {
  if (!(tol > 0.0) || std::isnan(tol))
    throw DomainError(std::string(op) + ": tol must be positive");
}

void check_height(double t, const char* op) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw DomainError(std::string(op) + ": height must be finite and nonnegative");
  if (t > kMaxHeight)
    throw CapabilityError(std::string(op) + ": height " + std::to_string(t) +
                          " exceeds the supported maximum " + std::to_string(kMaxHeight));
}

}  // namespace

double default_tol(double a, double b) { return kDefaultTolRate * std::max(1.0, b - a); }

double panel_width(double t) {
  const double l = std::log(t / detail::kTwoPi);
  if (!(l > 0.0)) return 2.0;
  return std::min(2.0, 6.0 * detail::kPi / l);
}

QuadratureResult integrate_z2(double a, double b, double tol, unsigned threads) {
  check_height(a, "integrate_z2");
  check_height(b, "integrate_z2");
  check_tol(tol, "integrate_z2");
  if (a > b) throw DomainError("integrate_z2: a must not exceed b");
  QuadratureResult res{a, b, 0.0, 0.0, 0};
  if (a == b) return res;

  if (a < kTMin) {
    const detail::PanelSum h = detail::head_integral(a, std::min(b, kTMin));
    res.value += h.value;
    res.err_estimate += h.err;
    res.panels += h.panels;
  }
  const double lo = std::max(a, kTMin);
  if (b > lo) {
    const auto n = static_cast<std::int64_t>(std::ceil((b - lo) / panel_width(b)));
    const double h = (b - lo) / static_cast<double>(n);
    const std::int64_t chunks = (n + kChunkPanels - 1) / kChunkPanels;
    std::vector<detail::PanelSum> parts(static_cast<std::size_t>(chunks));
    detail::parallel_for(chunks, threads, [&](std::int64_t c) {
      const std::int64_t first = c * kChunkPanels;
      parts[static_cast<std::size_t>(c)] = detail::run_panels(
          lo + static_cast<double>(first) * h, h, std::min(kChunkPanels, n - first));
    });
    for (const auto& p : parts) {
      res.value += p.value;
      res.err_estimate += p.err;
      res.panels += p.panels;
    }
  }
  if (res.err_estimate > tol)
    throw NonConvergence("integrate_z2: error estimate " + std::to_string(res.err_estimate) +
                             " exceeds tol " + std::to_string(tol),
                         res.value, res.err_estimate);
  return res;
}

std::vector<QuadratureNode> quadrature_nodes(double a, double b) {
  check_height(b, "quadrature_nodes");
  if (!(a >= kTMin) || a > b)
    throw DomainError("quadrature_nodes: need 10 <= a <= b");
  std::vector<QuadratureNode> out;
  if (a == b) return out;
  const GaussRule& g = gauss_legendre_16();
  const auto n = static_cast<std::int64_t>(std::ceil((b - a) / panel_width(b)));
  const double h = (b - a) / static_cast<double>(n);
  const double qw = 0.25 * h;
  out.reserve(static_cast<std::size_t>(n) * 32);
  for (std::int64_t i = 0; i < n; ++i) {
    const double c = a + 0.5 * h + static_cast<double>(i) * h;
    for (double mid : {c - qw, c + qw})
      for (std::size_t k = 0; k < 16; ++k) out.push_back({mid + qw * g.nodes[k], qw * g.weights[k]});
  }
  return out;
}

HardyLittlewood::HardyLittlewood(CheckpointStore& store, unsigned threads)
    : store_(store), threads_(std::max(1u, threads)) {}

HardyLittlewood::Sum HardyLittlewood::head() {
  static const detail::PanelSum h = detail::head_integral(0.0, kTMin);
  store_.insert(kGridStart, h.value, h.err);
  return {h.value, h.err};
}

HardyLittlewood::Sum HardyLittlewood::prefix(std::int64_t m) {
  std::int64_t known = -1;
  Sum acc;
  if (auto it = prefix_.upper_bound(m); it != prefix_.begin()) {
    --it;
    known = it->first;
    acc = it->second;
  }
  if (known == m) return acc;

  // A boundary record in the store may be closer than anything in memory.
  const auto& recs = store_.records();
  const double floor_t = known < 0 ? -1.0 : block_start(known);
  for (auto it = recs.upper_bound(block_start(m)); it != recs.begin();) {
    --it;
    if (it->first <= floor_t) break;
    const std::int64_t k = boundary_index(it->first);
    if (k < 0) continue;
    known = k;
    acc = {it->second.j, it->second.tol};
    prefix_[k] = acc;
    break;
  }
  if (known < 0) {
    known = 0;
    acc = head();
    prefix_[0] = acc;
  }

  std::vector<detail::PanelSum> sums;
  while (known < m) {
    const std::int64_t round = std::min(kBlocksPerRound, m - known);
    sums.assign(static_cast<std::size_t>(round), {});
    const std::int64_t base = known;
    detail::parallel_for(round, threads_, [&](std::int64_t i) {
      const std::int64_t blk = base + i;
      const std::int64_t np = block_panels(blk);
      sums[static_cast<std::size_t>(i)] =
          detail::run_panels(block_start(blk), kBlockLength / static_cast<double>(np), np);
    });
    for (const auto& s : sums) {
      acc.value += s.value;
      acc.err += s.err;
      panels_ += s.panels;
      ++known;
      prefix_[known] = acc;
      if (is_anchor(known)) store_.insert(block_start(known), acc.value, acc.err);
    }
  }
  return acc;
}

QuadratureResult HardyLittlewood::integral(double T, double tol) {
  check_height(T, "hl_integral");
  check_tol(tol, "hl_integral");
  QuadratureResult res{0.0, T, 0.0, 0.0, 0};
  if (T == 0.0) return res;

  const std::int64_t panels_before = panels_;
  if (const auto rec = store_.find(T)) {
    res.value = rec->j;
    res.err_estimate = rec->tol;
  } else if (T < kGridStart) {
    const detail::PanelSum h = detail::head_integral(0.0, T);
    panels_ += h.panels;
    res.value = h.value;
    res.err_estimate = h.err;
  } else {
    const auto m = static_cast<std::int64_t>(std::floor((T - kGridStart) / kBlockLength));
    const Sum p = prefix(m);
    res.value = p.value;
    res.err_estimate = p.err;
    const double start = block_start(m);
    if (T > start) {
      const std::int64_t np = block_panels(m);
      const double h = kBlockLength / static_cast<double>(np);
      const std::int64_t full =
          std::min(np - 1, static_cast<std::int64_t>(std::floor((T - start) / h)));
      const detail::PanelSum body = detail::run_panels(start, h, full);
      const double tail_from = start + static_cast<double>(full) * h;
      const detail::PanelSum tail = detail::panel_direct(tail_from, T);
      res.value += body.value;
      res.value += tail.value;
      res.err_estimate += body.err + tail.err;
      panels_ += body.panels + tail.panels;
    }
  }
  store_.insert(T, res.value, res.err_estimate);
  res.panels = panels_ - panels_before;
  if (res.err_estimate > tol)
    throw NonConvergence("hl_integral: error estimate " + std::to_string(res.err_estimate) +
                             " exceeds tol " + std::to_string(tol) + " at T = " + std::to_string(T),
                         res.value, res.err_estimate);
  return res;
}

QuadratureResult HardyLittlewood::increment(double a, double b, double tol) {
  check_tol(tol, "increment");
  if (a > b) throw DomainError("increment: a must not exceed b");
  QuadratureResult res{a, b, 0.0, 0.0, 0};
  if (a == b) {
    check_height(a, "increment");
    return res;
  }
  const double inf = std::numeric_limits<double>::infinity();
  const QuadratureResult ja = integral(a, inf);
  const QuadratureResult jb = integral(b, inf);
  res.value = std::max(0.0, jb.value - ja.value);
  res.err_estimate = ja.err_estimate + jb.err_estimate;
  res.panels = ja.panels + jb.panels;
  if (res.err_estimate > tol)
    throw NonConvergence("increment: error estimate exceeds tol", res.value, res.err_estimate);
  return res;
}

QuadratureResult hl_integral(double T, double tol, CheckpointStore& store) {
  return HardyLittlewood(store).integral(T, tol);
}

}  // namespace zl
