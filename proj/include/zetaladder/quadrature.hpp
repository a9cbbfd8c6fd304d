#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zl {

/// Default absolute tolerance per unit of integration length.
inline constexpr double kDefaultTolRate = 1e-3;

/// Default absolute tolerance for an integral over [a, b].
double default_tol(double a, double b);

struct QuadratureResult {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double err_estimate = 0.0;
  // Panels evaluated by this call. Zero when the result came from the cache.
  std::int64_t panels = 0;
};

/// 16-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::array<double, 16> nodes;
  std::array<double, 16> weights;
};
const GaussRule& gauss_legendre_16();

/// Largest panel width used at height t: about three periods of Z(t)^2,
/// capped at 2.
double panel_width(double t);

/// One quadrature node of the fine rule.
struct QuadratureNode {
  double t = 0.0;
  double weight = 0.0;
};

/// Nodes and weights of the fine rule over [a, b] (a >= 10), so that
/// sum weight * Z(t)^2 reproduces integrate_z2 without refinement.
std::vector<QuadratureNode> quadrature_nodes(double a, double b);

/// Integral of Z(t)^2 over [a, b] by Gauss-Legendre panels, independent of
/// any cache. a < 10 routes the head through |zeta|^2 directly.
/// Throws NonConvergence when the error estimate exceeds tol.
QuadratureResult integrate_z2(double a, double b, double tol, unsigned threads = 1);

/// Persistent table of J(t) values.
///
/// File format: one record per line, `t <TAB> J(t) <TAB> err`, sorted by t,
/// with 17 significant digits so values survive a round trip bit for bit.
class CheckpointStore {
 public:
  struct Record {
    double j = 0.0;
    double tol = 0.0;  // error estimate attached to j
  };

  /// Adds a record. An existing record at t is kept.
  void insert(double t, double j, double tol);
  std::optional<Record> find(double t) const;
  const std::map<double, Record>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool dirty() const noexcept { return dirty_; }
  void mark_clean() noexcept { dirty_ = false; }

  std::string serialize() const;
  /// Throws LoadError naming `source` and the line of the first bad record.
  static CheckpointStore parse(std::string_view text, const std::string& source);

  /// Missing file yields an empty store.
  static CheckpointStore load(const std::string& path);
  /// Writes through a temporary file and a rename.
  void save(const std::string& path) const;

 private:
  std::map<double, Record> records_;
  bool dirty_ = false;
};

/// Computes J(T) = integral of |zeta(1/2+it)|^2 over [0, T].
///
/// Values are assembled on a fixed grid: the head [0, 10], then blocks of
/// length 64 starting at 10, each split into uniform panels. J at any T is
/// the running block sum plus the panels of T's block up to T, so a value
/// does not depend on cache contents or thread count.
class HardyLittlewood {
 public:
  explicit HardyLittlewood(CheckpointStore& store, unsigned threads = 1);

  /// J(T); records T (and grid anchors passed on the way) in the store.
  QuadratureResult integral(double T, double tol);
  QuadratureResult integral(double T) { return integral(T, default_tol(0.0, T)); }

  /// J(b) - J(a) from two integral() calls.
  QuadratureResult increment(double a, double b, double tol);
  QuadratureResult increment(double a, double b) {
    return increment(a, b, default_tol(a, b));
  }

  /// Total panels evaluated since construction.
  std::int64_t panels_evaluated() const noexcept { return panels_; }

  CheckpointStore& store() noexcept { return store_; }

  static constexpr double kGridStart = 10.0;
  static constexpr double kBlockLength = 64.0;

 private:
  struct Sum {
    double value = 0.0;
    double err = 0.0;
  };

  Sum prefix(std::int64_t block);
  Sum head();

  CheckpointStore& store_;
  unsigned threads_;
  std::int64_t panels_ = 0;
  std::map<std::int64_t, Sum> prefix_;  // J at the start of block m
};

/// Convenience wrapper around HardyLittlewood with one thread.
QuadratureResult hl_integral(double T, double tol, CheckpointStore& store);

}  // namespace zl
