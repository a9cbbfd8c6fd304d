#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace zl {

/// Evaluates Z(t) at `centre + offset[j]` for a run of equally spaced panel
/// centres, sharing the main-sum work across all nodes of a panel.
///
/// The main sum's coefficients n^(-1/2) exp(-i c ln n) are carried from one
/// centre to the next by a fixed rotation, grouped by ln n, and reduced to
/// Taylor moments; each node then costs O(groups * moments) instead of
/// O(sqrt t). Every node must satisfy kTCross <= t <= 1.01e9 and
/// |offset| <= 1.
class ZPanelBatch {
 public:
  ZPanelBatch(double first_centre, double stride, std::span<const double> offsets);

  double centre() const noexcept { return centre_; }
  std::size_t size() const noexcept { return offsets_.size(); }

  /// Z at every node of the current panel; out.size() == size().
  void evaluate(std::span<double> out);

  /// Moves to the next centre (first_centre + (i+1) * stride).
  void advance();

 private:
  static constexpr int kM = 16;

  void extend_terms(std::int64_t n_terms);

  double first_centre_;
  double stride_;
  std::int64_t index_ = 0;
  double centre_;
  double max_offset_ = 0.0;
  std::vector<double> offsets_;

  // Per node: Taylor weights (real and imaginary parts of (-i d)^k / k!).
  std::vector<std::array<double, kM>> w_re_;
  std::vector<std::array<double, kM>> w_im_;
  // Per node and group: exp(-i d lambda_g), row-major [node][group].
  std::vector<double> e_re_;
  std::vector<double> e_im_;
  std::size_t n_groups_ = 0;

  // Running coefficients b_n and their per-step rotations.
  std::int64_t n_tracked_ = 0;
  std::vector<double> b_re_, b_im_;
  std::vector<double> rot_re_, rot_im_;

  // Scratch moments, [group][k].
  std::vector<std::array<double, kM>> m_re_, m_im_;
};

}  // namespace zl
