#include "zetaladder/z_batch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zeta/rs_detail.hpp"
#include "zetaladder/error.hpp"
#include "zetaladder/zeta.hpp"

namespace zl {
namespace {

using detail::kTwoPi;

// theta(c + d) - theta(c) from the asymptotic expansion, without forming
// either large value.
double theta_increment(double c, double d) {
  const double main = 0.5 * d * std::log(c / kTwoPi) +
                      0.5 * (c + d) * std::log1p(d / c) - 0.5 * d;
  const double e = c + d;
  const double corr = (1.0 / e - 1.0 / c) / 48.0 +
                      7.0 / 5760.0 * (1.0 / (e * e * e) - 1.0 / (c * c * c));
  return main + corr;
}

}  // namespace

ZPanelBatch::ZPanelBatch(double first_centre, double stride,
                         std::span<const double> offsets)
    : first_centre_(first_centre),
      stride_(stride),
      centre_(first_centre),
      offsets_(offsets.begin(), offsets.end()) {
  for (double d : offsets_) max_offset_ = std::max(max_offset_, std::abs(d));
  if (offsets_.empty() || max_offset_ > 1.0)
    throw DomainError("ZPanelBatch: offsets must be nonempty with |offset| <= 1");
  if (!(first_centre - max_offset_ >= kTCross) || !(stride > 0.0))
    throw DomainError("ZPanelBatch: nodes must lie at or above t = " +
                      std::to_string(kTCross));

  const detail::RsTables& tb = detail::rs_tables();
  n_groups_ = tb.groups.size();
  const std::size_t n_nodes = offsets_.size();
  w_re_.assign(n_nodes, {});
  w_im_.assign(n_nodes, {});
  e_re_.assign(n_nodes * n_groups_, 0.0);
  e_im_.assign(n_nodes * n_groups_, 0.0);
  for (std::size_t j = 0; j < n_nodes; ++j) {
    const double d = offsets_[j];
    double a = 1.0, b = 0.0;  // (-i d)^k / k!
    for (int k = 0; k < kM; ++k) {
      w_re_[j][static_cast<std::size_t>(k)] = a;
      w_im_[j][static_cast<std::size_t>(k)] = b;
      const double na = b * d / (k + 1);
      const double nb = -a * d / (k + 1);
      a = na;
      b = nb;
    }
    for (std::size_t g = 0; g < n_groups_; ++g) {
      const double ang = d * tb.groups[g].centre;
      e_re_[j * n_groups_ + g] = std::cos(ang);
      e_im_[j * n_groups_ + g] = -std::sin(ang);
    }
  }
  m_re_.assign(n_groups_, {});
  m_im_.assign(n_groups_, {});
  b_re_.assign(1, 0.0);
  b_im_.assign(1, 0.0);
  rot_re_.assign(1, 0.0);
  rot_im_.assign(1, 0.0);
}

void ZPanelBatch::extend_terms(std::int64_t n_terms) {
  if (n_terms <= n_tracked_) return;
  const detail::RsTables& tb = detail::rs_tables();
  if (n_terms > tb.max_terms)
    throw DomainError("ZPanelBatch: height beyond the term tables");
  const auto size = static_cast<std::size_t>(n_terms) + 1;
  b_re_.resize(size);
  b_im_.resize(size);
  rot_re_.resize(size);
  rot_im_.resize(size);
  for (auto n = static_cast<std::size_t>(n_tracked_) + 1; n < size; ++n) {
    const double ph = detail::reduce_2pi(centre_ * tb.log_n[n]);
    b_re_[n] = tb.inv_sqrt[n] * std::cos(ph);
    b_im_[n] = -tb.inv_sqrt[n] * std::sin(ph);
    const double rot = detail::reduce_2pi(stride_ * tb.log_n[n]);
    rot_re_[n] = std::cos(rot);
    rot_im_[n] = -std::sin(rot);
  }
  n_tracked_ = n_terms;
}

void ZPanelBatch::evaluate(std::span<double> out) {
  if (out.size() != offsets_.size())
    throw DomainError("ZPanelBatch::evaluate: output size mismatch");
  const detail::RsTables& tb = detail::rs_tables();
  const std::int64_t n_lo = rs_terms(centre_ - max_offset_);
  extend_terms(n_lo);

  std::size_t used_groups = 0;
  for (std::size_t g = 0; g < n_groups_; ++g) {
    const detail::TermGroup& grp = tb.groups[g];
    if (grp.first > n_lo) break;
    std::array<double, kM> mr{}, mi{};
    const auto last = static_cast<std::size_t>(std::min(grp.last, n_lo));
    for (auto n = static_cast<std::size_t>(grp.first); n <= last; ++n) {
      const double br = b_re_[n];
      const double bi = b_im_[n];
      const double* v = tb.eta_pow[n].data();
#pragma omp simd
      for (std::size_t k = 0; k < kM; ++k) {
        mr[k] += v[k] * br;
        mi[k] += v[k] * bi;
      }
    }
    m_re_[g] = mr;
    m_im_[g] = mi;
    used_groups = g + 1;
  }

  const double theta_c = theta_mod_2pi(centre_);
  for (std::size_t j = 0; j < offsets_.size(); ++j) {
    const double d = offsets_[j];
    const double t = centre_ + d;
    double s_re = 0.0, s_im = 0.0;
    const auto& wr = w_re_[j];
    const auto& wi = w_im_[j];
    for (std::size_t g = 0; g < used_groups; ++g) {
      double in_re = 0.0, in_im = 0.0;
      const auto& mr = m_re_[g];
      const auto& mi = m_im_[g];
#pragma omp simd reduction(+ : in_re, in_im)
      for (std::size_t k = 0; k < kM; ++k) {
        in_re += wr[k] * mr[k] - wi[k] * mi[k];
        in_im += wr[k] * mi[k] + wi[k] * mr[k];
      }
      const double er = e_re_[j * n_groups_ + g];
      const double ei = e_im_[j * n_groups_ + g];
      s_re += er * in_re - ei * in_im;
      s_im += er * in_im + ei * in_re;
    }
    const std::int64_t n_node = rs_terms(t);
    for (std::int64_t n = n_lo + 1; n <= n_node; ++n) {
      const auto idx = static_cast<std::size_t>(n);
      const double ph = detail::reduce_2pi(t * tb.log_n[idx]);
      s_re += tb.inv_sqrt[idx] * std::cos(ph);
      s_im -= tb.inv_sqrt[idx] * std::sin(ph);
    }
    const double th = theta_c + theta_increment(centre_, d);
    out[j] = 2.0 * (std::cos(th) * s_re - std::sin(th) * s_im) +
             detail::rs_remainder(t, n_node);
  }
}

void ZPanelBatch::advance() {
  ++index_;
  centre_ = first_centre_ + static_cast<double>(index_) * stride_;
  const auto n_end = static_cast<std::size_t>(n_tracked_);
  double* br = b_re_.data();
  double* bi = b_im_.data();
  const double* rr = rot_re_.data();
  const double* ri = rot_im_.data();
#pragma omp simd
  for (std::size_t n = 1; n <= n_end; ++n) {
    const double re = br[n] * rr[n] - bi[n] * ri[n];
    const double im = br[n] * ri[n] + bi[n] * rr[n];
    br[n] = re;
    bi[n] = im;
  }
}

}  // namespace zl
