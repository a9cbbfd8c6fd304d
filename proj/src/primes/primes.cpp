#include "zetaladder/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "zetaladder/error.hpp"

namespace zl {
namespace {

constexpr std::int64_t kSegment = 1 << 18;

std::vector<std::int64_t> small_primes(std::int64_t limit) {
  std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<std::int64_t> out;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = 1;
  }
  return out;
}

}  // namespace

const char* to_string(PrimePiMode m) noexcept {
  switch (m) {
    case PrimePiMode::exact_sieve: return "exact_sieve";
    case PrimePiMode::t_over_ln_t: return "t_over_ln_t";
    case PrimePiMode::log_integral: return "log_integral";
  }
  return "unknown";
}

std::int64_t count_primes(std::int64_t n) {
  if (n < 2) return 0;
  const auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n))) + 1;
  const std::vector<std::int64_t> base = small_primes(root);
  std::vector<char> seg(static_cast<std::size_t>(kSegment));
  std::int64_t count = 0;
  for (std::int64_t lo = 2; lo <= n; lo += kSegment) {
    const std::int64_t hi = std::min(n, lo + kSegment - 1);
    std::fill(seg.begin(), seg.end(), 0);
    for (std::int64_t p : base) {
      if (p * p > hi) break;
      std::int64_t j = std::max(p * p, (lo + p - 1) / p * p);
      for (; j <= hi; j += p) seg[static_cast<std::size_t>(j - lo)] = 1;
    }
    for (std::int64_t i = lo; i <= hi; ++i) count += seg[static_cast<std::size_t>(i - lo)] == 0;
  }
  return count;
}

// Ramanujan's series: li(x) = gamma + ln ln x + sqrt(x) sum_{n>=1}
//   (-1)^(n-1) (ln x)^n / (n! 2^(n-1)) sum_{k=0}^{floor((n-1)/2)} 1/(2k+1).
double log_integral(double x) {
  if (!(x > 1.0) || !std::isfinite(x)) throw DomainError("li: x must exceed 1");
  constexpr double kGamma = 0.57721566490153286060651209;
  const double l = std::log(x);
  double term = l;  // (-1)^(n-1) (ln x)^n / (n! 2^(n-1))
  double inner = 0.0;
  double sum = 0.0;
  for (int n = 1; n < 400; ++n) {
    if (n > 1) term *= -l / (2.0 * n);
    if (n % 2 == 1) inner += 1.0 / n;
    const double add = term * inner;
    sum += add;
    if (n > l && std::abs(add) < 1e-17 * std::abs(sum)) break;
  }
  return kGamma + std::log(l) + std::sqrt(x) * sum;
}

PrimePiResult prime_pi(double x, PrimePiMode mode) {
  if (!std::isfinite(x)) throw DomainError("prime_pi: x must be finite");
  PrimePiResult r;
  r.x = x;
  r.mode = mode;
  switch (mode) {
    case PrimePiMode::exact_sieve:
      if (x < 2.0) throw DomainError("prime_pi: exact mode needs x >= 2");
      if (x > kSieveLimit)
        throw CapabilityError("prime_pi: x = " + std::to_string(x) +
                              " exceeds the sieve limit 1e8; use t_over_ln_t or log_integral");
      r.count = count_primes(static_cast<std::int64_t>(std::floor(x)));
      r.value = static_cast<double>(r.count);
      break;
    case PrimePiMode::t_over_ln_t:
      if (!(x > 1.0)) throw DomainError("prime_pi: approximate modes need x > 1");
      r.value = x / std::log(x);
      break;
    case PrimePiMode::log_integral:
      if (!(x > 1.0)) throw DomainError("prime_pi: approximate modes need x > 1");
      r.value = log_integral(x);
      break;
  }
  return r;
}

}  // namespace zl
