#pragma once

#include <cstdint>

namespace zl {

/// Largest x for which exact prime counting is offered.
inline constexpr double kSieveLimit = 1e8;

enum class PrimePiMode { exact_sieve, t_over_ln_t, log_integral };

const char* to_string(PrimePiMode m) noexcept;

struct PrimePiResult {
  double x = 0.0;
  PrimePiMode mode = PrimePiMode::exact_sieve;
  std::int64_t count = 0;  // exact mode only
  double value = 0.0;      // count as a real in exact mode, else the approximation
};

/// pi(x) exactly (segmented sieve, x <= kSieveLimit) or approximately.
/// Exact mode needs x >= 2; approximate modes need x > 1.
PrimePiResult prime_pi(double x, PrimePiMode mode);

/// Number of primes <= n by a segmented sieve of Eratosthenes.
std::int64_t count_primes(std::int64_t n);

/// Logarithmic integral li(x), principal value, x > 1.
double log_integral(double x);

}  // namespace zl
