#include <cmath>

#include "zetaladder/error.hpp"
#include "zetaladder/ladder.hpp"

namespace zl {

Constants::Constants(double c0, double a_exp, double delta)
    : c0_(c0), a_exp_(a_exp), delta_(delta) {
  if (!std::isfinite(c0)) throw DomainError("constants: c0 must be finite");
  if (!(a_exp >= 0.25 && a_exp <= 1.0 / 3.0))
    throw DomainError("constants: a_exp must lie in [1/4, 1/3]");
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw DomainError("constants: delta must be positive");
}

double Constants::ln2pi() const noexcept {
  return 1.83787706640934548356065947281123527;
}

}  // namespace zl
