#include "gsnet/router/success_probability.hpp"

#include <limits>

#include "gsnet/core/errors.hpp"

namespace gsnet {

Probability circuit_success_probability(const std::vector<EntanglingGate>& gates) {
  if (gates.empty()) throw InvalidArgument("gate list is empty");
  std::int64_t den = 1;
  for (EntanglingGate g : gates) {
    const std::int64_t f = g == EntanglingGate::Fusion ? 2 : 9;
    if (den > std::numeric_limits<std::int64_t>::max() / f)
      throw CapExceeded("success probability denominator overflows");
    den *= f;
  }
  return Probability(1, den);
}

}  // namespace gsnet
