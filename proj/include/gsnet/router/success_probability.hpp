#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

namespace gsnet {

enum class EntanglingGate { Fusion, Cz };

using Probability = boost::rational<std::int64_t>;

/// Heralded success probability of a circuit: 1/2 per fusion gate and 1/9 per
/// linear-optics CZ gate. Throws InvalidArgument for an empty list and CapExceeded
/// if the denominator overflows 64 bits.
Probability circuit_success_probability(const std::vector<EntanglingGate>& gates);

}  // namespace gsnet
