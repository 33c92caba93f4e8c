#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gsnet/router/plan.hpp"
#include "gsnet/router/router.hpp"

namespace gsnet {

enum class Protocol { Nqkd, TwoQkd };

std::string to_string(Protocol p);

/// Bell-pair schedule for pairwise key agreement among `participants`: one
/// multicast plan per network copy, whose pairs together connect all participants.
///
/// Chooses the fewest copies, then the most pairs in total, then the
/// lexicographically smallest list of pair sets. Throws NoPlanError when no
/// schedule exists and InvalidArgument for fewer than two or more than eight participants.
std::vector<ExtractionPlan> plan_pairwise_schedule(Router& router, const std::vector<int>& participants);

/// Plans for an explicit schedule, one pair list per copy. Throws NoPlanError when a
/// copy cannot be realised.
std::vector<ExtractionPlan> plan_explicit_schedule(Router& router,
                                                   const std::vector<std::vector<std::pair<int, int>>>& copies);

/// Copies of the network state consumed per conference round.
///
/// Nqkd expects GHZ plans, TwoQkd expects multicast plans whose pairs connect
/// `participants` (the union of pair endpoints when empty). Throws InvalidArgument
/// when the plans do not cover the protocol.
int network_use_accounting(const std::vector<ExtractionPlan>& plans, Protocol protocol,
                           const std::vector<int>& participants = {});

}  // namespace gsnet
