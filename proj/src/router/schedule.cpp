#include "gsnet/router/schedule.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "gsnet/core/errors.hpp"

namespace gsnet {

std::string to_string(Protocol p) { return p == Protocol::Nqkd ? "nqkd" : "2qkd"; }

namespace {

using Pair = std::pair<int, int>;
using Matching = std::vector<Pair>;

// All nonempty sets of disjoint pairs over `vs`, each sorted, in lexicographic order.
std::vector<Matching> all_matchings(const std::vector<int>& vs) {
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) pairs.emplace_back(vs[i], vs[j]);
  std::vector<Matching> out;
  Matching cur;
  std::set<int> used;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!cur.empty()) out.push_back(cur);
    for (std::size_t p = start; p < pairs.size(); ++p) {
      const auto [a, b] = pairs[p];
      if (used.contains(a) || used.contains(b)) continue;
      used.insert(a);
      used.insert(b);
      cur.push_back(pairs[p]);
      self(self, p + 1);
      cur.pop_back();
      used.erase(a);
      used.erase(b);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool connects(const std::vector<int>& vs, const std::vector<const Matching*>& copies) {
  std::map<int, int> parent;
  for (int v : vs) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = static_cast<int>(vs.size());
  for (const Matching* m : copies)
    for (const auto& [a, b] : *m) {
      const int ra = find(a), rb = find(b);
      if (ra != rb) {
        parent[ra] = rb;
        --components;
      }
    }
  return components == 1;
}

}  // namespace

std::vector<ExtractionPlan> plan_pairwise_schedule(Router& router, const std::vector<int>& participants) {
  std::vector<int> vs = participants;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  if (vs.size() < 2 || vs.size() > 8)
    throw InvalidArgument("pairwise schedules need 2 to 8 participants");

  std::vector<Matching> feasible;
  std::map<Matching, ExtractionPlan> plans;
  for (const Matching& m : all_matchings(vs)) {
    auto plan = router.find_bell_multicast_plan(m);
    if (!plan) continue;
    feasible.push_back(m);
    plans.emplace(m, std::move(*plan));
  }

  const std::size_t n = feasible.size();
  for (std::size_t copies = 1; copies < vs.size() && copies <= n; ++copies) {
    std::optional<std::pair<std::size_t, std::vector<std::size_t>>> best;  // (pairs, indices)
    std::vector<std::size_t> idx(copies);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<const Matching*> chosen;
      std::size_t total = 0;
      for (std::size_t i : idx) {
        chosen.push_back(&feasible[i]);
        total += feasible[i].size();
      }
      if (connects(vs, chosen) && (!best || total > best->first)) best.emplace(total, idx);
      // Next combination in lexicographic order.
      std::size_t k = copies;
      while (k > 0 && idx[k - 1] == n - copies + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < copies; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (best) {
      std::vector<ExtractionPlan> out;
      for (std::size_t i : best->second) out.push_back(plans.at(feasible[i]));
      return out;
    }
  }
  throw NoPlanError("no Bell-pair schedule connects the participants");
}

std::vector<ExtractionPlan> plan_explicit_schedule(Router& router,
                                                   const std::vector<std::vector<std::pair<int, int>>>& copies) {
  std::vector<ExtractionPlan> out;
  for (const auto& pairs : copies) {
    auto plan = router.find_bell_multicast_plan(pairs);
    if (!plan) throw NoPlanError("requested Bell pairs cannot be extracted from one copy");
    out.push_back(std::move(*plan));
  }
  return out;
}

int network_use_accounting(const std::vector<ExtractionPlan>& plans, Protocol protocol,
                           const std::vector<int>& participants) {
  if (plans.empty()) throw InvalidArgument("no plans to account for");
  int copies = 0;
  for (const ExtractionPlan& p : plans) {
    const ResourceKind want = protocol == Protocol::Nqkd ? ResourceKind::Ghz : ResourceKind::BellMulticast;
    if (p.kind != want)
      throw InvalidArgument("plan kind does not match protocol " + to_string(protocol));
    copies += p.copies_required;
  }
  if (protocol == Protocol::Nqkd) return copies;

  std::vector<int> vs = participants;
  std::vector<const Matching*> links;
  for (const ExtractionPlan& p : plans) {
    links.push_back(&p.pairs);
    if (participants.empty())
      for (const auto& [a, b] : p.pairs) {
        vs.push_back(a);
        vs.push_back(b);
      }
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (const auto& m : links)
    for (const auto& [a, b] : *m)
      if (!std::binary_search(vs.begin(), vs.end(), a) || !std::binary_search(vs.begin(), vs.end(), b))
        throw InvalidArgument("pair outside the participant set");
  if (!connects(vs, links))
    throw InvalidArgument("pairwise links do not span the participants");
  return copies;
}

}  // namespace gsnet
