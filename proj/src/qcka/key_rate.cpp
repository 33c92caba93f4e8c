#include "gsnet/qcka/key_rate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <string>

#include "gsnet/core/errors.hpp"

namespace gsnet {

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw InvalidArgument("binary entropy needs x in [0, 1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  // log1p keeps (1-x) log(1-x) accurate for small x.
  const double nats = -x * std::log(x) - (1.0 - x) * std::log1p(-x);
  return nats / std::numbers::ln2;
}

double akr_n(double qber, double qx) { return 1.0 - (binary_entropy(qber) + binary_entropy(qx)); }

Akr2 akr_2(double r_ab1, double r_b2b3, double r_ab2) {
  if (r_ab1 <= 0.0 || r_b2b3 <= 0.0 || r_ab2 <= 0.0) return {0.0, true};
  return {1.0 / (1.0 / r_ab2 + std::max(1.0 / r_ab1, 1.0 / r_b2b3)), false};
}

namespace {

struct Edge {
  int a, b, copy;
  double inv_rate;
};

}  // namespace

Akr2 conference_rate(const std::vector<std::vector<Link>>& copies, const std::map<Link, double>& rates) {
  std::vector<Edge> edges;
  std::set<int> vertices;
  for (std::size_t c = 0; c < copies.size(); ++c) {
    for (Link l : copies[c]) {
      if (l.first > l.second) std::swap(l.first, l.second);
      vertices.insert(l.first);
      vertices.insert(l.second);
      const auto it = rates.find(l);
      if (it == rates.end()) throw InvalidArgument("no rate for link " + std::to_string(l.first) + "-" +
                                                   std::to_string(l.second));
      if (it->second <= 0.0) continue;
      edges.push_back({l.first, l.second, static_cast<int>(c), 1.0 / it->second});
    }
  }
  const std::vector<int> vs(vertices.begin(), vertices.end());
  const int need = static_cast<int>(vs.size()) - 1;
  if (need <= 0 || static_cast<int>(edges.size()) < need) return {0.0, true};
  if (edges.size() > 28) throw CapExceeded("too many links for spanning-tree enumeration");

  auto pos = [&vs](int v) { return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
  double best_cost = std::numeric_limits<double>::infinity();
  const std::uint32_t m = static_cast<std::uint32_t>(edges.size());
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << m); ++s) {
    if (std::popcount(s) != need) continue;
    std::vector<int> parent(vs.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&parent](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    bool tree = true;
    std::vector<double> per_copy(copies.size(), 0.0);
    for (std::uint32_t e = 0; e < m && tree; ++e) {
      if (!((s >> e) & 1U)) continue;
      const int ra = find(pos(edges[e].a)), rb = find(pos(edges[e].b));
      if (ra == rb) tree = false;
      parent[ra] = rb;
      per_copy[edges[e].copy] = std::max(per_copy[edges[e].copy], edges[e].inv_rate);
    }
    if (!tree) continue;
    double cost = 0.0;
    for (double c : per_copy) cost += c;
    best_cost = std::min(best_cost, cost);
  }
  if (!std::isfinite(best_cost)) return {0.0, true};
  return {1.0 / best_cost, false};
}

}  // namespace gsnet
