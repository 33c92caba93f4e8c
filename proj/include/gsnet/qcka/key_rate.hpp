#pragma once

#include <map>
#include <utility>
#include <vector>

namespace gsnet {

/// H(x) = -x log2 x - (1-x) log2(1-x), exactly 0 at both endpoints.
/// Throws InvalidArgument outside [0, 1].
double binary_entropy(double x);

/// Asymptotic conference key rate of the GHZ protocol, 1 - H(qber) - H(qx). May be negative.
double akr_n(double qber, double qx);

struct Akr2 {
  double value = 0.0;
  bool dead_link = false;  // some rate was <= 0; value is then 0
};

/// Two-copy pairwise rate: 1 / (1/r_ab2 + max(1/r_ab1, 1/r_b2b3)). Links r_ab1 and
/// r_b2b3 share the first copy, r_ab2 uses the second.
Akr2 akr_2(double r_ab1, double r_b2b3, double r_ab2);

using Link = std::pair<int, int>;

/// Pairwise conference rate for a general schedule: copies[c] lists the links
/// established on copy c and rates gives each link's key rate.
///
/// For a spanning tree T of the links, copy c must be repeated max_{e in T, e in c}
/// 1/r_e times per conference bit; the rate is the best tree's reciprocal total.
/// Links with rate <= 0 are unusable; with no usable tree the result is dead.
Akr2 conference_rate(const std::vector<std::vector<Link>>& copies, const std::map<Link, double>& rates);

}  // namespace gsnet
