#pragma once

// Reference implementations for the tests. They share no code with the library:
// plain std::vector state vectors, explicit 2x2 matrices and brute-force searches.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using cd = std::complex<double>;
using Vec = std::vector<cd>;
using Mat2 = std::array<cd, 4>;  // row major

inline const cd I1{0.0, 1.0};

inline Mat2 mat_i() { return {1, 0, 0, 1}; }
inline Mat2 mat_x() { return {0, 1, 1, 0}; }
inline Mat2 mat_y() { return {0, -I1, I1, 0}; }
inline Mat2 mat_z() { return {1, 0, 0, -1}; }
inline Mat2 mat_h() {
  const double r = 1.0 / std::sqrt(2.0);
  return {r, r, r, -r};
}
inline Mat2 mat_s() { return {1, 0, 0, I1}; }

inline Mat2 letter(char c) {
  switch (c) {
    case 'X': return mat_x();
    case 'Y': return mat_y();
    case 'Z': return mat_z();
    case 'H': return mat_h();
    case 'S': return mat_s();
    default: return mat_i();
  }
}

inline Mat2 mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline Mat2 dagger(const Mat2& a) { return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}; }

/// Product of the letters left to right, "HS" = H * S.
inline Mat2 word(const std::string& w) {
  Mat2 m = mat_i();
  for (char c : w) m = mul(m, letter(c));
  return m;
}

/// Equal up to a global phase.
inline bool proportional(const Mat2& a, const Mat2& b, double tol = 1e-9) {
  cd ratio = 0;
  for (int i = 0; i < 4; ++i)
    if (std::abs(b[i]) > tol) {
      ratio = a[i] / b[i];
      break;
    }
  if (std::abs(std::abs(ratio) - 1.0) > tol) return false;
  for (int i = 0; i < 4; ++i)
    if (std::abs(a[i] - ratio * b[i]) > tol) return false;
  return true;
}

// Qubit q of n is bit n-1-q.
inline std::uint64_t bit(int n, int q) { return std::uint64_t{1} << (n - 1 - q); }

inline void apply(Vec& v, int n, int q, const Mat2& m) {
  const std::uint64_t b = bit(n, q);
  for (std::uint64_t i = 0; i < v.size(); ++i) {
    if (i & b) continue;
    const cd a0 = v[i], a1 = v[i | b];
    v[i] = m[0] * a0 + m[1] * a1;
    v[i | b] = m[2] * a0 + m[3] * a1;
  }
}

/// prod CZ_e |+>^n for 0-based edges.
inline Vec graph_state(int n, const std::vector<std::pair<int, int>>& edges) {
  Vec v(std::size_t{1} << n, cd(std::pow(2.0, -n / 2.0), 0.0));
  for (std::uint64_t i = 0; i < v.size(); ++i) {
    int parity = 0;
    for (const auto& [a, b] : edges)
      if ((i & bit(n, a)) && (i & bit(n, b))) parity ^= 1;
    if (parity) v[i] = -v[i];
  }
  return v;
}

inline cd inner(const Vec& a, const Vec& b) {
  cd s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

/// |<a|b>|^2 / (<a|a><b|b>).
inline double fidelity(const Vec& a, const Vec& b) {
  return std::norm(inner(a, b)) / (std::real(inner(a, a)) * std::real(inner(b, b)));
}

/// Projects qubit q onto the eigenvector of Pauli p ('X','Y','Z') with eigenvalue
/// (-1)^m and removes it. Returns the unnormalized remainder.
inline Vec project(const Vec& v, int n, int q, char p, int m) {
  Mat2 proj;
  const Mat2 pm = letter(p);
  const double s = m ? -0.5 : 0.5;
  for (int i = 0; i < 4; ++i) proj[i] = 0.5 * mat_i()[i] + s * pm[i];
  Vec w = v;
  apply(w, n, q, proj);
  // Keep the component along the eigenvector: contract qubit q with it.
  Vec e(2);
  {
    // eigenvector = first nonzero column of proj, normalized
    cd c0 = proj[0], c1 = proj[2];
    if (std::abs(c0) + std::abs(c1) < 1e-12) {
      c0 = proj[1];
      c1 = proj[3];
    }
    const double nn = std::sqrt(std::norm(c0) + std::norm(c1));
    e = {c0 / nn, c1 / nn};
  }
  Vec out(std::size_t{1} << (n - 1), 0.0);
  const std::uint64_t b = bit(n, q);
  for (std::uint64_t i = 0; i < w.size(); ++i) {
    std::uint64_t hi = i >> (n - q);
    std::uint64_t lo = i & (b - 1);
    std::uint64_t j = (hi << (n - 1 - q)) | lo;
    out[j] += std::conj((i & b) ? e[1] : e[0]) * w[i];
  }
  return out;
}

inline double norm2(const Vec& v) { return std::real(inner(v, v)); }

/// Edge set of a labelled graph as a bitmask over the n(n-1)/2 vertex pairs.
inline int pair_index(int n, int a, int b) {
  if (a > b) std::swap(a, b);
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

inline std::uint64_t lc_mask(int n, std::uint64_t edges, int v) {
  std::vector<int> nb;
  for (int u = 0; u < n; ++u)
    if (u != v && (edges >> pair_index(n, u, v) & 1U)) nb.push_back(u);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j) edges ^= std::uint64_t{1} << pair_index(n, nb[i], nb[j]);
  return edges;
}

/// Size of the labelled LC orbit by breadth-first closure.
inline std::size_t orbit_size(int n, const std::vector<std::pair<int, int>>& edges) {
  std::uint64_t start = 0;
  for (const auto& [a, b] : edges) start |= std::uint64_t{1} << pair_index(n, a, b);
  std::set<std::uint64_t> seen{start};
  std::deque<std::uint64_t> q{start};
  while (!q.empty()) {
    const std::uint64_t e = q.front();
    q.pop_front();
    for (int v = 0; v < n; ++v) {
      const std::uint64_t f = lc_mask(n, e, v);
      if (seen.insert(f).second) q.push_back(f);
    }
  }
  return seen.size();
}

/// Binary entropy with long double and compensated summation.
inline double entropy(double x) {
  if (x == 0.0 || x == 1.0) return 0.0;
  const long double a = x, b = 1.0L - a;
  long double sum = 0.0L, c = 0.0L;
  for (long double t : {-a * std::log2(a), -b * std::log2(b)}) {
    const long double y = t - c;
    const long double s = sum + y;
    c = (s - sum) - y;
    sum = s;
  }
  return static_cast<double>(sum);
}

/// All connected labelled graphs on n vertices as edge lists.
inline std::vector<std::vector<std::pair<int, int>>> connected_graphs(int n) {
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << all.size()); ++m) {
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (m >> i & 1U) es.push_back(all[i]);
    std::vector<int> comp(n);
    for (int v = 0; v < n; ++v) comp[v] = v;
    auto find = [&](int v) {
      while (comp[v] != v) v = comp[v] = comp[comp[v]];
      return v;
    };
    for (const auto& [a, b] : es) comp[find(a)] = find(b);
    bool ok = true;
    for (int v = 1; v < n; ++v) ok = ok && find(v) == find(0);
    if (ok) out.push_back(std::move(es));
  }
  return out;
}

}  // namespace oracle
