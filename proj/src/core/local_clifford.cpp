#include "gsnet/core/local_clifford.hpp"

#include <array>
#include <cmath>
#include <deque>
#include <vector>

#include "gsnet/core/errors.hpp"

namespace gsnet {

namespace gates {

Eigen::Matrix2cd pauli(Pauli p) {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, C(0, -1), C(0, 1), 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd m;
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

Eigen::Matrix2cd phase() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, std::complex<double>(0, 1);
  return m;
}

Eigen::Matrix2cd sqrt_minus_i_x() {
  const std::complex<double> i(0, 1);
  return (pauli(Pauli::I) - i * pauli(Pauli::X)) / std::sqrt(2.0);
}

Eigen::Matrix2cd sqrt_i_z() {
  const std::complex<double> i(0, 1);
  return (pauli(Pauli::I) + i * pauli(Pauli::Z)) / std::sqrt(2.0);
}

}  // namespace gates

namespace {

constexpr double kTol = 1e-9;

struct Table {
  std::array<Eigen::Matrix2cd, 24> matrix;
  std::array<std::string, 24> name;
  std::array<std::array<SignedPauli, 4>, 24> image;     // indexed by Pauli
  std::array<std::array<SignedPauli, 4>, 24> preimage;
  std::array<std::array<std::uint8_t, 24>, 24> mul;
  std::array<std::uint8_t, 24> inv;
  std::array<std::uint8_t, 24> coset_rep;
  std::array<Pauli, 24> pauli_part;
  std::array<std::uint8_t, 4> of_pauli;
};

// Fix the global phase: first entry with nonzero modulus becomes real positive.
std::pair<Eigen::Matrix2cd, std::complex<double>> normalize(const Eigen::Matrix2cd& m) {
  for (int k = 0; k < 4; ++k) {
    const std::complex<double> a = m(k / 2, k % 2);
    if (std::abs(a) > kTol) {
      const std::complex<double> c = a / std::abs(a);
      return {m / c, c};
    }
  }
  return {m, 1.0};
}

bool same(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  return (a - b).cwiseAbs().maxCoeff() < kTol;
}

SignedPauli match_pauli(const Eigen::Matrix2cd& m) {
  for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z, Pauli::I}) {
    const Eigen::Matrix2cd q = gates::pauli(p);
    if (same(m, q)) return {p, 1};
    if (same(m, -q)) return {p, -1};
  }
  throw Error("conjugation did not yield a Pauli");
}

Table build() {
  Table t;
  std::vector<Eigen::Matrix2cd> mats;
  std::vector<std::string> names;
  auto find = [&](const Eigen::Matrix2cd& m) -> int {
    for (std::size_t i = 0; i < mats.size(); ++i)
      if (same(mats[i], m)) return static_cast<int>(i);
    return -1;
  };
  const std::array<std::pair<Eigen::Matrix2cd, const char*>, 5> gens{{
      {gates::hadamard(), "H"},
      {gates::phase(), "S"},
      {gates::pauli(Pauli::X), "X"},
      {gates::pauli(Pauli::Y), "Y"},
      {gates::pauli(Pauli::Z), "Z"},
  }};
  mats.push_back(gates::pauli(Pauli::I));
  names.emplace_back("I");
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (const auto& [g, gname] : gens) {
      const Eigen::Matrix2cd m = normalize(mats[cur] * g).first;
      if (find(m) >= 0) continue;
      mats.push_back(m);
      names.push_back(cur == 0 ? std::string(gname) : names[cur] + gname);
      queue.push_back(static_cast<int>(mats.size()) - 1);
    }
  }
  if (mats.size() != 24) throw Error("Clifford table has wrong order");

  for (int a = 0; a < 24; ++a) {
    t.matrix[a] = mats[a];
    t.name[a] = names[a];
    for (Pauli p : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
      const Eigen::Matrix2cd q = gates::pauli(p);
      t.image[a][static_cast<int>(p)] = match_pauli(mats[a] * q * mats[a].adjoint());
      t.preimage[a][static_cast<int>(p)] = match_pauli(mats[a].adjoint() * q * mats[a]);
    }
  }
  for (int a = 0; a < 24; ++a) {
    for (int b = 0; b < 24; ++b) {
      const int k = find(normalize(mats[a] * mats[b]).first);
      t.mul[a][b] = static_cast<std::uint8_t>(k);
      if (k == 0) t.inv[a] = static_cast<std::uint8_t>(b);
    }
  }
  for (Pauli p : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z})
    t.of_pauli[static_cast<int>(p)] =
        static_cast<std::uint8_t>(find(normalize(gates::pauli(p)).first));
  for (int a = 0; a < 24; ++a) {
    int best = 24;
    Pauli part = Pauli::I;
    for (Pauli p : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
      const int k = t.mul[a][t.of_pauli[static_cast<int>(p)]];
      if (k < best) {
        best = k;
        // a = k * p^{-1} = k * p up to phase
        part = p;
      }
    }
    t.coset_rep[a] = static_cast<std::uint8_t>(best);
    t.pauli_part[a] = part;
  }
  return t;
}

const Table& table() {
  static const Table t = build();
  return t;
}

}  // namespace

LocalClifford LocalClifford::from_index(int index) {
  if (index < 0 || index >= kOrder)
    throw InvalidArgument("Clifford index out of range: " + std::to_string(index));
  return LocalClifford(static_cast<std::uint8_t>(index));
}

LocalClifford LocalClifford::hadamard() { return named("H"); }
LocalClifford LocalClifford::phase() { return named("S"); }

LocalClifford LocalClifford::pauli(Pauli p) {
  return LocalClifford(table().of_pauli[static_cast<int>(p)]);
}

LocalClifford LocalClifford::named(std::string_view name) {
  const Table& t = table();
  for (int a = 0; a < kOrder; ++a)
    if (t.name[a] == name) return LocalClifford(static_cast<std::uint8_t>(a));
  throw InvalidArgument("unknown Clifford name: " + std::string(name));
}

LocalClifford LocalClifford::from_images(SignedPauli x_image, SignedPauli z_image) {
  if (x_image.letter == Pauli::I || z_image.letter == Pauli::I ||
      commutes(x_image.letter, z_image.letter))
    throw InvalidArgument("Clifford images must be non-identity and anticommute");
  const Table& t = table();
  for (int a = 0; a < kOrder; ++a)
    if (t.image[a][1] == x_image && t.image[a][2] == z_image)
      return LocalClifford(static_cast<std::uint8_t>(a));
  throw InvalidArgument("no Clifford with the given images");
}

std::optional<std::pair<LocalClifford, std::complex<double>>> LocalClifford::from_matrix(
    const Eigen::Matrix2cd& m) {
  const auto [norm, c] = normalize(m);
  const Table& t = table();
  for (int a = 0; a < kOrder; ++a)
    if (same(t.matrix[a], norm))
      return std::make_pair(LocalClifford(static_cast<std::uint8_t>(a)), c);
  return std::nullopt;
}

const std::string& LocalClifford::name() const { return table().name[index_]; }
const Eigen::Matrix2cd& LocalClifford::matrix() const { return table().matrix[index_]; }

SignedPauli LocalClifford::image(Pauli p) const {
  return table().image[index_][static_cast<int>(p)];
}

SignedPauli LocalClifford::preimage(Pauli p) const {
  return table().preimage[index_][static_cast<int>(p)];
}

LocalClifford LocalClifford::operator*(LocalClifford rhs) const {
  return LocalClifford(table().mul[index_][rhs.index_]);
}

LocalClifford LocalClifford::inverse() const { return LocalClifford(table().inv[index_]); }

bool LocalClifford::is_pauli() const { return table().coset_rep[index_] == 0; }

LocalClifford LocalClifford::coset_representative() const {
  return LocalClifford(table().coset_rep[index_]);
}

Pauli LocalClifford::pauli_part() const { return table().pauli_part[index_]; }

}  // namespace gsnet
