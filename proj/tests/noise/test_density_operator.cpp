#include <doctest.h>

#include <random>

#include "gsnet/core/errors.hpp"
#include "gsnet/noise/noise_model.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace gsnet;

namespace {

DenseState bell() {
  GraphState gs = graph_state_of(Graph(2, {{0, 1}}));
  return to_dense(apply_local(gs, 1, LocalClifford::hadamard()));
}

DenseState ghz4() {
  GraphState gs = graph_state_of(Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  for (int v = 1; v < 4; ++v) gs = apply_local(gs, v, LocalClifford::hadamard());
  return to_dense(gs);
}

DenseState random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Amplitudes a(Eigen::Index{1} << n);
  for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = {g(rng), g(rng)};
  return DenseState::normalized(a);
}

double expect(const DensityOperator& r, const char* obs) { return expectation(r, PauliObservable::parse(obs)); }

}  // namespace

TEST_CASE("noise-free density operator is the projector") {
  const DenseState s = ghz4();
  const DensityOperator rho = apply_noise(s, NoiseModel{});
  CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((rho.matrix() - DensityOperator::pure(s).matrix()).norm() < 1e-12);
  CHECK(expect(rho, "IIII") == doctest::Approx(1.0));
  CHECK(expect(rho, "XXXX") == doctest::Approx(1.0));
  CHECK(expect(rho, "ZZII") == doctest::Approx(1.0));
}

TEST_CASE("full white noise is maximally mixed") {
  NoiseModel m;
  m.white_noise = 1.0;
  const DensityOperator rho = apply_noise(ghz4(), m);
  CHECK((rho.matrix() - DensityOperator::maximally_mixed(4).matrix()).norm() < 1e-12);
  for (const char* o : {"XXXX", "ZZII", "YXYX", "IIIZ"}) CHECK(expect(rho, o) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(expect(rho, "IIII") == doctest::Approx(1.0));
  CHECK(rho.purity() == doctest::Approx(1.0 / 16));
}

TEST_CASE("depolarizing half a Bell pair") {
  for (double lam : {0.0, 0.1, 0.37, 1.0}) {
    NoiseModel m;
    m.depolarizing = {lam, 0.0};
    const DensityOperator rho = apply_noise(bell(), m);
    CHECK(expect(rho, "ZZ") == doctest::Approx(1.0 - lam));
    CHECK(expect(rho, "XX") == doctest::Approx(1.0 - lam));
    const auto p = outcome_distribution(rho, std::vector<Pauli>{Pauli::Z, Pauli::Z});
    CHECK(p[1] + p[2] == doctest::Approx(lam / 2));
  }
}

TEST_CASE("dephasing leaves Z correlations alone") {
  NoiseModel m;
  m.dephasing = {0.3, 0.0};
  const DensityOperator rho = apply_noise(bell(), m);
  CHECK(expect(rho, "ZZ") == doctest::Approx(1.0));
  CHECK(expect(rho, "XX") == doctest::Approx(0.4));
  CHECK(expect(rho, "YY") == doctest::Approx(-0.4));
}

TEST_CASE("white-noise GHZ") {
  for (double w : {0.05, 0.5}) {
    NoiseModel m;
    m.white_noise = w;
    CHECK(expect(apply_noise(ghz4(), m), "XXXX") == doctest::Approx(1.0 - w));
  }
}

TEST_CASE("channels keep random states physical and match hand-rolled Kraus sums") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const DenseState s = random_state(n, rng);
    NoiseModel m;
    for (int q = 0; q < n; ++q) {
      m.depolarizing.push_back(u(rng));
      m.dephasing.push_back(u(rng));
    }
    m.white_noise = u(rng) * 0.5;
    const DensityOperator rho = apply_noise(s, m);  // the constructor checks trace, Hermiticity, PSD
    CHECK(rho.matrix().trace().real() == doctest::Approx(1.0));

    // Same channel from oracle matrices, applied as sum_K K rho K^dagger on full operators.
    const std::size_t d = std::size_t{1} << n;
    std::vector<oracle::Vec> cols(d, oracle::Vec(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        cols[j][i] = s.amplitudes()(Eigen::Index(i)) * std::conj(s.amplitudes()(Eigen::Index(j)));
    auto channel = [&](int q, const std::vector<std::pair<double, char>>& terms) {
      std::vector<oracle::Vec> out(d, oracle::Vec(d, 0.0));
      for (const auto& [w, c] : terms) {
        // P rho P for a Pauli P: conjugate every column, then every row.
        std::vector<oracle::Vec> t = cols;
        for (auto& col : t) oracle::apply(col, n, q, oracle::letter(c));
        for (std::size_t i = 0; i < d; ++i) {
          oracle::Vec row(d);
          for (std::size_t j = 0; j < d; ++j) row[j] = std::conj(t[j][i]);
          oracle::apply(row, n, q, oracle::letter(c));
          for (std::size_t j = 0; j < d; ++j) out[j][i] += w * std::conj(row[j]);
        }
      }
      cols = out;
    };
    for (int q = 0; q < n; ++q) {
      const double l = m.depolarizing[q], p = m.dephasing[q];
      channel(q, {{1 - 0.75 * l, 'I'}, {l / 4, 'X'}, {l / 4, 'Y'}, {l / 4, 'Z'}});
      channel(q, {{1 - p, 'I'}, {p, 'Z'}});
    }
    double diff = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const auto want = (1 - m.white_noise) * cols[j][i] + (i == j ? m.white_noise / double(d) : 0.0);
        diff = std::max(diff, std::abs(rho.matrix()(Eigen::Index(i), Eigen::Index(j)) - want));
      }
    CHECK(diff < 1e-12);
  }
}

TEST_CASE("outcome distribution agrees with oracle projections") {
  const auto edges = fixture::kSixNodeEdges;
  const oracle::Vec psi = oracle::graph_state(6, edges);
  const DensityOperator rho = apply_noise(to_dense(graph_state_of(Graph(6, edges))), NoiseModel{});
  const std::vector<Pauli> bases{Pauli::Z, Pauli::Z, Pauli::X, Pauli::X, Pauli::Y, Pauli::Z};
  const auto p = outcome_distribution(rho, bases);
  const char* letters = "ZZXXYZ";
  for (std::uint64_t o = 0; o < 64; ++o) {
    oracle::Vec v = psi;
    int left = 6;
    for (int q = 0; q < 6; ++q) v = oracle::project(v, left--, 0, letters[q], int(o >> (5 - q) & 1));
    CHECK(p[o] == doctest::Approx(oracle::norm2(v)).epsilon(1e-12));
  }
}

TEST_CASE("density operator validation") {
  Eigen::MatrixXcd m(2, 2);
  m << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(DensityOperator{m}, InvalidArgument);
  m << 0.5, 0.2, 0.1, 0.5;
  CHECK_THROWS_AS(DensityOperator{m}, InvalidArgument);
  m << 0.6, 0, 0, 0.6;
  CHECK_THROWS_AS(DensityOperator{m}, InvalidArgument);
  CHECK_THROWS_AS(DensityOperator{Eigen::MatrixXcd::Identity(3, 3) / 3.0}, InvalidArgument);
  CHECK_THROWS_AS(DensityOperator::maximally_mixed(9), CapExceeded);
  CHECK_THROWS_AS(apply_noise(DenseState::plus(9), NoiseModel{}), CapExceeded);
  NoiseModel bad;
  bad.depolarizing = {1.2};
  CHECK_THROWS_AS(apply_noise(bell(), bad), InvalidArgument);
  CHECK_THROWS_AS(expect(apply_noise(bell(), NoiseModel{}), "XXX"), InvalidArgument);
}
