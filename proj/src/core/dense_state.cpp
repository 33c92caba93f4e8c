#include "gsnet/core/dense_state.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "gsnet/core/errors.hpp"

namespace gsnet {

namespace {

std::uint64_t qmask(int n, int q) { return std::uint64_t{1} << (n - 1 - q); }

void check_qubit(int n, int q) {
  if (q < 0 || q >= n) throw InvalidArgument("qubit index out of range: " + std::to_string(q));
}

}  // namespace

DenseState::DenseState(Amplitudes amplitudes) : amps_(std::move(amplitudes)) {
  const auto len = static_cast<std::uint64_t>(amps_.size());
  if (len == 0 || !std::has_single_bit(len))
    throw InvalidArgument("amplitude vector length must be a power of two");
  n_ = std::countr_zero(len);
  if (n_ > kMaxQubits)
    throw CapExceeded("dense state limited to 12 qubits, got " + std::to_string(n_));
  if (std::abs(amps_.norm() - 1.0) > kNormTolerance)
    throw InvalidArgument("state is not normalized");
}

DenseState DenseState::basis_state(int n, std::uint64_t index) {
  if (n < 0 || n > kMaxQubits) throw CapExceeded("dense state limited to 12 qubits");
  Amplitudes a = Amplitudes::Zero(Eigen::Index{1} << n);
  if (index >= static_cast<std::uint64_t>(a.size())) throw InvalidArgument("basis index out of range");
  a(static_cast<Eigen::Index>(index)) = 1.0;
  return DenseState(std::move(a));
}

DenseState DenseState::plus(int n) {
  if (n < 0 || n > kMaxQubits) throw CapExceeded("dense state limited to 12 qubits");
  const Eigen::Index dim = Eigen::Index{1} << n;
  return DenseState(Amplitudes::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim))));
}

DenseState DenseState::normalized(Amplitudes amplitudes) {
  const double nrm = amplitudes.norm();
  if (nrm < 1e-300) throw InvalidArgument("cannot normalize a zero vector");
  amplitudes /= nrm;
  return DenseState(std::move(amplitudes));
}

namespace dense {

int qubit_count(const Amplitudes& a) {
  return std::countr_zero(static_cast<std::uint64_t>(a.size()));
}

void apply_1q(Amplitudes& a, int q, const Eigen::Matrix2cd& u) {
  const int n = qubit_count(a);
  check_qubit(n, q);
  const std::uint64_t m = qmask(n, q);
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(a.size()); ++i) {
    if (i & m) continue;
    const auto i0 = static_cast<Eigen::Index>(i);
    const auto i1 = static_cast<Eigen::Index>(i | m);
    const std::complex<double> x0 = a(i0);
    const std::complex<double> x1 = a(i1);
    a(i0) = u(0, 0) * x0 + u(0, 1) * x1;
    a(i1) = u(1, 0) * x0 + u(1, 1) * x1;
  }
}

void apply_cz(Amplitudes& a, int q0, int q1) {
  const int n = qubit_count(a);
  check_qubit(n, q0);
  check_qubit(n, q1);
  const std::uint64_t m = qmask(n, q0) | qmask(n, q1);
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(a.size()); ++i)
    if ((i & m) == m) a(static_cast<Eigen::Index>(i)) *= -1.0;
}

void apply_pauli(Amplitudes& a, const PauliObservable& p) {
  const int n = qubit_count(a);
  if (static_cast<int>(p.size()) != n) throw InvalidArgument("observable arity mismatch");
  std::uint64_t xm = 0, zm = 0;
  int ny = 0;
  for (int q = 0; q < n; ++q) {
    if (has_x(p.letters[q])) xm |= qmask(n, q);
    if (has_z(p.letters[q])) zm |= qmask(n, q);
    if (p.letters[q] == Pauli::Y) ++ny;
  }
  // Y = i X Z, so the string equals i^ny X^x Z^z.
  static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::complex<double> global = ipow[ny % 4] * static_cast<double>(p.sign);
  Amplitudes out(a.size());
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(a.size()); ++i) {
    const double s = (std::popcount(i & zm) & 1) ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(i ^ xm)) = global * s * a(static_cast<Eigen::Index>(i));
  }
  a = std::move(out);
}

Eigen::Vector2cd eigenvector(Pauli p, int outcome) {
  const double r = 1.0 / std::sqrt(2.0);
  const double s = outcome ? -1.0 : 1.0;
  switch (p) {
    case Pauli::Z: return outcome ? Eigen::Vector2cd(0, 1) : Eigen::Vector2cd(1, 0);
    case Pauli::X: return Eigen::Vector2cd(r, s * r);
    case Pauli::Y: return Eigen::Vector2cd(r, std::complex<double>(0, s * r));
    case Pauli::I: break;
  }
  throw InvalidArgument("no eigenbasis for the identity");
}

Eigen::Matrix2cd to_z_basis(Pauli p) {
  Eigen::Matrix2cd u;
  u.row(0) = eigenvector(p, 0).adjoint();
  u.row(1) = eigenvector(p, 1).adjoint();
  return u;
}

}  // namespace dense

double expectation(const DenseState& s, const PauliObservable& obs) {
  Amplitudes t = s.amplitudes();
  dense::apply_pauli(t, obs);
  return s.amplitudes().dot(t).real();
}

std::complex<double> overlap(const DenseState& a, const DenseState& b) {
  if (a.num_qubits() != b.num_qubits()) throw InvalidArgument("qubit count mismatch");
  return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const DenseState& a, const DenseState& b) { return std::norm(overlap(a, b)); }

std::optional<Projection> project_out(const DenseState& s, int qubit, Pauli basis, int outcome) {
  const int n = s.num_qubits();
  check_qubit(n, qubit);
  const Eigen::Vector2cd e = dense::eigenvector(basis, outcome);
  const std::uint64_t m = qmask(n, qubit);
  const std::uint64_t low = m - 1;
  Amplitudes out(Eigen::Index{1} << (n - 1));
  const Amplitudes& a = s.amplitudes();
  for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(out.size()); ++j) {
    const std::uint64_t i0 = ((j & ~low) << 1) | (j & low);
    out(static_cast<Eigen::Index>(j)) = std::conj(e(0)) * a(static_cast<Eigen::Index>(i0)) +
                                        std::conj(e(1)) * a(static_cast<Eigen::Index>(i0 | m));
  }
  const double p = out.squaredNorm();
  if (p < 1e-12) return std::nullopt;
  out /= std::sqrt(p);
  return Projection{DenseState(std::move(out)), p};
}

std::vector<double> outcome_distribution(const DenseState& s, std::span<const Pauli> bases) {
  const int n = s.num_qubits();
  if (static_cast<int>(bases.size()) != n) throw InvalidArgument("basis count mismatch");
  Amplitudes a = s.amplitudes();
  for (int q = 0; q < n; ++q)
    if (bases[q] != Pauli::I) dense::apply_1q(a, q, dense::to_z_basis(bases[q]));
  std::uint64_t unmeasured = 0;
  for (int q = 0; q < n; ++q)
    if (bases[q] == Pauli::I) unmeasured |= qmask(n, q);
  std::vector<double> p(static_cast<std::size_t>(a.size()), 0.0);
  for (std::uint64_t i = 0; i < p.size(); ++i)
    p[i & ~unmeasured] += std::norm(a(static_cast<Eigen::Index>(i)));
  return p;
}

Eigen::MatrixXcd reduced_density_matrix(const DenseState& s, const std::vector<int>& keep) {
  const int n = s.num_qubits();
  const int k = static_cast<int>(keep.size());
  std::uint64_t keep_mask = 0;
  for (int q : keep) {
    check_qubit(n, q);
    if (keep_mask & qmask(n, q)) throw InvalidArgument("repeated qubit in reduced_density_matrix");
    keep_mask |= qmask(n, q);
  }
  const Eigen::Index dk = Eigen::Index{1} << k;
  const Eigen::Index de = Eigen::Index{1} << (n - k);
  // psi as a dk x de matrix, rows indexed by the kept qubits in `keep` order.
  Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(dk, de);
  const Amplitudes& a = s.amplitudes();
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(a.size()); ++i) {
    std::uint64_t r = 0;
    for (int t = 0; t < k; ++t)
      if (i & qmask(n, keep[t])) r |= std::uint64_t{1} << (k - 1 - t);
    std::uint64_t c = 0;
    int pos = 0;
    for (int q = n - 1; q >= 0; --q) {
      if (keep_mask & qmask(n, q)) continue;
      if (i & qmask(n, q)) c |= std::uint64_t{1} << pos;
      ++pos;
    }
    psi(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = a(static_cast<Eigen::Index>(i));
  }
  return psi * psi.adjoint();
}

double purity(const Eigen::MatrixXcd& rho) { return (rho * rho).trace().real(); }

}  // namespace gsnet
