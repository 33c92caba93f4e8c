#include "gsnet/noise/density_operator.hpp"

#include <Eigen/Eigenvalues>

#include "gsnet/core/errors.hpp"

namespace gsnet {

namespace {

void left_apply(Eigen::MatrixXcd& m, int q, const Eigen::Matrix2cd& k) {
  Amplitudes col(m.rows());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    col = m.col(j);
    dense::apply_1q(col, q, k);
    m.col(j) = col;
  }
}

}  // namespace

DensityOperator::DensityOperator(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw InvalidArgument("density matrix must be square");
  const Eigen::Index d = m_.rows();
  if (d < 2 || (d & (d - 1)) != 0) throw InvalidArgument("density matrix size must be a power of two");
  n_ = 0;
  while ((Eigen::Index{1} << n_) < d) ++n_;
  if (n_ > kMaxQubits) throw CapExceeded("density operators are limited to 8 qubits");
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kTolerance) throw InvalidArgument("density matrix is not Hermitian");
  if (std::abs(m_.trace() - std::complex<double>(1.0, 0.0)) > kTolerance)
    throw InvalidArgument("density matrix trace differs from 1");
  const Eigen::MatrixXcd h = (m_ + m_.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < kEigenvalueFloor)
    throw InvalidArgument("density matrix has a negative eigenvalue");
}

DensityOperator DensityOperator::pure(const DenseState& s) {
  const Amplitudes& a = s.amplitudes();
  Eigen::MatrixXcd m = a * a.adjoint();
  return DensityOperator(std::move(m));
}

DensityOperator DensityOperator::maximally_mixed(int n) {
  if (n < 1) throw InvalidArgument("need at least one qubit");
  if (n > kMaxQubits) throw CapExceeded("density operators are limited to 8 qubits");
  const Eigen::Index d = Eigen::Index{1} << n;
  return DensityOperator(Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d));
}

double DensityOperator::purity() const { return (m_ * m_).trace().real(); }

namespace mixed {

void apply_channel(Eigen::MatrixXcd& rho, int q, std::span<const Eigen::Matrix2cd> kraus) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
  for (const Eigen::Matrix2cd& k : kraus) {
    // K rho K^dagger = (K (K rho)^dagger)^dagger
    Eigen::MatrixXcd t = rho;
    left_apply(t, q, k);
    Eigen::MatrixXcd u = t.adjoint();
    left_apply(u, q, k);
    out += u.adjoint();
  }
  rho = std::move(out);
}

}  // namespace mixed

double expectation(const DensityOperator& rho, const PauliObservable& obs) {
  if (static_cast<int>(obs.size()) != rho.num_qubits()) throw InvalidArgument("observable arity does not match the state");
  const Eigen::MatrixXcd& m = rho.matrix();
  std::complex<double> tr = 0.0;
  Amplitudes col(m.rows());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    col = m.col(j);
    dense::apply_pauli(col, obs);
    tr += col(j);
  }
  return tr.real();
}

std::vector<double> outcome_distribution(const DensityOperator& rho, std::span<const Pauli> bases) {
  const int n = rho.num_qubits();
  if (static_cast<int>(bases.size()) != n) throw InvalidArgument("basis count mismatch");
  Eigen::MatrixXcd m = rho.matrix();
  std::uint64_t unmeasured = 0;
  for (int q = 0; q < n; ++q) {
    if (bases[q] == Pauli::I) {
      unmeasured |= std::uint64_t{1} << (n - 1 - q);
      continue;
    }
    const Eigen::Matrix2cd u = dense::to_z_basis(bases[q]);
    mixed::apply_channel(m, q, std::span<const Eigen::Matrix2cd>(&u, 1));
  }
  std::vector<double> p(static_cast<std::size_t>(m.rows()), 0.0);
  for (std::uint64_t i = 0; i < p.size(); ++i)
    p[i & ~unmeasured] += std::max(0.0, m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real());
  return p;
}

}  // namespace gsnet
