#include "gsnet/noise/noise_model.hpp"

#include <array>
#include <cmath>

#include "gsnet/core/errors.hpp"

namespace gsnet {

namespace {

double at(const std::vector<double>& xs, int v) {
  return v >= 0 && static_cast<std::size_t>(v) < xs.size() ? xs[static_cast<std::size_t>(v)] : 0.0;
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument(std::string(what) + " must lie in [0, 1]");
}

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  return LocalClifford::pauli(p).matrix();
}

}  // namespace

double PumpModel::rate(double p_mw) const { return rate_coefficient * p_mw * p_mw * p_mw; }

double PumpModel::white_noise(double p_mw) const { return contamination * p_mw / (1.0 + contamination * p_mw); }

double NoiseModel::depolarizing_at(int v) const { return at(depolarizing, v); }
double NoiseModel::dephasing_at(int v) const { return at(dephasing, v); }

void NoiseModel::validate() const {
  for (double p : depolarizing) check_probability(p, "depolarizing probability");
  for (double p : dephasing) check_probability(p, "dephasing probability");
  check_probability(white_noise, "white-noise weight");
  if (!(pump.rate_coefficient >= 0.0) || !(pump.contamination >= 0.0))
    throw InvalidArgument("pump coefficients must be nonnegative");
}

DensityOperator apply_noise(const DenseState& pure, const NoiseModel& model, const std::vector<int>& vertices) {
  model.validate();
  const int n = pure.num_qubits();
  if (n > DensityOperator::kMaxQubits) throw CapExceeded("noise simulation is limited to 8 qubits");
  if (!vertices.empty() && static_cast<int>(vertices.size()) != n)
    throw InvalidArgument("vertex list does not match the qubit count");
  const Amplitudes& a = pure.amplitudes();
  Eigen::MatrixXcd rho = a * a.adjoint();
  for (int q = 0; q < n; ++q) {
    const int v = vertices.empty() ? q : vertices[q];
    if (const double lam = model.depolarizing_at(v); lam > 0.0) {
      const std::array<Eigen::Matrix2cd, 4> k{
          std::sqrt(1.0 - 0.75 * lam) * Eigen::Matrix2cd::Identity(), std::sqrt(lam / 4) * pauli_matrix(Pauli::X),
          std::sqrt(lam / 4) * pauli_matrix(Pauli::Y), std::sqrt(lam / 4) * pauli_matrix(Pauli::Z)};
      mixed::apply_channel(rho, q, k);
    }
    if (const double p = model.dephasing_at(v); p > 0.0) {
      const std::array<Eigen::Matrix2cd, 2> k{std::sqrt(1.0 - p) * Eigen::Matrix2cd::Identity(),
                                              std::sqrt(p) * pauli_matrix(Pauli::Z)};
      mixed::apply_channel(rho, q, k);
    }
  }
  if (model.white_noise > 0.0) {
    const Eigen::Index d = rho.rows();
    rho = (1.0 - model.white_noise) * rho +
          model.white_noise / static_cast<double>(d) * Eigen::MatrixXcd::Identity(d, d);
  }
  return DensityOperator(std::move(rho));
}

OutcomeModel noisy_state_model(const GraphState& network, const NoiseModel& model) {
  const DensityOperator rho = apply_noise(to_dense(network), model, network.graph.vertices());
  return [rho](std::span<const Pauli> bases) { return outcome_distribution(rho, bases); };
}

}  // namespace gsnet
