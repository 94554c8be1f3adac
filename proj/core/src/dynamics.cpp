// Copyright 2026 The qdyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qdyn/errors.hpp"

namespace qdyn {
namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kMaxStepPhase = 0.1;

struct PreparedChannel {
  ComplexMatrix op;
  ComplexMatrix op_dag;
  ComplexMatrix half_dag_op;
};

std::vector<PreparedChannel> prepare(std::span<const LindbladChannel> channels) {
  std::vector<PreparedChannel> out;
  out.reserve(channels.size());
  for (const auto& ch : channels) {
    const ComplexMatrix dag = ch.op().adjoint();
    out.push_back({ch.op(), dag, 0.5 * (dag * ch.op())});
  }
  return out;
}

ComplexMatrix rhs(const ComplexMatrix& hamiltonian, const ComplexMatrix& rho,
                  const std::vector<PreparedChannel>& channels) {
  ComplexMatrix d = -kI * (hamiltonian * rho - rho * hamiltonian);
  for (const auto& ch : channels) {
    d.noalias() += ch.op * rho * ch.op_dag;
    d.noalias() -= ch.half_dag_op * rho;
    d.noalias() -= rho * ch.half_dag_op;
  }
  return d;
}

void check_step(const QubitHamiltonian& h, std::span<const LindbladChannel> channels,
                double t_max, double dt) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw StepSizeError("t_max must be positive");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw StepSizeError("dt must be positive");
  if (dt > t_max / 10.0) throw StepSizeError("dt must not exceed t_max/10");
  if (dt * h.max_frequency() >= kMaxStepPhase) {
    throw StepSizeError("dt too large for the Hamiltonian frequencies (need dt*freq < 0.1)");
  }
  for (const auto& ch : channels) {
    if (dt * ch.rate() >= kMaxStepPhase) {
      throw StepSizeError("dt too large for the channel rate (need dt*rate < 0.1)");
    }
  }
}

Sample checked_sample_impl(double t, const ComplexMatrix& rho) {
  for (Eigen::Index i = 0; i < rho.size(); ++i) {
    const Complex z = rho.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NumericalInstabilityError("non-finite state at t = " + std::to_string(t));
    }
  }
  if (trace_error(rho) > tol::kTrajectoryTrace) {
    throw NumericalInstabilityError("trace drifted at t = " + std::to_string(t));
  }
  if (hermiticity_error(rho) > tol::kTrajectoryHermiticity) {
    throw NumericalInstabilityError("Hermiticity lost at t = " + std::to_string(t));
  }
  if (min_eigenvalue(rho) < -tol::kTrajectoryEigen) {
    throw NumericalInstabilityError("positivity lost at t = " + std::to_string(t));
  }
  return {t, {rho(0, 0).real(), rho(1, 1).real()}, rho(0, 1)};
}

TimeSeries integrate(const DensityMatrix& rho0, const QubitHamiltonian& h,
                     std::span<const LindbladChannel> channels, double t_max, double dt) {
  if (rho0.dim() != 2) throw DimensionError("time evolution supports a single qubit only");
  h.validate();
  check_step(h, channels, t_max, dt);

  const auto prepared = prepare(channels);
  const bool static_h = h.drive_mode != DriveMode::full_cosine;
  const ComplexMatrix h_static = hamiltonian_at(h, 0.0);
  auto f = [&](double t, const ComplexMatrix& rho) -> ComplexMatrix {
    return rhs(static_h ? h_static : hamiltonian_at(h, t), rho, prepared);
  };

  const auto steps = static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
  TimeSeries out;
  out.t0 = 0.0;
  out.dt = dt;
  out.samples.reserve(steps + 1);

  ComplexMatrix rho = rho0.elements();
  out.samples.push_back(checked_sample_impl(0.0, rho));
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) * dt;
    rho = rk4_step(rho, t, dt, f);
    out.samples.push_back(checked_sample_impl(static_cast<double>(i + 1) * dt, rho));
  }
  return out;
}

}  // namespace

ComplexMatrix pauli(Pauli which) {
  ComplexMatrix m(2, 2);
  switch (which) {
    case Pauli::x:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case Pauli::y:
      m << 0.0, -kI, kI, 0.0;
      break;
    case Pauli::z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return m;
}

void QubitHamiltonian::validate() const {
  if (!(epsilon >= 0.0) || !(omega_rabi >= 0.0) || !(omega0 >= 0.0)) {
    throw DomainError("Hamiltonian parameters must be non-negative");
  }
  if (!std::isfinite(epsilon) || !std::isfinite(omega_rabi) || !std::isfinite(omega0)) {
    throw DomainError("Hamiltonian parameters must be finite");
  }
  if (drive_mode == DriveMode::none && omega_rabi != 0.0) {
    throw DomainError("drive amplitude given without a drive mode");
  }
}

double QubitHamiltonian::max_frequency() const {
  switch (drive_mode) {
    case DriveMode::none:
      return epsilon;
    case DriveMode::full_cosine:
      return std::max({epsilon, omega_rabi, omega0});
    case DriveMode::rotating_wave:
      // epsilon and omega0 only enter through the detuning in this frame.
      return std::max(std::abs(omega0 - epsilon), omega_rabi);
  }
  return epsilon;
}

ComplexMatrix hamiltonian_at(const QubitHamiltonian& h, double t) {
  switch (h.drive_mode) {
    case DriveMode::none:
      return (0.5 * h.epsilon) * pauli(Pauli::z);
    case DriveMode::full_cosine:
      return (0.5 * h.epsilon) * pauli(Pauli::z) +
             (h.omega_rabi * std::cos(h.omega0 * t)) * pauli(Pauli::x);
    case DriveMode::rotating_wave: {
      const double detuning = h.omega0 - h.epsilon;
      ComplexMatrix m(2, 2);
      m << -0.5 * detuning, 0.5 * h.omega_rabi, 0.5 * h.omega_rabi, 0.5 * detuning;
      return m;
    }
  }
  return ComplexMatrix::Zero(2, 2);
}

LindbladChannel::LindbladChannel(ComplexMatrix op) : op_(std::move(op)) {
  if (op_.rows() != 2 || op_.cols() != 2) throw DimensionError("Lindblad operator must be 2x2");
  for (Eigen::Index i = 0; i < op_.size(); ++i) {
    const Complex z = op_.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("Lindblad operator has non-finite entries");
    }
  }
}

LindbladChannel LindbladChannel::scaled(double rate, const ComplexMatrix& base) {
  if (!(rate >= 0.0)) throw DomainError("channel rate must be non-negative");
  return LindbladChannel(std::sqrt(rate) * base);
}

LindbladChannel LindbladChannel::dephasing(double delta) {
  return scaled(delta, pauli(Pauli::z));
}

double LindbladChannel::rate() const {
  const ComplexMatrix g = op_.adjoint() * op_;
  // Largest eigenvalue of a 2x2 positive semidefinite matrix.
  const double a = g(0, 0).real();
  const double d = g(1, 1).real();
  return 0.5 * (a + d) + std::hypot(0.5 * (a - d), std::abs(g(0, 1)));
}

Sample checked_sample(double t, const ComplexMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw DimensionError("expected a 2x2 state");
  return checked_sample_impl(t, rho);
}

ComplexMatrix Sample::matrix() const {
  ComplexMatrix m(2, 2);
  m << populations[0], rho01, std::conj(rho01), populations[1];
  return m;
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& hamiltonian, const ComplexMatrix& rho,
                           std::span<const LindbladChannel> channels) {
  return rhs(hamiltonian, rho, prepare(channels));
}

TimeSeries evolve_closed(const DensityMatrix& rho0, const QubitHamiltonian& h, double t_max,
                         double dt) {
  return integrate(rho0, h, {}, t_max, dt);
}

TimeSeries evolve_lindblad(const DensityMatrix& rho0, const QubitHamiltonian& h,
                           std::span<const LindbladChannel> channels, double t_max, double dt) {
  return integrate(rho0, h, channels, t_max, dt);
}

DensityMatrix pure_dephasing_analytic(const DensityMatrix& rho0, double epsilon, double delta,
                                      double t) {
  if (rho0.dim() != 2) throw DimensionError("pure dephasing acts on a single qubit");
  if (!(delta >= 0.0)) throw DomainError("dephasing rate must be non-negative");
  const Complex factor = std::exp(-2.0 * delta * t) * std::polar(1.0, -epsilon * t / kHbar);
  ComplexMatrix m = rho0.elements();
  m(0, 1) *= factor;
  m(1, 0) = std::conj(m(0, 1));
  return DensityMatrix(m);
}

double dephasing_time(double delta) {
  if (!(delta > 0.0)) throw DomainError("dephasing rate must be positive");
  return 1.0 / (2.0 * delta);
}

}  // namespace qdyn
