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

// Single-qubit time evolution in natural units (hbar = 1): energies are
// angular frequencies and rates are inverse times.
//
// Sign convention: sigma_z = diag(1, -1) and H = (eps/2) sigma_z, so the
// coherence rho01 = <g|rho|e> rotates as exp(-i eps t).

#pragma once

#include <array>
#include <span>
#include <vector>

#include "qdyn/qstate.hpp"

namespace qdyn {

inline constexpr double kHbar = 1.0;

enum class Pauli { x, y, z };

/// The 2x2 Pauli matrix; sigma_z = diag(1, -1), sigma_x = [[0,1],[1,0]].
ComplexMatrix pauli(Pauli which);

enum class DriveMode {
  none,
  /// (eps/2) sigma_z + Omega cos(omega0 t) sigma_x in the lab frame.
  full_cosine,
  /// Static rotating-frame matrix [[-d/2, Omega/2], [Omega/2, d/2]] with
  /// detuning d = omega0 - eps.
  rotating_wave,
};

struct QubitHamiltonian {
  double epsilon = 0.0;
  double omega_rabi = 0.0;
  double omega0 = 0.0;
  DriveMode drive_mode = DriveMode::none;

  static QubitHamiltonian free(double epsilon) { return {epsilon, 0.0, 0.0, DriveMode::none}; }

  /// Throws DomainError on negative parameters or a drive amplitude
  /// without a drive mode.
  void validate() const;

  /// Largest angular frequency the integrator must resolve.
  double max_frequency() const;
};

ComplexMatrix hamiltonian_at(const QubitHamiltonian& h, double t);

/// Collapse operator with its rate folded in: stores sqrt(rate) * base.
class LindbladChannel {
 public:
  explicit LindbladChannel(ComplexMatrix op);
  static LindbladChannel scaled(double rate, const ComplexMatrix& base);
  /// sqrt(delta) sigma_z.
  static LindbladChannel dephasing(double delta);

  const ComplexMatrix& op() const { return op_; }
  /// Largest eigenvalue of L^dagger L, i.e. the effective rate.
  double rate() const;

 private:
  ComplexMatrix op_;
};

struct Sample {
  double t = 0.0;
  std::array<double, 2> populations{};
  Complex rho01{};

  /// Reassembles the (Hermitian) 2x2 state.
  ComplexMatrix matrix() const;
};

/// Trajectory on a uniform grid t = t0 + i dt.
struct TimeSeries {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<Sample> samples;
};

/// Per-sample tolerances enforced during integration.
namespace tol {
inline constexpr double kTrajectoryTrace = 1e-9;
inline constexpr double kTrajectoryHermiticity = 1e-9;
inline constexpr double kTrajectoryEigen = 1e-8;
}  // namespace tol

/// Throws NumericalInstabilityError unless rho is finite and satisfies the
/// trajectory tolerances above. Returns the sample recorded for time t.
Sample checked_sample(double t, const ComplexMatrix& rho);

/// One classical 4th-order Runge-Kutta step of dy/dt = f(t, y).
template <class State, class Rhs>
State rk4_step(const State& y, double t, double dt, Rhs&& f) {
  const State k1 = f(t, y);
  const State k2 = f(t + 0.5 * dt, (y + (0.5 * dt) * k1).eval());
  const State k3 = f(t + 0.5 * dt, (y + (0.5 * dt) * k2).eval());
  const State k4 = f(t + dt, (y + dt * k3).eval());
  return (y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)).eval();
}

/// Right-hand side -i[H, rho] + sum_k (L rho L^dag - {L^dag L, rho}/2).
ComplexMatrix lindblad_rhs(const ComplexMatrix& hamiltonian, const ComplexMatrix& rho,
                           std::span<const LindbladChannel> channels);

/// Integrates the Liouville-von Neumann equation from t = 0 to t_max.
/// Requires dt <= t_max/10 and dt * max_frequency < 0.1 (StepSizeError).
TimeSeries evolve_closed(const DensityMatrix& rho0, const QubitHamiltonian& h, double t_max,
                         double dt);

/// Integrates the Lindblad master equation. In addition to the closed-system
/// guards requires dt * rate < 0.1 for every channel. Each sample is checked
/// for trace, Hermiticity and positivity; a breach throws
/// NumericalInstabilityError.
TimeSeries evolve_lindblad(const DensityMatrix& rho0, const QubitHamiltonian& h,
                           std::span<const LindbladChannel> channels, double t_max, double dt);

/// Closed-form state under H = (eps/2) sigma_z and L = sqrt(delta) sigma_z:
/// populations fixed, rho01(t) = exp(-2 delta t) exp(-i eps t) rho01(0).
DensityMatrix pure_dephasing_analytic(const DensityMatrix& rho0, double epsilon, double delta,
                                      double t);

/// T2 = 1 / (2 delta).
double dephasing_time(double delta);

}  // namespace qdyn
