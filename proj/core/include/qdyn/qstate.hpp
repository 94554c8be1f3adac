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

// State algebra for one and two qubits.
//
// Basis order is |0>=|g>, |1>=|e> for a single qubit and |00>,|01>,|10>,|11>
// for two. In a two-qubit product the first factor is the system and the
// second the environment (or, for protocols, Alice then Bob).

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include <Eigen/Core>

namespace qdyn {

using Complex = std::complex<double>;

inline constexpr int kMaxDim = 4;

/// Dense complex matrix of dimension at most 4x4; never heap allocates.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxDim, kMaxDim>;
using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;

namespace tol {
inline constexpr double kAlgebraic = 1e-12;
inline constexpr double kEigen = 1e-9;
}  // namespace tol

/// Normalized amplitude vector of one or two qubits.
class Ket {
 public:
  /// Throws InvalidStateError unless the amplitudes are finite, have
  /// length 2 or 4, and sum to unit norm within 1e-12.
  explicit Ket(ComplexVector amplitudes);
  Ket(std::initializer_list<Complex> amplitudes);

  static Ket ground() { return Ket{1.0, 0.0}; }
  static Ket excited() { return Ket{0.0, 1.0}; }

  const ComplexVector& amplitudes() const { return amps_; }
  Complex operator[](int i) const { return amps_(i); }
  int dim() const { return static_cast<int>(amps_.size()); }
  int qubits() const { return dim() == 2 ? 1 : 2; }

 private:
  ComplexVector amps_;
};

/// Polar angle theta in [0, pi], azimuth phi in [0, 2 pi).
struct BlochAngles {
  double theta = 0.0;
  double phi = 0.0;
};

/// Hermitian, unit-trace, positive semidefinite 2x2 or 4x4 matrix.
class DensityMatrix {
 public:
  /// Validates all invariants; throws InvalidStateError on any breach.
  explicit DensityMatrix(ComplexMatrix elements);

  /// Maximally mixed state I/dim.
  static DensityMatrix mixed(int dim);

  const ComplexMatrix& elements() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }
  int dim() const { return static_cast<int>(m_.rows()); }
  int qubits() const { return dim() == 2 ? 1 : 2; }

 private:
  ComplexMatrix m_;
};

/// <xi0|xi1>, the overlap of the environment states correlated with |g> and |e>.
struct EnvironmentOverlap {
  Complex overlap{0.0, 0.0};
};

// Numerical checks shared with the integrators. Each returns a deviation
// magnitude; callers compare against their own tolerance.
double hermiticity_error(const ComplexMatrix& m);
double trace_error(const ComplexMatrix& m);
/// Smallest eigenvalue of a Hermitian matrix (Hermitian part is used).
/// Closed form for 2x2, self-adjoint eigensolver for 4x4.
double min_eigenvalue(const ComplexMatrix& m);

Ket ket_from_bloch(const BlochAngles& angles);
/// Global phase is removed by making the |g> amplitude real non-negative.
/// At the poles phi is reported as 0.
BlochAngles bloch_from_ket(const Ket& psi);

DensityMatrix density_from_ket(const Ket& psi);
std::vector<double> populations(const DensityMatrix& rho);
Complex coherence(const DensityMatrix& rho, int i, int j);
double purity(const DensityMatrix& rho);

Ket tensor(const Ket& a, const Ket& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Traces out the second (environment) qubit of a two-qubit state.
DensityMatrix partial_trace_env(const DensityMatrix& rho);

/// Reduced system state of c_g0|g xi0> + c_e1|e xi1> for an environment
/// with overlap s = <xi0|xi1>.
DensityMatrix reduced_with_overlap(Complex c_g0, Complex c_e1, EnvironmentOverlap s);

}  // namespace qdyn
