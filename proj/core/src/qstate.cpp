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

#include "qdyn/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "qdyn/errors.hpp"

namespace qdyn {
namespace {

bool all_finite(const auto& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

void require_single_qubit(int dim, const char* what) {
  if (dim != 2) {
    throw DimensionError(std::string(what) + ": expected a single-qubit operand, got dimension " +
                         std::to_string(dim));
  }
}

}  // namespace

Ket::Ket(ComplexVector amplitudes) : amps_(std::move(amplitudes)) {
  const auto n = amps_.size();
  if (n != 2 && n != 4) {
    throw InvalidStateError("ket length must be 2 or 4, got " + std::to_string(n));
  }
  if (!all_finite(amps_)) throw InvalidStateError("ket has non-finite amplitudes");
  const double norm2 = amps_.squaredNorm();
  if (std::abs(norm2 - 1.0) > tol::kAlgebraic) {
    throw InvalidStateError("ket is not normalized (norm^2 = " + std::to_string(norm2) + ")");
  }
}

Ket::Ket(std::initializer_list<Complex> amplitudes)
    : Ket([&] {
        if (amplitudes.size() > static_cast<std::size_t>(kMaxDim)) {
          throw InvalidStateError("ket length must be 2 or 4");
        }
        ComplexVector v(static_cast<Eigen::Index>(amplitudes.size()));
        Eigen::Index i = 0;
        for (const Complex& a : amplitudes) v(i++) = a;
        return v;
      }()) {}

DensityMatrix::DensityMatrix(ComplexMatrix elements) : m_(std::move(elements)) {
  if (m_.rows() != m_.cols() || (m_.rows() != 2 && m_.rows() != 4)) {
    throw InvalidStateError("density matrix must be 2x2 or 4x4");
  }
  if (!all_finite(m_)) throw InvalidStateError("density matrix has non-finite entries");
  if (hermiticity_error(m_) > tol::kAlgebraic) {
    throw InvalidStateError("density matrix is not Hermitian");
  }
  if (trace_error(m_) > tol::kAlgebraic) {
    throw InvalidStateError("density matrix trace differs from 1");
  }
  if (min_eigenvalue(m_) < -tol::kEigen) {
    throw InvalidStateError("density matrix has a negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::mixed(int dim) {
  if (dim != 2 && dim != 4) throw DimensionError("mixed state dimension must be 2 or 4");
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double hermiticity_error(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double trace_error(const ComplexMatrix& m) { return std::abs(m.trace() - Complex(1.0, 0.0)); }

double min_eigenvalue(const ComplexMatrix& m) {
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  if (h.rows() == 2) {
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const double half_gap = std::hypot(0.5 * (a - d), std::abs(h(0, 1)));
    return 0.5 * (a + d) - half_gap;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

Ket ket_from_bloch(const BlochAngles& angles) {
  constexpr double pi = std::numbers::pi;
  if (!(angles.theta >= 0.0 && angles.theta <= pi) ||
      !(angles.phi >= 0.0 && angles.phi < 2.0 * pi)) {
    throw DomainError("Bloch angles out of range");
  }
  const double c = std::cos(0.5 * angles.theta);
  const double s = std::sin(0.5 * angles.theta);
  ComplexVector v(2);
  v << c, s * std::polar(1.0, angles.phi);
  // cos^2 + sin^2 rounds to within a few ulps of 1.
  return Ket(v);
}

BlochAngles bloch_from_ket(const Ket& psi) {
  require_single_qubit(psi.dim(), "bloch_from_ket");
  const double ra = std::abs(psi[0]);
  const double rb = std::abs(psi[1]);
  BlochAngles out;
  out.theta = 2.0 * std::atan2(rb, ra);
  constexpr double kPole = 1e-15;
  if (ra <= kPole || rb <= kPole) {
    out.phi = 0.0;
    return out;
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double phi = std::arg(psi[1]) - std::arg(psi[0]);
  phi = std::fmod(phi, two_pi);
  if (phi < 0.0) phi += two_pi;
  if (phi >= two_pi) phi = 0.0;
  out.phi = phi;
  return out;
}

DensityMatrix density_from_ket(const Ket& psi) {
  const ComplexVector& a = psi.amplitudes();
  ComplexMatrix m = a * a.adjoint();
  // Exact Hermiticity; the outer product only guarantees it to rounding.
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityMatrix(m);
}

std::vector<double> populations(const DensityMatrix& rho) {
  std::vector<double> p(static_cast<std::size_t>(rho.dim()));
  for (int i = 0; i < rho.dim(); ++i) p[static_cast<std::size_t>(i)] = rho(i, i).real();
  return p;
}

Complex coherence(const DensityMatrix& rho, int i, int j) {
  if (i == j) throw IndexError("coherence requires distinct indices");
  if (i < 0 || j < 0 || i >= rho.dim() || j >= rho.dim()) {
    throw IndexError("coherence index out of range");
  }
  return rho(i, j);
}

double purity(const DensityMatrix& rho) {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.elements().squaredNorm();
}

Ket tensor(const Ket& a, const Ket& b) {
  require_single_qubit(a.dim(), "tensor");
  require_single_qubit(b.dim(), "tensor");
  ComplexVector v(4);
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) v(2 * i + k) = a[i] * b[k];
  }
  return Ket(v);
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  require_single_qubit(a.dim(), "tensor");
  require_single_qubit(b.dim(), "tensor");
  ComplexMatrix m(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
      }
    }
  }
  return DensityMatrix(m);
}

DensityMatrix partial_trace_env(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw DimensionError("partial_trace_env expects a two-qubit state, got dimension " +
                         std::to_string(rho.dim()));
  }
  ComplexMatrix out = ComplexMatrix::Zero(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) out(i, j) += rho(2 * i + k, 2 * j + k);
    }
  }
  return DensityMatrix(out);
}

DensityMatrix reduced_with_overlap(Complex c_g0, Complex c_e1, EnvironmentOverlap s) {
  const double pg = std::norm(c_g0);
  const double pe = std::norm(c_e1);
  if (std::abs(pg + pe - 1.0) > tol::kAlgebraic) {
    throw InvalidStateError("|c_g0|^2 + |c_e1|^2 must equal 1");
  }
  if (std::abs(s.overlap) > 1.0 + tol::kAlgebraic) {
    throw InvalidOverlapError("environment overlap magnitude exceeds 1");
  }
  ComplexMatrix m(2, 2);
  // Upper element carries <xi1|xi0> = conj(s).
  m << pg, c_g0 * std::conj(c_e1) * std::conj(s.overlap),
       std::conj(c_g0) * c_e1 * s.overlap, pe;
  return DensityMatrix(m);
}

}  // namespace qdyn
