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

#include "qdyn/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qdyn/errors.hpp"
#include "qdyn/parallel.hpp"

namespace qdyn {
namespace {

constexpr double kPi = std::numbers::pi;

double spectrum_magnitude(std::span<const double> x, double step, double omega) {
  Complex acc{0.0, 0.0};
  for (std::size_t j = 0; j < x.size(); ++j) {
    acc += x[j] * std::polar(1.0, -omega * step * static_cast<double>(j));
  }
  return std::abs(acc);
}

ComplexMatrix on_first_qubit(const ComplexMatrix& op) {
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) out(2 * i + k, 2 * j + k) = op(i, j);
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Ramsey

void RamseyConfig::validate() const {
  if (!(delta_split >= 0.0) || !std::isfinite(delta_split)) {
    throw DomainError("level splitting must be finite and non-negative");
  }
  if (!(tau_max > 0.0) || !std::isfinite(tau_max)) throw DomainError("tau_max must be positive");
  if (n_points < 2) throw DomainError("Ramsey scan needs at least 2 points");
  if (!(dephasing_rate >= 0.0)) throw DomainError("dephasing rate must be non-negative");
}

ComplexMatrix rotation_y(double angle) {
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  ComplexMatrix r(2, 2);
  r << c, -s, s, c;
  return r;
}

double ramsey_population(const RamseyConfig& cfg, double tau) {
  cfg.validate();
  if (!(tau >= 0.0 && tau <= cfg.tau_max)) throw DomainError("tau outside [0, tau_max]");
  const double contrast = std::exp(-2.0 * cfg.dephasing_rate * tau);
  return 0.5 * (1.0 + contrast * std::cos(cfg.delta_split * tau));
}

DensityMatrix ramsey_state(const RamseyConfig& cfg, double tau) {
  cfg.validate();
  if (!(tau >= 0.0 && tau <= cfg.tau_max)) throw DomainError("tau outside [0, tau_max]");
  const ComplexMatrix pulse = rotation_y(0.5 * kPi);
  const ComplexMatrix ground = density_from_ket(Ket::ground()).elements();
  ComplexMatrix prepared = pulse * ground * pulse.adjoint();
  prepared = 0.5 * (prepared + prepared.adjoint()).eval();
  // Free precession diag(1, e^{i Delta tau}) on the ket, plus optional
  // dephasing, is exactly the pure-dephasing solution at epsilon = Delta.
  const DensityMatrix precessed = pure_dephasing_analytic(DensityMatrix(prepared), cfg.delta_split,
                                                          cfg.dephasing_rate, tau);
  ComplexMatrix out = pulse * precessed.elements() * pulse.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(out);
}

TimeSeries ramsey_scan(const RamseyConfig& cfg, int jobs) {
  cfg.validate();
  const double step = cfg.step();
  if (cfg.delta_split * step >= kPi) {
    throw SamplingError("Ramsey grid too coarse: need Delta * step < pi");
  }
  TimeSeries out;
  out.t0 = 0.0;
  out.dt = step;
  const auto n = static_cast<std::size_t>(cfg.n_points);
  out.samples = parallel_map(n, jobs, [&](std::size_t i) {
    const double tau = i + 1 == n ? cfg.tau_max : static_cast<double>(i) * step;
    const DensityMatrix rho = ramsey_state(cfg, tau);
    return Sample{tau, {rho(0, 0).real(), rho(1, 1).real()}, rho(0, 1)};
  });
  return out;
}

double dominant_frequency(std::span<const double> signal, double step) {
  if (signal.size() < 2) throw SamplingError("need at least two samples");
  if (!(step > 0.0)) throw DomainError("sample step must be positive");
  const double mean = std::accumulate(signal.begin(), signal.end(), 0.0) /
                      static_cast<double>(signal.size());
  std::vector<double> x(signal.begin(), signal.end());
  double energy = 0.0;
  for (double& v : x) {
    v -= mean;
    energy += v * v;
  }
  if (energy < 1e-24) return 0.0;

  const auto n = x.size();
  const double bin = 2.0 * kPi / (static_cast<double>(n) * step);
  std::size_t best = 1;
  double best_mag = -1.0;
  for (std::size_t k = 1; k <= n / 2; ++k) {
    const double mag = spectrum_magnitude(x, step, bin * static_cast<double>(k));
    if (mag > best_mag) {
      best_mag = mag;
      best = k;
    }
  }

  // Golden-section refinement between the neighbouring bins.
  double lo = bin * (static_cast<double>(best) - 1.0);
  double hi = bin * (static_cast<double>(best) + 1.0);
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - ratio * (hi - lo);
  double d = lo + ratio * (hi - lo);
  double fc = spectrum_magnitude(x, step, c);
  double fd = spectrum_magnitude(x, step, d);
  for (int it = 0; it < 80 && hi - lo > 1e-12 * bin; ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - ratio * (hi - lo);
      fc = spectrum_magnitude(x, step, c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + ratio * (hi - lo);
      fd = spectrum_magnitude(x, step, d);
    }
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Rabi

TimeSeries rabi_with_dephasing(double omega, double delta, double epsilon, double t_max,
                               double dt) {
  if (!(omega >= 0.0)) throw DomainError("Rabi frequency must be non-negative");
  if (!(delta >= 0.0)) throw DomainError("dephasing rate must be non-negative");
  const QubitHamiltonian h{epsilon, omega, epsilon, DriveMode::rotating_wave};
  const std::array channels{LindbladChannel::dephasing(delta)};
  return evolve_lindblad(density_from_ket(Ket::ground()), h, channels, t_max, dt);
}

double oscillation_contrast(const TimeSeries& series, double t_begin, double t_end) {
  const double slack = 1e-9 * std::max(1.0, std::abs(t_end));
  double lo = 1.0;
  double hi = 0.0;
  bool any = false;
  for (const auto& s : series.samples) {
    if (s.t < t_begin - slack || s.t > t_end + slack) continue;
    lo = std::min(lo, s.populations[1]);
    hi = std::max(hi, s.populations[1]);
    any = true;
  }
  if (!any) throw DomainError("no samples in the contrast window");
  return hi - lo;
}

std::vector<Sample> population_maxima(const TimeSeries& series) {
  std::vector<Sample> out;
  const auto& s = series.samples;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const double p = s[i].populations[1];
    if (p > s[i - 1].populations[1] && p >= s[i + 1].populations[1]) out.push_back(s[i]);
  }
  return out;
}

double figure_of_merit(double delta, double omega) {
  if (!(omega > 0.0)) throw DomainError("Rabi frequency must be positive");
  if (!(delta >= 0.0)) throw DomainError("dephasing rate must be non-negative");
  return delta / omega;
}

// ---------------------------------------------------------------------------
// Superdense coding

Message parse_message(std::string_view bits) {
  if (bits == "00") return Message::m00;
  if (bits == "01") return Message::m01;
  if (bits == "10") return Message::m10;
  if (bits == "11") return Message::m11;
  throw DomainError("message must be one of 00, 01, 10, 11");
}

std::string to_string(Message m) {
  switch (m) {
    case Message::m00:
      return "00";
    case Message::m01:
      return "01";
    case Message::m10:
      return "10";
    case Message::m11:
      return "11";
  }
  return "??";
}

const std::array<Ket, 4>& bell_basis() {
  static const std::array<Ket, 4> basis = [] {
    const double r = 1.0 / std::numbers::sqrt2;
    return std::array<Ket, 4>{Ket{r, 0.0, 0.0, r}, Ket{r, 0.0, 0.0, -r}, Ket{0.0, r, r, 0.0},
                              Ket{0.0, r, -r, 0.0}};
  }();
  return basis;
}

Ket superdense_encode(Message msg) {
  ComplexMatrix op = ComplexMatrix::Identity(2, 2);
  switch (msg) {
    case Message::m00:
      break;
    case Message::m01:
      op = pauli(Pauli::z);
      break;
    case Message::m10:
      op = pauli(Pauli::x);
      break;
    case Message::m11:
      op = pauli(Pauli::z) * pauli(Pauli::x);
      break;
  }
  const ComplexVector shared = bell_basis()[0].amplitudes();
  return Ket(ComplexVector(on_first_qubit(op) * shared));
}

DecodeResult superdense_decode(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("superdense decoding needs a two-qubit state");
  DecodeResult out;
  int best = 0;
  for (int k = 0; k < 4; ++k) {
    const ComplexVector& b = bell_basis()[static_cast<std::size_t>(k)].amplitudes();
    const double p = (b.adjoint() * rho.elements() * b)(0, 0).real();
    out.probabilities[static_cast<std::size_t>(k)] = p;
    if (p > out.probabilities[static_cast<std::size_t>(best)]) best = k;
  }
  out.message = static_cast<Message>(best);
  return out;
}

DensityMatrix dephase_first_qubit(const DensityMatrix& rho, double factor) {
  if (rho.dim() != 4) throw DimensionError("expected a two-qubit state");
  if (!(factor >= 0.0 && factor <= 1.0)) throw DomainError("damping factor must lie in [0, 1]");
  ComplexMatrix m = rho.elements();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if ((i >> 1) != (j >> 1)) m(i, j) *= factor;
    }
  }
  return DensityMatrix(m);
}

std::array<double, 4> superdense_success(double delta, double t) {
  if (!(delta >= 0.0)) throw DomainError("dephasing rate must be non-negative");
  if (!(t >= 0.0)) throw DomainError("transmission time must be non-negative");
  const double factor = std::exp(-2.0 * delta * t);
  std::array<double, 4> out{};
  for (Message m : kAllMessages) {
    const DensityMatrix sent = dephase_first_qubit(density_from_ket(superdense_encode(m)), factor);
    out[static_cast<std::size_t>(index(m))] =
        superdense_decode(sent).probabilities[static_cast<std::size_t>(index(m))];
  }
  return out;
}

SuperdenseSweep superdense_channel_sweep(double delta, double t_max, int n_points, int jobs) {
  if (!(delta >= 0.0)) throw DomainError("dephasing rate must be non-negative");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("t_max must be positive");
  if (n_points < 2) throw DomainError("sweep needs at least 2 points");
  const auto n = static_cast<std::size_t>(n_points);
  const double step = t_max / static_cast<double>(n - 1);
  SuperdenseSweep out;
  out.t.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.t[i] = i + 1 == n ? t_max : static_cast<double>(i) * step;
  out.success = parallel_map(n, jobs, [&](std::size_t i) { return superdense_success(delta, out.t[i]); });
  return out;
}

}  // namespace qdyn
