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

// Experiment-level compositions: Ramsey fringes, damped Rabi oscillations
// and superdense coding over a dephasing channel.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdyn/dynamics.hpp"
#include "qdyn/qstate.hpp"

namespace qdyn {

// ---------------------------------------------------------------------------
// Ramsey interferometry

enum class PulseModel { instantaneous };

/// Two instantaneous pi/2 pulses about the Bloch y axis separated by a free
/// evolution of length tau. dephasing_rate adds sqrt(delta) sigma_z noise
/// during the delay (0 disables it).
struct RamseyConfig {
  double delta_split = 0.0;
  double tau_max = 0.0;
  int n_points = 0;
  double dephasing_rate = 0.0;
  PulseModel pulse_model = PulseModel::instantaneous;

  void validate() const;
  double step() const { return tau_max / static_cast<double>(n_points - 1); }
};

/// Rotation exp(-i angle sigma_y / 2); maps |g> to (|g> + |e>)/sqrt(2) for
/// angle = pi/2.
ComplexMatrix rotation_y(double angle);

/// Closed form (1 + exp(-2 delta tau) cos(Delta tau)) / 2, which reduces to
/// cos^2(Delta tau / 2) without dephasing. Throws DomainError for tau
/// outside [0, tau_max].
double ramsey_population(const RamseyConfig& cfg, double tau);

/// Final state built by composing pulse, free evolution and pulse on |g><g|.
DensityMatrix ramsey_state(const RamseyConfig& cfg, double tau);

/// P_e on the uniform grid tau_i = i tau_max / (n_points - 1). Throws
/// SamplingError when the grid violates Nyquist for delta_split. jobs > 1
/// evaluates grid points in parallel; output order is the grid order.
TimeSeries ramsey_scan(const RamseyConfig& cfg, int jobs = 1);

/// Dominant angular frequency of a uniformly sampled real signal: the mean
/// is removed, the DFT magnitude peak is located and then refined by a
/// golden-section search on the continuous spectrum.
double dominant_frequency(std::span<const double> signal, double step);

// ---------------------------------------------------------------------------
// Driven qubit

/// Resonant rotating-wave drive at Rabi frequency omega with
/// sqrt(delta) sigma_z dephasing, starting from |g><g|.
TimeSeries rabi_with_dephasing(double omega, double delta, double epsilon, double t_max,
                               double dt);

/// max - min of P_e over samples with t in [t_begin, t_end].
double oscillation_contrast(const TimeSeries& series, double t_begin, double t_end);

/// Times and values of strict interior local maxima of P_e.
std::vector<Sample> population_maxima(const TimeSeries& series);

/// Gate-time to coherence-time ratio delta / omega.
double figure_of_merit(double delta, double omega);

// ---------------------------------------------------------------------------
// Superdense coding

enum class Message : std::uint8_t { m00 = 0, m01 = 1, m10 = 2, m11 = 3 };

inline constexpr std::array<Message, 4> kAllMessages = {Message::m00, Message::m01, Message::m10,
                                                        Message::m11};

/// Parses "00", "01", "10" or "11"; throws DomainError otherwise.
Message parse_message(std::string_view bits);
std::string to_string(Message m);
inline int index(Message m) { return static_cast<int>(m); }

/// [Phi+, Phi-, Psi+, Psi-], index-aligned with the messages they encode.
const std::array<Ket, 4>& bell_basis();

/// Alice applies I, Z, X or ZX to her (first) qubit of Phi+.
Ket superdense_encode(Message msg);

struct DecodeResult {
  Message message = Message::m00;
  std::array<double, 4> probabilities{};
};

/// Bell measurement; ties resolve to the lowest basis index.
DecodeResult superdense_decode(const DensityMatrix& rho);

/// Multiplies every coherence between different first-qubit values by
/// factor, i.e. pure dephasing of Alice's qubit with factor = exp(-2 delta t).
DensityMatrix dephase_first_qubit(const DensityMatrix& rho, double factor);

/// Decoded probability of each message after transmission for time t.
std::array<double, 4> superdense_success(double delta, double t);

struct SuperdenseSweep {
  std::vector<double> t;
  /// success[i][m]: probability of decoding message m correctly at t[i].
  std::vector<std::array<double, 4>> success;
};

SuperdenseSweep superdense_channel_sweep(double delta, double t_max, int n_points, int jobs = 1);

}  // namespace qdyn
