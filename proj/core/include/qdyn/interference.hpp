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

// Two-slit screen intensities. All intensities are dimensionless and
// normalized so that a single open slit gives 1.

#pragma once

namespace qdyn {

/// Wavenumber k, slit spacing L and slit-to-screen distance R0, in any
/// consistent length unit. Requires k, L, R0 > 0 and L/R0 < 0.1.
struct SlitGeometry {
  double k = 0.0;
  double slit_spacing = 0.0;
  double screen_distance = 0.0;
};

/// Single photon a|k> + b e^{i phi}|k'> with real a, b >= 0, a^2 + b^2 = 1.
struct PhotonState {
  double a = 0.0;
  double b = 0.0;
  double phi = 0.0;
};

/// Throws GeometryError on an invalid geometry.
void validate(const SlitGeometry& geom);
/// Throws DomainError on an invalid photon state.
void validate(const PhotonState& state);

/// Phase difference k L x / R0 between the two paths at screen position x.
double path_phase(const SlitGeometry& geom, double x);

/// |1 + exp(-i k L x / R0)|^2 = 2 (1 + cos(k L x / R0)); peaks at 4.
double classical_intensity(const SlitGeometry& geom, double x);

/// 1 + 2ab cos(u - phi), with u = (k - k').r the path phase.
double quantum_intensity(const PhotonState& state, double u);

/// (I_max - I_min) / (I_max + I_min) = 2ab.
double fringe_visibility(const PhotonState& state);

}  // namespace qdyn
