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

#include "qdyn/interference.hpp"

#include <cmath>

#include "qdyn/errors.hpp"

namespace qdyn {

void validate(const SlitGeometry& geom) {
  if (!(geom.k > 0.0) || !(geom.slit_spacing > 0.0) || !(geom.screen_distance > 0.0)) {
    throw GeometryError("wavenumber, slit spacing and screen distance must be positive");
  }
  if (!(geom.slit_spacing / geom.screen_distance < 0.1)) {
    throw GeometryError("far-field condition L/R0 < 0.1 violated");
  }
  if (!std::isfinite(geom.k * geom.slit_spacing / geom.screen_distance)) {
    throw GeometryError("non-finite geometry");
  }
}

void validate(const PhotonState& state) {
  if (!(state.a >= 0.0 && state.a <= 1.0) || !(state.b >= 0.0 && state.b <= 1.0)) {
    throw DomainError("photon amplitudes must lie in [0, 1]");
  }
  if (std::abs(state.a * state.a + state.b * state.b - 1.0) > 1e-12) {
    throw DomainError("photon amplitudes must satisfy a^2 + b^2 = 1");
  }
  if (!std::isfinite(state.phi)) throw DomainError("relative phase must be finite");
}

double path_phase(const SlitGeometry& geom, double x) {
  return geom.k * geom.slit_spacing * x / geom.screen_distance;
}

double classical_intensity(const SlitGeometry& geom, double x) {
  validate(geom);
  return 2.0 * (1.0 + std::cos(path_phase(geom, x)));
}

double quantum_intensity(const PhotonState& state, double u) {
  validate(state);
  return 1.0 + 2.0 * state.a * state.b * std::cos(u - state.phi);
}

double fringe_visibility(const PhotonState& state) {
  validate(state);
  return 2.0 * state.a * state.b;
}

}  // namespace qdyn
