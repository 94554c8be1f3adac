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

#include <array>
#include <cmath>

#include <benchmark/benchmark.h>

#include "qdyn/dynamics.hpp"
#include "qdyn/protocols.hpp"
#include "qdyn/qstate.hpp"

namespace {

void BM_LindbladTrajectory(benchmark::State& state) {
  const auto rho0 = qdyn::density_from_ket(qdyn::Ket{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
  const std::array ch{qdyn::LindbladChannel::dephasing(0.25)};
  const double dt = 1e-3;
  for (auto _ : state) {
    auto ts = qdyn::evolve_lindblad(rho0, qdyn::QubitHamiltonian::free(1.0), ch,
                                    static_cast<double>(state.range(0)), dt);
    benchmark::DoNotOptimize(ts);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(state.range(0) / dt));
}
BENCHMARK(BM_LindbladTrajectory)->Arg(1)->Arg(10);

void BM_RabiFullCosine(benchmark::State& state) {
  const auto rho0 = qdyn::density_from_ket(qdyn::Ket::ground());
  const qdyn::QubitHamiltonian lab{20.0, 0.5, 20.0, qdyn::DriveMode::full_cosine};
  for (auto _ : state) {
    auto ts = qdyn::evolve_closed(rho0, lab, 10.0, 0.004);
    benchmark::DoNotOptimize(ts);
  }
}
BENCHMARK(BM_RabiFullCosine);

void BM_SuperdenseDecode(benchmark::State& state) {
  const auto rho = qdyn::dephase_first_qubit(
      qdyn::density_from_ket(qdyn::superdense_encode(qdyn::Message::m11)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(qdyn::superdense_decode(rho));
}
BENCHMARK(BM_SuperdenseDecode);

void BM_RamseyScan(benchmark::State& state) {
  const qdyn::RamseyConfig cfg{1.0, 16 * 3.141592653589793, static_cast<int>(state.range(0)), 0.05,
                               qdyn::PulseModel::instantaneous};
  for (auto _ : state) {
    auto ts = qdyn::ramsey_scan(cfg);
    benchmark::DoNotOptimize(ts);
  }
}
BENCHMARK(BM_RamseyScan)->Arg(512)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
