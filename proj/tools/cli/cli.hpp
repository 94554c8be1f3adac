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

// Command-line front end for the qdyn experiments.
//
// Exit codes: 0 success, 2 invalid arguments or parameters, 3 numerical
// instability during integration, 4 output I/O failure.

#pragma once

#include <exception>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "qdyn/dynamics.hpp"

namespace qdyn::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kNumericalInstability = 3,
  kIoFailure = 4,
};

enum class Format { csv, json };

struct InterferenceParams {
  double k = 0.0;
  double slit_spacing = 0.0;
  double screen_distance = 0.0;
  double a = 0.0;
  double b = 0.0;
  double phi = 0.0;
  double x_min = 0.0;
  double x_max = 0.0;
  int points = 0;
};

struct RamseyParams {
  double delta_split = 0.0;
  double tau_max = 0.0;
  int points = 0;
  double dephasing_rate = 0.0;
};

struct DephasingParams {
  double epsilon = 0.0;
  double delta = 0.0;
  double t_max = 0.0;
  double dt = 0.0;
  double rho01_init_re = 0.5;
  double rho01_init_im = 0.0;
  double p_e_init = 0.5;
};

struct RabiParams {
  double omega = 0.0;
  double delta = 0.0;
  double epsilon = 0.0;
  double t_max = 0.0;
  double dt = 0.0;
};

/// Without points the message is decoded once after a transmission time of
/// t_max (default 0). With points >= 2 the decode is swept over [0, t_max].
struct SuperdenseParams {
  std::string message;
  double delta = 0.0;
  double t_max = 0.0;
  std::optional<int> points;
};

using Params =
    std::variant<InterferenceParams, RamseyParams, DephasingParams, RabiParams, SuperdenseParams>;

struct RunConfig {
  Params params;
  Format format = Format::csv;
  /// Empty means standard output.
  std::string output_path;
  int jobs = 1;
};

std::string_view subcommand_name(const Params& params);

/// printf "%#.9g": nine significant digits, trailing zeros kept, negative
/// zero printed as zero.
std::string format_number(double v);

void emit_csv(const TimeSeries& series, std::ostream& out);
/// Writes {"meta": ..., "data": ...} as a single document with sorted keys.
void emit_json(const nlohmann::json& meta, const nlohmann::json& data, std::ostream& out);

/// Runs the experiment and returns the full output document. Library errors
/// propagate as exceptions.
std::string render(const RunConfig& config);

/// Exit status for an error escaping render().
int exit_code_for(const std::exception& e);

/// Renders, then writes to stdout or atomically to config.output_path
/// (temporary file renamed on success). Diagnostics go to err as one line.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs.
int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Help text mapping natural units to physical time scales.
std::string_view unit_note();

}  // namespace qdyn::cli
