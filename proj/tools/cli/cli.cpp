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

#include "cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>
#include <vector>

#include <CLI11.hpp>

#include "qdyn/errors.hpp"
#include "qdyn/interference.hpp"
#include "qdyn/parallel.hpp"
#include "qdyn/protocols.hpp"
#include "qdyn/qstate.hpp"

namespace qdyn::cli {
namespace {

using nlohmann::json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

// One-line diagnostics only.
std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

json series_columns(const TimeSeries& series) {
  json t = json::array(), pg = json::array(), pe = json::array();
  json re = json::array(), im = json::array(), ab = json::array();
  for (const auto& s : series.samples) {
    t.push_back(s.t);
    pg.push_back(s.populations[0]);
    pe.push_back(s.populations[1]);
    re.push_back(s.rho01.real());
    im.push_back(s.rho01.imag());
    ab.push_back(std::abs(s.rho01));
  }
  return {{"t", t}, {"p_g", pg}, {"p_e", pe}, {"re_rho01", re}, {"im_rho01", im},
          {"abs_rho01", ab}};
}

std::string csv_row(std::initializer_list<double> values) {
  std::string line;
  bool first = true;
  for (double v : values) {
    if (!first) line += ',';
    line += format_number(v);
    first = false;
  }
  line += '\n';
  return line;
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
  std::vector<double> g(static_cast<std::size_t>(points));
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (int i = 0; i < points; ++i) {
    g[static_cast<std::size_t>(i)] = i + 1 == points ? hi : lo + step * static_cast<double>(i);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Subcommand renderers. Each returns the whole output document.

std::string render_interference(const InterferenceParams& p, const RunConfig& cfg,
                                const json& meta) {
  const SlitGeometry geom{p.k, p.slit_spacing, p.screen_distance};
  const PhotonState photon{p.a, p.b, p.phi};
  validate(geom);
  validate(photon);
  if (p.points < 2) throw DomainError("--points must be at least 2");
  if (!(p.x_max > p.x_min)) throw DomainError("--x-max must exceed --x-min");

  const auto xs = uniform_grid(p.x_min, p.x_max, p.points);
  struct Row {
    double x, u, classical, quantum;
  };
  const auto rows = parallel_map(xs.size(), cfg.jobs, [&](std::size_t i) {
    const double u = path_phase(geom, xs[i]);
    return Row{xs[i], u, classical_intensity(geom, xs[i]), quantum_intensity(photon, u)};
  });

  std::ostringstream out;
  if (cfg.format == Format::csv) {
    out << "x,u,classical_intensity,quantum_intensity\n";
    for (const auto& r : rows) out << csv_row({r.x, r.u, r.classical, r.quantum});
  } else {
    json x = json::array(), u = json::array(), c = json::array(), q = json::array();
    for (const auto& r : rows) {
      x.push_back(r.x);
      u.push_back(r.u);
      c.push_back(r.classical);
      q.push_back(r.quantum);
    }
    emit_json(meta, {{"x", x}, {"u", u}, {"classical_intensity", c}, {"intensity", q},
                     {"visibility", fringe_visibility(photon)}},
              out);
  }
  return out.str();
}

std::string render_series(const TimeSeries& series, const RunConfig& cfg, const json& meta,
                          json extra) {
  std::ostringstream out;
  if (cfg.format == Format::csv) {
    emit_csv(series, out);
  } else {
    json data = series_columns(series);
    for (auto& [key, value] : extra.items()) data[key] = value;
    emit_json(meta, data, out);
  }
  return out.str();
}

std::string render_superdense(const SuperdenseParams& p, const RunConfig& cfg, const json& meta) {
  const Message msg = parse_message(p.message);
  if (!(p.delta >= 0.0)) throw DomainError("--delta must be non-negative");
  if (!(p.t_max >= 0.0) || !std::isfinite(p.t_max)) throw DomainError("--t-max must be >= 0");

  auto decode_at = [&](double t) {
    const double factor = std::exp(-2.0 * p.delta * t);
    return superdense_decode(dephase_first_qubit(density_from_ket(superdense_encode(msg)), factor));
  };

  std::ostringstream out;
  if (!p.points) {
    const DecodeResult r = decode_at(p.t_max);
    const auto& pr = r.probabilities;
    if (cfg.format == Format::csv) {
      out << "t,p_00,p_01,p_10,p_11,decoded\n";
      out << format_number(p.t_max) << ',' << format_number(pr[0]) << ',' << format_number(pr[1])
          << ',' << format_number(pr[2]) << ',' << format_number(pr[3]) << ','
          << to_string(r.message) << '\n';
    } else {
      emit_json(meta,
                {{"message", p.message},
                 {"t", p.t_max},
                 {"probabilities", pr},
                 {"decoded", to_string(r.message)},
                 {"success", pr[static_cast<std::size_t>(index(msg))]}},
                out);
    }
    return out.str();
  }

  if (*p.points < 2) throw DomainError("--points must be at least 2");
  if (!(p.t_max > 0.0)) throw DomainError("--t-max must be positive for a sweep");
  const auto ts = uniform_grid(0.0, p.t_max, *p.points);
  const auto results = parallel_map(ts.size(), cfg.jobs, [&](std::size_t i) { return decode_at(ts[i]); });
  const auto m = static_cast<std::size_t>(index(msg));
  if (cfg.format == Format::csv) {
    out << "t,p_00,p_01,p_10,p_11,success\n";
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const auto& pr = results[i].probabilities;
      out << csv_row({ts[i], pr[0], pr[1], pr[2], pr[3], pr[m]});
    }
  } else {
    json t = json::array(), probs = json::array(), success = json::array(),
         decoded = json::array();
    for (std::size_t i = 0; i < ts.size(); ++i) {
      t.push_back(ts[i]);
      probs.push_back(results[i].probabilities);
      success.push_back(results[i].probabilities[m]);
      decoded.push_back(to_string(results[i].message));
    }
    emit_json(meta,
              {{"message", p.message}, {"t", t}, {"probabilities", probs}, {"success", success},
               {"decoded", decoded}},
              out);
  }
  return out.str();
}

json parameters_of(const Params& params) {
  return std::visit(
      Overloaded{
          [](const InterferenceParams& p) -> json {
            return {{"k", p.k},         {"slit_spacing", p.slit_spacing},
                    {"screen_distance", p.screen_distance},
                    {"a", p.a},         {"b", p.b},
                    {"phi", p.phi},     {"x_min", p.x_min},
                    {"x_max", p.x_max}, {"points", p.points}};
          },
          [](const RamseyParams& p) -> json {
            return {{"delta_split", p.delta_split},
                    {"tau_max", p.tau_max},
                    {"points", p.points},
                    {"dephasing_rate", p.dephasing_rate}};
          },
          [](const DephasingParams& p) -> json {
            return {{"epsilon", p.epsilon},
                    {"delta", p.delta},
                    {"t_max", p.t_max},
                    {"dt", p.dt},
                    {"rho01_init_re", p.rho01_init_re},
                    {"rho01_init_im", p.rho01_init_im},
                    {"p_e_init", p.p_e_init}};
          },
          [](const RabiParams& p) -> json {
            return {{"omega", p.omega},
                    {"delta", p.delta},
                    {"epsilon", p.epsilon},
                    {"t_max", p.t_max},
                    {"dt", p.dt}};
          },
          [](const SuperdenseParams& p) -> json {
            json j{{"message", p.message}, {"delta", p.delta}, {"t_max", p.t_max}};
            j["points"] = p.points ? json(*p.points) : json(nullptr);
            return j;
          },
      },
      params);
}

void write_atomically(const std::string& path, const std::string& body) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + tmp.string() + " for writing");
    f.write(body.data(), static_cast<std::streamsize>(body.size()));
    f.flush();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError("cannot rename output into place: " + ec.message());
  }
}

constexpr std::string_view kUnitNote = R"(Units
  All inputs and outputs use natural units with hbar = 1. Energies are given
  as angular frequencies and rates as inverse times, both in reciprocal units
  of whatever time unit you choose.

  time unit   energy 1.0 corresponds to   rate 1.0 corresponds to
  ps          hbar x 1 rad/ps = 0.658 meV  1 / ps
  ns          hbar x 1 rad/ns = 0.658 ueV  1 / ns

  Example: picosecond control (omega ~ 1 per ps) with nanosecond coherence
  (delta ~ 1e-3 per ps) gives a figure of merit delta/omega ~ 1e-3.
  A dephasing rate of 500 per ns gives T2 = 1/(2 delta) = 0.001 ns = 1 ps.
)";

}  // namespace

std::string_view unit_note() { return kUnitNote; }

std::string_view subcommand_name(const Params& params) {
  return std::visit(Overloaded{
                        [](const InterferenceParams&) { return std::string_view("interference"); },
                        [](const RamseyParams&) { return std::string_view("ramsey"); },
                        [](const DephasingParams&) { return std::string_view("dephasing"); },
                        [](const RabiParams&) { return std::string_view("rabi"); },
                        [](const SuperdenseParams&) { return std::string_view("superdense"); },
                    },
                    params);
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drops the sign of -0
  std::array<char, 64> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%#.9g", v);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

void emit_csv(const TimeSeries& series, std::ostream& out) {
  out << "t,p_g,p_e,re_rho01,im_rho01,abs_rho01\n";
  for (const auto& s : series.samples) {
    out << csv_row({s.t, s.populations[0], s.populations[1], s.rho01.real(), s.rho01.imag(),
                    std::abs(s.rho01)});
  }
}

void emit_json(const nlohmann::json& meta, const nlohmann::json& data, std::ostream& out) {
  const json doc{{"meta", meta}, {"data", data}};
  out << doc.dump(2) << '\n';
}

std::string render(const RunConfig& config) {
  if (config.jobs < 1) throw DomainError("--jobs must be at least 1");
  const json meta{{"subcommand", subcommand_name(config.params)},
                  {"parameters", parameters_of(config.params)},
                  {"version", kVersion}};

  return std::visit(
      Overloaded{
          [&](const InterferenceParams& p) { return render_interference(p, config, meta); },
          [&](const RamseyParams& p) {
            const RamseyConfig rc{p.delta_split, p.tau_max, p.points, p.dephasing_rate,
                                  PulseModel::instantaneous};
            return render_series(ramsey_scan(rc, config.jobs), config, meta, json::object());
          },
          [&](const DephasingParams& p) {
            ComplexMatrix m(2, 2);
            const Complex c{p.rho01_init_re, p.rho01_init_im};
            m << 1.0 - p.p_e_init, c, std::conj(c), p.p_e_init;
            const DensityMatrix rho0(m);
            const std::array channels{LindbladChannel::dephasing(p.delta)};
            const auto series =
                evolve_lindblad(rho0, QubitHamiltonian::free(p.epsilon), channels, p.t_max, p.dt);
            json extra = json::object();
            if (p.delta > 0.0) extra["t2"] = dephasing_time(p.delta);
            return render_series(series, config, meta, extra);
          },
          [&](const RabiParams& p) {
            const auto series = rabi_with_dephasing(p.omega, p.delta, p.epsilon, p.t_max, p.dt);
            return render_series(series, config, meta,
                                 {{"figure_of_merit", figure_of_merit(p.delta, p.omega)}});
          },
          [&](const SuperdenseParams& p) { return render_superdense(p, config, meta); },
      },
      config.params);
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const NumericalInstabilityError*>(&e) != nullptr) return kNumericalInstability;
  if (dynamic_cast<const IoError*>(&e) != nullptr) return kIoFailure;
  if (dynamic_cast<const Error*>(&e) != nullptr) return kInvalidInput;
  return kInvalidInput;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::string body;
  try {
    body = render(config);
  } catch (const std::exception& e) {
    const int code = exit_code_for(e);
    err << (code == kNumericalInstability ? "qdyn: numerical instability: "
                                          : "qdyn: invalid parameters: ")
        << one_line(e.what()) << '\n';
    return code;
  }

  try {
    if (config.output_path.empty()) {
      out << body;
      out.flush();
      if (!out) throw IoError("failed writing to standard output");
    } else {
      write_atomically(config.output_path, body);
    }
  } catch (const std::exception& e) {
    err << "qdyn: I/O error: " << one_line(e.what()) << '\n';
    return kIoFailure;
  }
  return kOk;
}

int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-level and two-qubit quantum dynamics simulator", "qdyn"};
  app.fallthrough();

  RunConfig config;
  std::string format = "csv";
  bool show_version = false;
  bool show_units = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", config.output_path, "Output file (default: standard output)");
  app.add_option("--jobs", config.jobs, "Worker threads for parameter sweeps")
      ->check(CLI::PositiveNumber);
  app.add_flag("--version", show_version, "Print version and exit");
  app.add_flag("--unit-note", show_units, "Explain the unit conventions and exit");

  InterferenceParams ip;
  auto* interference = app.add_subcommand("interference", "Two-slit screen intensity profile");
  interference->add_option("--k", ip.k, "Wavenumber")->required();
  interference->add_option("--slit-spacing", ip.slit_spacing, "Slit spacing L")->required();
  interference->add_option("--screen-distance", ip.screen_distance, "Slit-to-screen distance R0")
      ->required();
  interference->add_option("--a", ip.a, "Amplitude through slit one")->required();
  interference->add_option("--b", ip.b, "Amplitude through slit two")->required();
  interference->add_option("--phi", ip.phi, "Relative phase (rad)");
  interference->add_option("--x-min", ip.x_min, "First screen position")->required();
  interference->add_option("--x-max", ip.x_max, "Last screen position")->required();
  interference->add_option("--points", ip.points, "Number of screen positions")->required();

  RamseyParams rp;
  auto* ramsey = app.add_subcommand("ramsey", "Ramsey fringe scan");
  ramsey->add_option("--delta-split", rp.delta_split, "Level splitting Delta")->required();
  ramsey->add_option("--tau-max", rp.tau_max, "Longest free-evolution delay")->required();
  ramsey->add_option("--points", rp.points, "Number of delays")->required();
  ramsey->add_option("--dephasing-rate", rp.dephasing_rate, "Pure dephasing rate during delay");

  DephasingParams dp;
  auto* dephasing = app.add_subcommand("dephasing", "Lindblad pure-dephasing trajectory");
  dephasing->add_option("--epsilon", dp.epsilon, "Level splitting epsilon")->required();
  dephasing->add_option("--delta", dp.delta, "Dephasing rate delta")->required();
  dephasing->add_option("--t-max", dp.t_max, "Final time")->required();
  dephasing->add_option("--dt", dp.dt, "Integrator step")->required();
  dephasing->add_option("--rho01-init-re", dp.rho01_init_re, "Re rho01 at t=0");
  dephasing->add_option("--rho01-init-im", dp.rho01_init_im, "Im rho01 at t=0");
  dephasing->add_option("--p-e-init", dp.p_e_init, "Excited population at t=0");

  RabiParams bp;
  auto* rabi = app.add_subcommand("rabi", "Resonantly driven qubit with dephasing");
  rabi->add_option("--omega", bp.omega, "Rabi frequency")->required();
  rabi->add_option("--delta", bp.delta, "Dephasing rate")->required();
  rabi->add_option("--epsilon", bp.epsilon, "Level splitting (drive is resonant)")->required();
  rabi->add_option("--t-max", bp.t_max, "Final time")->required();
  rabi->add_option("--dt", bp.dt, "Integrator step")->required();

  SuperdenseParams sp;
  int sd_points = 0;
  auto* superdense = app.add_subcommand("superdense", "Superdense coding over a dephasing channel");
  superdense->add_option("--message", sp.message, "Two-bit message")
      ->required()
      ->check(CLI::IsMember({"00", "01", "10", "11"}));
  superdense->add_option("--delta", sp.delta, "Dephasing rate on Alice's qubit")->required();
  superdense->add_option("--t-max", sp.t_max, "Transmission time (or sweep end)");
  auto* points_opt = superdense->add_option("--points", sd_points, "Sweep points over [0, t-max]");

  app.require_subcommand(0, 1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "qdyn: " << one_line(e.what()) << '\n';
    return kInvalidInput;
  }

  if (show_version) {
    out << "qdyn " << kVersion << '\n';
    return kOk;
  }
  if (show_units) {
    out << kUnitNote;
    return kOk;
  }

  if (interference->parsed()) {
    config.params = ip;
  } else if (ramsey->parsed()) {
    config.params = rp;
  } else if (dephasing->parsed()) {
    config.params = dp;
  } else if (rabi->parsed()) {
    config.params = bp;
  } else if (superdense->parsed()) {
    if (points_opt->count() > 0) sp.points = sd_points;
    config.params = sp;
  } else {
    err << "qdyn: a subcommand is required (interference, ramsey, dephasing, rabi, superdense)\n";
    return kInvalidInput;
  }
  config.format = format == "json" ? Format::json : Format::csv;
  return run(config, out, err);
}

}  // namespace qdyn::cli
