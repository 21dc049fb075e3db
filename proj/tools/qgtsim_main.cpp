// Copyright 2026 The qgtsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qgtsim: grid sweeps, Chern integration, single points, the four-band
// extraction and oracle validation from the command line.

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgtsim/errors.hpp"
#include "qgtsim/io.hpp"
#include "qgtsim/nonabelian.hpp"
#include "qgtsim/sweep.hpp"
#include "qgtsim/validate.hpp"

namespace {

using namespace qgtsim;

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

// Flags mirroring RunConfig. Values land in `cli`; only options the user
// actually passed override a --config replay.
struct RunOptions {
  RunConfig cli;
  std::string method = "vqa";
  std::string scheme = "forward";
  bool no_purify = false;
  std::string config_path;
  std::string out;
  std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> bindings;

  void attach(CLI::App* app) {
    auto bind = [&](CLI::Option* opt, std::function<void(RunConfig&)> copy) {
      bindings.emplace_back(opt, std::move(copy));
    };
    bind(app->add_option("--method", method, "vqa, ite or exact")
             ->check(CLI::IsMember({"vqa", "ite", "exact"})),
         [this](RunConfig& c) { c.method = parse_method(method); });
    bind(app->add_option("--m", cli.m, "mass term m"), [this](RunConfig& c) { c.m = cli.m; });
    bind(app->add_option("--grid-n", cli.grid_n, "points per momentum axis"),
         [this](RunConfig& c) { c.grid_n = cli.grid_n; });
    bind(app->add_option("--delta", cli.delta, "finite-difference step in radians"),
         [this](RunConfig& c) { c.delta = cli.delta; });
    bind(app->add_option("--tau", cli.tau, "imaginary time"),
         [this](RunConfig& c) { c.tau = cli.tau; });
    bind(app->add_option("--shots", cli.shots, "shots per measurement circuit"),
         [this](RunConfig& c) { c.shots = cli.shots; });
    bind(app->add_flag("--exact", cli.exact, "exact Born probabilities instead of shots"),
         [this](RunConfig& c) { c.exact = cli.exact; });
    bind(app->add_option("--depolarizing", cli.depolarizing_p, "Pauli error rate per gate"),
         [this](RunConfig& c) { c.depolarizing_p = cli.depolarizing_p; });
    bind(app->add_option("--readout-q", cli.readout_q, "readout bit-flip probability"),
         [this](RunConfig& c) { c.readout_q = cli.readout_q; });
    bind(app->add_flag("--mitigate", cli.mitigate, "invert the readout confusion matrix"),
         [this](RunConfig& c) { c.mitigate = cli.mitigate; });
    bind(app->add_flag("--no-purify", no_purify, "keep the raw reconstructed density matrix"),
         [this](RunConfig& c) { c.purify = !no_purify; });
    bind(app->add_option("--robust-eps", cli.robust_eps, "skip |P_ij| below this in the solve"),
         [this](RunConfig& c) { c.robust_eps = cli.robust_eps; });
    bind(app->add_option("--seed", cli.base_seed, "base seed"),
         [this](RunConfig& c) { c.base_seed = cli.base_seed; });
    bind(app->add_option("--workers", cli.workers, "worker threads, 0 = all cores"),
         [this](RunConfig& c) { c.workers = cli.workers; });
    bind(app->add_option("--scheme", scheme, "forward or central differences")
             ->check(CLI::IsMember({"forward", "central"})),
         [this](RunConfig& c) {
           c.scheme = scheme == "central" ? DifferenceScheme::kCentral : DifferenceScheme::kForward;
         });
    app->add_option("--config", config_path, "replay the config of a manifest JSON");
    app->add_option("--out", out, "output path");
  }

  RunConfig resolve() const {
    RunConfig c = config_path.empty() ? RunConfig{} : config_from_json(read_file(config_path));
    for (const auto& [opt, copy] : bindings) {
      if (opt->count() > 0) copy(c);
    }
    c.validate();
    return c;
  }
};

std::string manifest_path(const std::string& csv_path) {
  std::filesystem::path p(csv_path);
  p.replace_extension(".manifest.json");
  return p.string();
}

int cmd_sweep(const RunOptions& o) {
  const RunConfig cfg = o.resolve();
  const SweepResult r = sweep(cfg);
  if (o.out.empty()) {
    write_csv(std::cout, r.records);
  } else {
    std::ostringstream csv;
    write_csv(csv, r.records);
    write_file(o.out, csv.str());
    write_file(manifest_path(o.out), manifest_json(r));
    std::cerr << "wrote " << r.records.size() << " records to " << o.out << " in "
              << format_double(r.manifest.wall_seconds) << " s\n";
  }
  return 0;
}

void print_chern(std::ostream& os, const ChernReport& rep, const std::vector<PointRecord>& recs) {
  int flagged = 0;
  for (const auto& r : recs) flagged += r.qgt.flags.empty() ? 0 : 1;
  os << "C=" << format_double(rep.chern) << " nearest=" << rep.nearest
     << " residual=" << format_double(rep.residual) << " flagged_points=" << flagged << '\n';
}

int cmd_chern(const RunOptions& o, const std::string& in) {
  std::vector<PointRecord> records;
  int n = 0;
  if (!in.empty()) {
    std::istringstream is(read_file(in));
    records = read_csv(is);
    n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(records.size()))));
    if (n * n != static_cast<int>(records.size())) {
      throw ConfigError("chern: record count is not a square grid");
    }
  } else {
    const RunConfig cfg = o.resolve();
    records = sweep(cfg).records;
    n = cfg.grid_n;
  }
  const ChernReport rep = chern_report(records, n);
  print_chern(std::cout, rep, records);
  if (!o.out.empty()) {
    std::ostringstream os;
    print_chern(os, rep, records);
    write_file(o.out, os.str());
  }
  return 0;
}

int cmd_point(const RunOptions& o, double kx, double ky) {
  const RunConfig cfg = o.resolve();
  const PointRecord r = run_point_at(cfg, kx, ky, cfg.base_seed);
  std::ostringstream os;
  write_csv(os, {r});
  std::cout << os.str();
  if (!o.out.empty()) write_file(o.out, os.str());
  return std::isfinite(r.qgt.f_xy) ? 0 : kExitFailure;
}

std::string format_block(const Eigen::Matrix2cd& b) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 2; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < 2; ++j) {
      os << (j ? ", " : "") << format_double(b(i, j).real()) << (b(i, j).imag() < 0 ? "" : "+")
         << format_double(b(i, j).imag()) << "i";
    }
  }
  os << "]";
  return os.str();
}

int cmd_nonabelian(const RunOptions& o, double kmu, double knu, bool delta_given,
                   double gauge_theta, double gauge_phase) {
  RunConfig cfg = o.resolve();
  // The four-band extraction is an oracle study; a small step is the default.
  const double delta = delta_given ? cfg.delta : 1e-4;
  const HamiltonianField field = gamma_model_field(cfg.m);
  // Rotating the reference pair mixes the two sz (x) sz sectors.
  ComplexMatrix w(2, 2);
  const Complex e = std::polar(1.0, gauge_phase);
  w << std::cos(gauge_theta), -std::sin(gauge_theta) * e, std::sin(gauge_theta) * std::conj(e),
      std::cos(gauge_theta);
  const ReferenceGauge gauge = ReferenceGauge::standard().rotated(w);
  const NonAbelianQGT got =
      assemble_nonabelian_qgt(field, kmu, knu, delta, cfg.scheme, gauge, cfg.robust_eps);
  const NonAbelianQGT ref = oracle_nonabelian_qgt(field, kmu, knu, delta, cfg.scheme, gauge);
  std::ostringstream os;
  const char* axis[2] = {"mu", "nu"};
  double worst = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      os << "g_" << axis[a] << axis[b] << " = " << format_block(got.g[a][b]) << '\n';
      os << "F_" << axis[a] << axis[b] << " = " << format_block(got.f[a][b]) << '\n';
      worst = std::max(worst, (got.g[a][b] - ref.g[a][b]).cwiseAbs().maxCoeff());
      worst = std::max(worst, (got.f[a][b] - ref.f[a][b]).cwiseAbs().maxCoeff());
    }
  }
  os << "hermiticity_residual=" << format_double(got.hermiticity_residual)
     << " oracle_max_abs_diff=" << format_double(worst) << " delta=" << format_double(delta)
     << '\n';
  std::cout << os.str();
  if (!o.out.empty()) write_file(o.out, os.str());
  return 0;
}

int cmd_validate(const RunOptions& o) {
  const RunConfig cfg = o.resolve();
  const ValidationReport rep = run_validation(cfg);
  std::ostringstream os;
  print_report(os, rep);
  std::cout << os.str();
  if (!o.out.empty()) write_file(o.out, os.str());
  return rep.passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qgtsim: quantum geometric tensor of the Qi-Wu-Zhang model from simulated circuits"};
  app.set_version_flag("--version", std::string(qgtsim::library_version()));
  app.require_subcommand(1);

  RunOptions sweep_opts, chern_opts, point_opts, na_opts, validate_opts;
  auto* sweep_cmd = app.add_subcommand("sweep", "QGT on the full momentum grid, CSV output");
  sweep_opts.attach(sweep_cmd);

  auto* chern_cmd = app.add_subcommand("chern", "Chern number of a sweep or of a CSV file");
  chern_opts.attach(chern_cmd);
  std::string chern_in;
  chern_cmd->add_option("--in", chern_in, "integrate an existing sweep CSV")
      ->check(CLI::ExistingFile);

  auto* point_cmd = app.add_subcommand("point", "QGT at one momentum");
  point_opts.attach(point_cmd);
  double kx = 0.0, ky = 0.0;
  point_cmd->add_option("--kx", kx, "k_x in radians")->required();
  point_cmd->add_option("--ky", ky, "k_y in radians")->required();

  auto* na_cmd = app.add_subcommand("nonabelian", "four-band degenerate QGT at one momentum");
  na_opts.attach(na_cmd);
  double kmu = 0.0, knu = 0.0;
  na_cmd->add_option("--kx", kmu, "k_mu in radians")->required();
  na_cmd->add_option("--ky", knu, "k_nu in radians")->required();
  double gauge_theta = 0.0, gauge_phase = 0.0;
  na_cmd->add_option("--gauge-theta", gauge_theta, "mixing angle of the reference pair");
  na_cmd->add_option("--gauge-phase", gauge_phase, "mixing phase of the reference pair");

  auto* validate_cmd = app.add_subcommand("validate", "oracle-equivalence suites");
  validate_opts.attach(validate_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*sweep_cmd) return cmd_sweep(sweep_opts);
    if (*chern_cmd) return cmd_chern(chern_opts, chern_in);
    if (*point_cmd) return cmd_point(point_opts, kx, ky);
    if (*na_cmd) {
      const bool delta_given = na_cmd->get_option("--delta")->count() > 0;
      return cmd_nonabelian(na_opts, kmu, knu, delta_given, gauge_theta, gauge_phase);
    }
    if (*validate_cmd) return cmd_validate(validate_opts);
  } catch (const qgtsim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const qgtsim::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
