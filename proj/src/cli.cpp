#include "kekulattice/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "kekulattice/energy.hpp"
#include "kekulattice/error.hpp"
#include "kekulattice/kagome.hpp"
#include "kekulattice/minimize.hpp"
#include "kekulattice/parallel.hpp"
#include "kekulattice/perturbation.hpp"
#include "kekulattice/verify.hpp"

namespace kekulattice::cli {

using json = nlohmann::ordered_json;

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    parts.push_back(item);
  }
  if (!text.empty() && text.back() == sep) {
    parts.emplace_back();
  }
  return parts;
}

double parse_real(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const double x = std::stod(s, &used);
    if (used != s.size()) {
      throw std::invalid_argument(s);
    }
    return x;
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid number '") + s + "' in " + what);
  }
}

}  // namespace

HoppingTriple parse_tuv(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) {
    throw UsageError("--tuv expects t,u,v");
  }
  return {parse_real(parts[0], "--tuv"), parse_real(parts[1], "--tuv"), parse_real(parts[2], "--tuv")};
}

MuRange parse_mu_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) {
    throw UsageError("--mu-range expects FROM:TO:STEPS");
  }
  MuRange r;
  r.from = parse_real(parts[0], "--mu-range");
  r.to = parse_real(parts[1], "--mu-range");
  const double steps = parse_real(parts[2], "--mu-range");
  if (steps < 1 || steps != std::floor(steps) || steps > 1e6) {
    throw UsageError("--mu-range: STEPS must be a positive integer");
  }
  r.steps = static_cast<int>(steps);
  if (!(r.from > 0.0)) {
    throw UsageError("--mu-range: FROM must be positive");
  }
  if (r.steps > 1 ? !(r.from < r.to) : r.from > r.to) {
    throw UsageError("--mu-range: FROM must be below TO");
  }
  return r;
}

int resolve_threads(const std::optional<int>& flag) {
  if (flag) {
    return *flag;
  }
  if (const char* env = std::getenv("KEKULATTICE_THREADS")) {
    try {
      return std::max(0, std::stoi(env));
    } catch (const std::exception&) {
      throw UsageError(std::string("KEKULATTICE_THREADS is not an integer: ") + env);
    }
  }
  return 0;
}

namespace {

using Cell = std::variant<double, long long, std::string>;

/// Rows with named columns, written as CSV or as a JSON array of objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void write(std::ostream& os, OutputFormat fmt) const {
    if (fmt == OutputFormat::Csv) {
      for (std::size_t c = 0; c < columns.size(); ++c) {
        os << (c ? "," : "") << columns[c];
      }
      os << '\n';
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          os << (c ? "," : "") << cell_text(row[c]);
        }
        os << '\n';
      }
      return;
    }
    json arr = json::array();
    for (const auto& row : rows) {
      json obj = json::object();
      for (std::size_t c = 0; c < row.size(); ++c) {
        obj[columns[c]] = cell_json(row[c]);
      }
      arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << '\n';
  }

  static std::string cell_text(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) {
      return format_number(*d);
    }
    if (const auto* i = std::get_if<long long>(&cell)) {
      return std::to_string(*i);
    }
    return std::get<std::string>(cell);
  }

  static json cell_json(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) {
      return rounded(*d);
    }
    if (const auto* i = std::get_if<long long>(&cell)) {
      return *i;
    }
    return std::get<std::string>(cell);
  }

  // JSON numbers carry the same 12 significant digits as the CSV output.
  static json rounded(double x) { return std::strtod(format_number(x).c_str(), nullptr); }
};

OutputFormat format_or(const RunConfig& cfg, OutputFormat fallback) { return cfg.format.value_or(fallback); }

const HoppingTriple& require_tuv(const RunConfig& cfg) {
  if (!cfg.tuv) {
    throw UsageError("this command needs --tuv t,u,v");
  }
  return *cfg.tuv;
}

double require_mu(const RunConfig& cfg) {
  if (!cfg.mu) {
    throw UsageError("this command needs --mu");
  }
  if (!(*cfg.mu > 0.0)) {
    throw UsageError("--mu must be positive");
  }
  return *cfg.mu;
}

// Piecewise linear path through the corners, `per` points per segment, with
// the final corner appended.
std::vector<Vec2> path(const std::vector<Vec2>& corners, int per) {
  std::vector<Vec2> pts;
  for (std::size_t s = 0; s + 1 < corners.size(); ++s) {
    for (int p = 0; p < per; ++p) {
      pts.push_back(corners[s] + (double(p) / per) * (corners[s + 1] - corners[s]));
    }
  }
  pts.push_back(corners.back());
  return pts;
}

std::vector<Vec2> b6_path(int per) {
  const auto& lb = basis();
  const Vec2 gamma = Vec2::Zero();
  const Vec2 k = (lb.b1s + lb.b2s) / 3.0;
  const Vec2 m = lb.b1s / 2.0;
  return path({gamma, k, m, gamma}, per);
}

std::vector<Vec2> b2_path(int per) {
  const auto& lb = basis();
  const Vec2 gamma = Vec2::Zero();
  const Vec2 k = (2.0 * lb.a1s + lb.a2s) / 3.0;
  const Vec2 m = lb.a1s / 2.0;
  return path({gamma, k, m, gamma}, per);
}

Table bands_table(const RunConfig& cfg) {
  const HoppingTriple& tuv = require_tuv(cfg);
  Table t{{"i", "kx", "ky", "e1", "e2", "e3", "e4", "e5", "e6"}, {}};
  const auto pts = b6_path(cfg.pathPoints);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const BandSet b = bands(tuv, pts[i]);
    std::vector<Cell> row{static_cast<long long>(i), pts[i].x(), pts[i].y()};
    for (double e : b.values) {
      row.emplace_back(e);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table kagome_table(const RunConfig& cfg) {
  Table t{{"i", "kx", "ky", "flat", "lower", "upper"}, {}};
  const auto pts = b2_path(cfg.pathPoints);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const KagomeBands b = kagome_bands(pts[i]);
    t.rows.push_back({static_cast<long long>(i), pts[i].x(), pts[i].y(), b.flat, b.lower, b.upper});
  }
  return t;
}

Table energy_table(const RunConfig& cfg) {
  const HoppingTriple& tuv = require_tuv(cfg);
  const double mu = require_mu(cfg);
  const EnergyBreakdown eb = total_energy(tuv, mu, make_grid(Zone::B6, cfg.gridN));
  return {{"mu", "t", "u", "v", "quantum", "elastic", "total", "grid_n", "quad_error"},
          {{mu, tuv.t, tuv.u, tuv.v, eb.quantum, eb.elastic, eb.total, static_cast<long long>(eb.gridN),
            eb.quadError}}};
}

const std::vector<std::string> kScanColumns{"mu", "t", "u", "v", "class", "gap", "energy", "energy_pristine"};

std::vector<Cell> scan_row(double mu, const MinimizerResult& r, Phase phase) {
  return {mu, r.cfg.t, r.cfg.u, r.cfg.v, std::string(phase_name(phase)), r.gap, r.energy, r.pristineEnergy};
}

MinimizeOptions minimize_options(const RunConfig& cfg) {
  MinimizeOptions o;
  o.seed = cfg.seed;
  return o;
}

int run_minimize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const double mu = require_mu(cfg);
  const MinimizeOptions opts = minimize_options(cfg);
  const MinimizerResult r = minimize_energy(mu, make_grid(Zone::B6, cfg.gridN), opts);
  if (format_or(cfg, OutputFormat::Csv) == OutputFormat::Csv) {
    Table{kScanColumns, {scan_row(mu, r, phase_of(r, opts))}}.write(out, OutputFormat::Csv);
  } else {
    json j;
    j["mu"] = Table::rounded(mu);
    j["t"] = Table::rounded(r.cfg.t);
    j["u"] = Table::rounded(r.cfg.u);
    j["v"] = Table::rounded(r.cfg.v);
    j["class"] = std::string(phase_name(phase_of(r, opts)));
    j["symmetry"] = std::string(symmetry_name(r.symClass));
    j["gap"] = Table::rounded(r.gap);
    j["energy"] = Table::rounded(r.energy);
    j["energy_pristine"] = Table::rounded(r.pristineEnergy);
    j["t_pristine"] = Table::rounded(r.pristineT);
    j["energy_cross_check"] = Table::rounded(r.crossCheckEnergy);
    j["iterations"] = r.iterations;
    j["converged"] = r.converged;
    j["grid_n"] = cfg.gridN;
    out << j.dump(2) << '\n';
  }
  if (!r.converged) {
    err << "minimize: no convergence"
        << (r.crossCheckAgrees ? "" : " (3D cross-check disagrees with the Kekule slice)") << '\n';
    return 2;
  }
  return 0;
}

int run_phase_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.muRange) {
    throw UsageError("phase-scan needs --mu-range FROM:TO:STEPS");
  }
  MinimizeOptions opts = minimize_options(cfg);
  opts.crossCheck3d = cfg.crossCheck;
  const MuRange& r = *cfg.muRange;
  const PhaseScan scan = phase_scan(r.from, r.to, r.steps, make_grid(Zone::B6, cfg.gridN), opts);
  Table t{kScanColumns, {}};
  for (const auto& p : scan.points) {
    t.rows.push_back(scan_row(p.mu, p.result, p.phase));
  }
  t.write(out, format_or(cfg, OutputFormat::Csv));
  for (const auto& w : scan.warnings) {
    err << "warning: " << w << '\n';
  }
  return 0;
}

int run_critical(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Estimate muc = mu_c(make_grid(Zone::B6, cfg.gridN));
  const Estimate mucp = mu_c_prime_bound(make_grid(Zone::B2, cfg.gridN));
  if (format_or(cfg, OutputFormat::Json) == OutputFormat::Json) {
    json j;
    j["mu_c"] = Table::rounded(muc.value);
    j["mu_c_prime_bound"] = Table::rounded(mucp.value);
    j["grid_n"] = cfg.gridN;
    j["err_mu_c"] = Table::rounded(muc.error);
    j["err_mu_c_prime"] = Table::rounded(mucp.error);
    out << j.dump(2) << '\n';
  } else {
    Table{{"mu_c", "mu_c_prime_bound", "grid_n", "err_mu_c", "err_mu_c_prime"},
          {{muc.value, mucp.value, static_cast<long long>(cfg.gridN), muc.error, mucp.error}}}
        .write(out, OutputFormat::Csv);
  }
  if (!(muc.value < mucp.value)) {
    err << "critical: mu_c is not below the mu_c' bound on this grid\n";
    return 2;
  }
  return 0;
}

int run_verify_command(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions vo;
  vo.seed = cfg.seed;
  vo.gridN = cfg.gridN;
  vo.injectZTildeFault = cfg.injectZTildeFault;
  const VerifyReport rep = run_verify(vo);
  int failed = 0;
  for (const auto& s : rep.suites) {
    out << (s.pass ? "PASS " : "FAIL ") << s.name << ": " << s.detail << '\n';
    failed += s.pass ? 0 : 1;
  }
  if (failed == 0) {
    out << "all " << rep.suites.size() << " suites passed\n";
    return 0;
  }
  out << failed << " of " << rep.suites.size() << " suites failed\n";
  return 2;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::Bands:
      bands_table(cfg).write(out, format_or(cfg, OutputFormat::Csv));
      return 0;
    case Command::Kagome:
      kagome_table(cfg).write(out, format_or(cfg, OutputFormat::Csv));
      return 0;
    case Command::Energy:
      energy_table(cfg).write(out, format_or(cfg, OutputFormat::Csv));
      return 0;
    case Command::Minimize:
      return run_minimize(cfg, out, err);
    case Command::PhaseScan:
      return run_phase_scan(cfg, out, err);
    case Command::Critical:
      return run_critical(cfg, out, err);
    case Command::Verify:
      return run_verify_command(cfg, out);
  }
  return 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.gridN < 8) {
      throw UsageError("--grid must be at least 8");
    }
    set_worker_threads(resolve_threads(config.threads));
    if (config.outputPath.empty()) {
      return dispatch(config, out, err);
    }
    std::ostringstream buffer;
    const int code = dispatch(config, buffer, err);
    std::ofstream file(config.outputPath, std::ios::binary);
    if (!file) {
      err << "cannot open " << config.outputPath << " for writing\n";
      return 1;
    }
    file << buffer.str();
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 2;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kekulé distortion of graphene: bands, energies, minimizers and critical rigidity"};
  app.require_subcommand(1, 1);

  RunConfig cfg;
  std::string tuv_text;
  std::string range_text;
  std::string format_text;
  int threads = -1;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--grid", cfg.gridN, "k-grid points per axis (>= 8)")->check(CLI::Range(8, 1 << 14));
    sub->add_option("--out", cfg.outputPath, "write the report to this file");
    sub->add_option("--format", format_text, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", cfg.seed, "seed for multistarts and random checks");
    sub->add_option("--threads", threads, "worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);
  };
  auto with_tuv = [&](CLI::App* sub) { sub->add_option("--tuv", tuv_text, "hopping amplitudes t,u,v"); };
  auto with_mu = [&](CLI::App* sub) { sub->add_option("--mu", cfg.mu, "rigidity mu > 0"); };

  const std::vector<std::pair<Command, CLI::App*>> subs{
      {Command::Bands, app.add_subcommand("bands", "bands of T(k) along Gamma-K-M-Gamma of B6")},
      {Command::Energy, app.add_subcommand("energy", "energy per atom of a configuration")},
      {Command::Minimize, app.add_subcommand("minimize", "minimizer of the energy at fixed mu")},
      {Command::PhaseScan, app.add_subcommand("phase-scan", "minimizers over a range of mu")},
      {Command::Critical, app.add_subcommand("critical", "critical rigidity mu_c and the mu_c' bound")},
      {Command::Kagome, app.add_subcommand("kagome", "Kagome bands along Gamma-K-M-Gamma of B2")},
      {Command::Verify, app.add_subcommand("verify", "cross-module invariant suites")},
  };
  for (const auto& [cmd, sub] : subs) {
    common(sub);
    if (cmd == Command::Bands || cmd == Command::Kagome) {
      sub->add_option("--path-points", cfg.pathPoints, "points per path segment")->check(CLI::Range(1, 100000));
    }
  }
  with_tuv(subs[0].second);
  with_tuv(subs[1].second);
  with_mu(subs[1].second);
  with_mu(subs[2].second);
  subs[3].second->add_option("--mu-range", range_text, "FROM:TO:STEPS")->required();
  subs[3].second->add_flag("--cross-check", cfg.crossCheck, "repeat each minimization in all three amplitudes");
  subs[6].second->add_flag("--inject-ztilde-fault", cfg.injectZTildeFault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    for (const auto& [cmd, sub] : subs) {
      if (sub->parsed()) {
        cfg.command = cmd;
      }
    }
    if (!tuv_text.empty()) {
      cfg.tuv = parse_tuv(tuv_text);
    }
    if (!range_text.empty()) {
      cfg.muRange = parse_mu_range(range_text);
    }
    if (!format_text.empty()) {
      cfg.format = format_text == "json" ? OutputFormat::Json : OutputFormat::Csv;
    }
    if (threads >= 0) {
      cfg.threads = threads;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return run(cfg, out, err);
}

}  // namespace kekulattice::cli
