#include "mrspec/cli.hpp"

#include "mrspec/errors.hpp"
#include "mrspec/oracle.hpp"
#include "mrspec/potential.hpp"
#include "mrspec/spectrum.hpp"
#include "mrspec/tables.hpp"
#include "mrspec/units.hpp"
#include "mrspec/wavefunction.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

namespace mrspec::cli {

std::string format_fixed(double value, int precision) {
  if (std::isnan(value))
    return "nan";
  if (std::isinf(value))
    return value > 0 ? "inf" : "-inf";
  char buf[512];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, precision);
  if (ec != std::errc{})
    return "nan";
  std::string s(buf, ptr);
  // "-0.0000000" reads badly in tables.
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos)
    s.erase(0, 1);
  return s;
}

std::string format_record(const std::vector<std::string>& fields, char sep) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0)
      line += sep;
    const auto& f = fields[i];
    if (f.find_first_of(std::string{sep, '"', '\n', '\r'}) != std::string::npos) {
      line += '"';
      for (char c : f) {
        if (c == '"')
          line += '"';
        line += c;
      }
      line += '"';
    } else {
      line += f;
    }
  }
  line += '\n';
  return line;
}

namespace {

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class StrictFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string path;
  std::string format = "csv";
  int precision = 7;

  char sep() const { return format == "tsv" ? '\t' : ','; }
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("-o,--output", o.path, "Write data to this file instead of stdout");
  cmd->add_option("--format", o.format, "csv or tsv")
      ->check(CLI::IsMember({"csv", "tsv"}))
      ->capture_default_str();
  cmd->add_option("--precision", o.precision, "Decimal digits of numeric cells")
      ->check(CLI::Range(6, 12))
      ->capture_default_str();
}

// Collects records and writes them in one go, so a failing command leaves no
// half-written file behind.
class Sink {
public:
  Sink(const OutputOptions& o, std::ostream& fallback) : opts_(o), fallback_(fallback) {}

  void record(const std::vector<std::string>& fields) { buffer_ += format_record(fields, opts_.sep()); }
  std::string num(double v) const { return format_fixed(v, opts_.precision); }

  void flush() {
    if (opts_.path.empty()) {
      fallback_ << buffer_;
      fallback_.flush();
      return;
    }
    std::ofstream file(opts_.path, std::ios::binary | std::ios::trunc);
    if (!file)
      throw UsageError("cannot open output file " + opts_.path);
    file << buffer_;
  }

private:
  const OutputOptions& opts_;
  std::ostream& fallback_;
  std::string buffer_;
};

// Potential parameters and unit system as given on the command line.
struct PhysicsOptions {
  double alpha = 0.0;
  std::optional<double> inv_b;
  std::optional<double> b;
  std::string A = "2b";
  std::optional<double> Z;
  std::string molecule;
  std::string units = "atomic";
  std::optional<double> hbar;
  std::optional<double> mu;
};

void add_physics_options(CLI::App* cmd, PhysicsOptions& p) {
  cmd->add_option("--alpha", p.alpha, "Dimensionless alpha")->required();
  auto* ib = cmd->add_option("--inv-b", p.inv_b, "Screening parameter 1/b");
  auto* bb = cmd->add_option("--b", p.b, "Screening length b");
  ib->excludes(bb);
  auto* a = cmd->add_option("--A", p.A, "Coupling A: a number or the token 2b")->capture_default_str();
  auto* z = cmd->add_option("--Z", p.Z,
                            "Hulthen charge: sets A from A hbar^2/(2 mu b^2) = Z e^2 / b");
  z->excludes(a);
  cmd->add_option("--molecule", p.molecule, "Molecular preset (eV, pm) from the registry");
  cmd->add_option("--units", p.units, "atomic, hydrogen or custom")
      ->check(CLI::IsMember({"atomic", "hydrogen", "custom"}))
      ->capture_default_str();
  cmd->add_option("--hbar", p.hbar, "hbar for --units custom");
  cmd->add_option("--mu", p.mu, "Reduced mass for --units custom");
}

double resolve_b(const PhysicsOptions& p) {
  if (p.inv_b) {
    if (!(*p.inv_b > 0.0))
      throw UsageError("--inv-b must be positive");
    return 1.0 / *p.inv_b;
  }
  if (p.b) {
    if (!(*p.b > 0.0))
      throw UsageError("--b must be positive");
    return *p.b;
  }
  throw UsageError("one of --inv-b or --b is required");
}

UnitSystem resolve_units(const PhysicsOptions& p) {
  if (!p.molecule.empty()) {
    const auto reg = MoleculeRegistry::from_environment();
    const auto& m = reg.lookup(p.molecule);
    return UnitSystem::molecular(m.reduced_mass_amu, m.name);
  }
  if (p.units == "hydrogen")
    return UnitSystem::hydrogen();
  if (p.units == "custom") {
    if (!p.hbar || !p.mu)
      throw UsageError("--units custom needs --hbar and --mu");
    return UnitSystem::custom(*p.hbar, *p.mu);
  }
  return UnitSystem::atomic();
}

double resolve_A(const std::string& text, double b) {
  if (text == "2b")
    return 2.0 * b;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value))
    throw UsageError("--A expects a number or 2b, got '" + text + "'");
  return value;
}

struct Physics {
  PotentialParams params;
  UnitSystem units;
};

Physics resolve(const PhysicsOptions& p) {
  Physics out;
  out.units = resolve_units(p);
  out.params.alpha = p.alpha;
  out.params.b = resolve_b(p);
  out.params.A = p.Z ? hulthen_coupling(*p.Z, 1.0 / out.params.b, out.units)
                     : resolve_A(p.A, out.params.b);
  out.params.validate();
  return out;
}

std::vector<QuantumState> parse_states(const std::vector<std::string>& labels) {
  std::vector<QuantumState> states;
  for (const auto& text : labels) {
    // Accept comma-separated lists as well as repeated flags.
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty())
        states.push_back(QuantumState::parse(item));
    }
  }
  return states;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumOptions {
  PhysicsOptions physics;
  OutputOptions output;
  std::vector<std::string> states;
  int l_max = -1;
};

void cmd_spectrum(const SpectrumOptions& o, std::ostream& out) {
  const auto [params, units] = resolve(o.physics);
  std::vector<QuantumState> states = parse_states(o.states);
  if (states.empty() && o.l_max >= 0) {
    for (const auto& se : enumerate_bound_states(params, units, o.l_max))
      states.push_back(se.state);
  }

  Sink sink(o.output, out);
  sink.record({"state", "n", "l", "epsilon", "energy", "unit", "status"});
  for (const auto& s : states) {
    const bool bound = is_bound(params, s);
    // The formula still yields a number past threshold; it is not a level.
    sink.record({s.label(), std::to_string(s.n), std::to_string(s.l),
                 sink.num(epsilon_raw(params, s)), bound ? sink.num(energy(params, units, s)) : "",
                 units.energy_unit, bound ? "bound" : "unbound"});
  }
  sink.flush();
}

// ---------------------------------------------------------------- table

struct TableOptions {
  OutputOptions output;
  std::string which = "table1";
  std::vector<std::string> molecules;
  bool with_oracle = false;
  int grid_points = 20000;
};

std::string alpha_tag(double alpha) { return alpha == 0.0 ? "0_1" : shortest(alpha); }

// Numerical eigenvalues keyed by (alpha, 1/b, state, scheme); each state gets
// a grid sized to its own decay length.
class OracleCache {
public:
  OracleCache(UnitSystem units, int grid_points) : units_(std::move(units)), grid_(grid_points) {}

  std::optional<double> level(double alpha, double inv_b, const QuantumState& s,
                              const CentrifugalScheme& scheme) {
    const auto key = std::make_tuple(alpha, inv_b, s.n, s.l, std::string(scheme.name()));
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      const double b = 1.0 / inv_b;
      const PotentialParams p{2.0 * b, alpha, b};
      auto rp = default_problem(p, units_, s.l, scheme, s.n);
      rp.grid_points = grid_;
      it = cache_.emplace(key, solve(rp, s.n + 1)).first;
    }
    const auto& spec = it->second;
    if (static_cast<std::size_t>(s.n) >= spec.eigenvalues.size())
      return std::nullopt;
    return spec.eigenvalues[static_cast<std::size_t>(s.n)];
  }

private:
  UnitSystem units_;
  int grid_;
  std::map<std::tuple<double, double, int, int, std::string>, NumericalSpectrum> cache_;
};

void cmd_table(const TableOptions& o, std::ostream& out) {
  auto spec = TableSpec::defaults(parse_table_id(o.which));
  if (!o.molecules.empty()) {
    if (spec.which == TableId::table1)
      throw UsageError("table1 is in atomic units and takes no --molecule");
    spec.molecules = o.molecules;
  }

  struct Group {
    std::string name;
    UnitSystem units;
  };
  std::vector<Group> groups;
  if (spec.which == TableId::table1) {
    groups.push_back({"", UnitSystem::atomic()});
  } else {
    const auto reg = MoleculeRegistry::from_environment();
    for (const auto& name : spec.molecules) {
      const auto& m = reg.lookup(name);
      groups.push_back({m.name, UnitSystem::molecular(m.reduced_mass_amu, m.name)});
    }
  }

  const std::vector<CentrifugalScheme> schemes = {CentrifugalScheme::greene_aldrich(),
                                                  CentrifugalScheme::exact()};

  Sink sink(o.output, out);
  std::vector<std::string> header = {"state", "inv_b"};
  for (const auto& g : groups) {
    for (double alpha : spec.alphas) {
      const auto prefix = (g.name.empty() ? std::string() : g.name + "_") + "alpha_" + alpha_tag(alpha);
      header.push_back(prefix + "_present");
      if (o.with_oracle)
        for (const auto& s : schemes)
          header.push_back(prefix + "_oracle_" + std::string(s.name()));
    }
  }
  sink.record(header);

  std::vector<OracleCache> caches;
  for (const auto& g : groups)
    caches.emplace_back(g.units, o.grid_points);

  for (const auto& row : spec.rows) {
    const auto s = QuantumState::parse(row.state);
    const double b = 1.0 / row.inv_b;
    std::vector<std::string> fields = {row.state, format_fixed(row.inv_b, 3)};
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      for (double alpha : spec.alphas) {
        const PotentialParams p{2.0 * b, alpha, b};
        fields.push_back(is_bound(p, s) ? sink.num(energy(p, groups[gi].units, s)) : "unbound");
        if (!o.with_oracle)
          continue;
        for (const auto& scheme : schemes) {
          const auto e = caches[gi].level(alpha, row.inv_b, s, scheme);
          fields.push_back(e ? sink.num(*e) : "unbound");
        }
      }
    }
    sink.record(fields);
  }
  sink.flush();
}

// ---------------------------------------------------------------- figure-data

struct FigureOptions {
  OutputOptions output;
  std::string which = "fig1";
  double r_min = 0.05;
  double r_max = 20.0;
  int points = 400;
  double delta = 0.1;
  double shift_c0 = 1.0 / 12.0;
};

void cmd_figure_data(const FigureOptions& o, std::ostream& out) {
  if (!(o.r_min > 0.0) || !(o.r_max > o.r_min))
    throw UsageError("figure grid needs 0 < r-min < r-max");
  if (o.points < 2)
    throw UsageError("figure grid needs at least 2 points");

  const auto grid_r = [&](int i) {
    return o.r_min + (o.r_max - o.r_min) * static_cast<double>(i) / (o.points - 1);
  };
  Sink sink(o.output, out);

  if (o.which == "fig1") {
    const std::vector<double> alphas = {0.75, 1.5};
    const std::vector<double> inv_bs = {0.025, 0.050, 0.100};
    const auto units = UnitSystem::atomic();
    std::vector<std::string> header = {"r"};
    for (double a : alphas)
      for (double ib : inv_bs)
        header.push_back("V_alpha_" + shortest(a) + "_invb_" + format_fixed(ib, 3));
    sink.record(header);
    for (int i = 0; i < o.points; ++i) {
      const double r = grid_r(i);
      std::vector<std::string> fields = {sink.num(r)};
      for (double a : alphas)
        for (double ib : inv_bs) {
          const double b = 1.0 / ib;
          fields.push_back(sink.num(mr_value({2.0 * b, a, b}, units, r)));
        }
      sink.record(fields);
    }
  } else if (o.which == "fig2") {
    if (!(o.delta > 0.0))
      throw UsageError("--delta must be positive");
    const double b = 1.0 / o.delta;
    sink.record({"r", "inv_r2", "greene_aldrich", "shifted"});
    for (int i = 0; i < o.points; ++i) {
      const double r = grid_r(i);
      sink.record({sink.num(r), sink.num(centrifugal_term(CentrifugalScheme::exact(), b, r)),
                   sink.num(centrifugal_term(CentrifugalScheme::greene_aldrich(), b, r)),
                   sink.num(centrifugal_term(CentrifugalScheme::shifted(o.shift_c0), b, r))});
    }
  } else {
    throw UsageError("figure must be fig1 or fig2");
  }
  sink.flush();
}

// ---------------------------------------------------------------- compare

struct CompareOptions {
  PhysicsOptions physics;
  OutputOptions output;
  std::vector<std::string> states;
  std::string block;
  std::string scheme = "both";
  double tolerance = 1e-6;
  int grid_points = 20000;
  bool strict = false;
};

std::vector<CentrifugalScheme> schemes_for(const std::string& name) {
  if (name == "both")
    return {CentrifugalScheme::greene_aldrich(), CentrifugalScheme::exact()};
  return {CentrifugalScheme::parse(name)};
}

int cmd_compare(const CompareOptions& o, std::ostream& out, std::ostream& err) {
  const auto [params, units] = resolve(o.physics);
  auto states = parse_states(o.states);
  if (!o.block.empty()) {
    if (o.block != "table1")
      throw UsageError("--block supports only table1");
    const double ib = 1.0 / params.b;
    for (const auto& row : TableSpec::defaults(TableId::table1).rows)
      if (std::abs(row.inv_b - ib) < 1e-12 * ib)
        states.push_back(QuantumState::parse(row.state));
  }


  Sink sink(o.output, out);
  sink.record({"state", "n", "l", "scheme", "analytic", "numeric", "abs_dev", "rel_dev", "converged",
               "status"});
  bool failed = false;
  for (const auto& scheme : schemes_for(o.scheme)) {
    const bool gated = scheme.kind == CentrifugalScheme::Kind::greene_aldrich;
    // One solve per state: the outer radius follows that state's own decay
    // length, which keeps the step fine enough for the deeper levels.
    std::map<std::pair<int, int>, ComparisonEntry> by_state;
    for (const auto& s : states) {
      if (!is_bound(params, s) || by_state.count({s.n, s.l}))
        continue;
      auto rp = default_problem(params, units, s.l, scheme, s.n);
      rp.grid_points = o.grid_points;
      const auto numeric = solve(rp, s.n + 1);
      std::vector<StateEnergy> analytic;
      for (int n = 0; n < static_cast<int>(numeric.eigenvalues.size()); ++n)
        analytic.push_back({{n, s.l}, energy(params, units, {n, s.l})});
      for (const auto& e : compare(analytic, numeric).entries)
        if (e.state == s)
          by_state[{s.n, s.l}] = e;
    }

    double max_dev = 0.0;
    for (const auto& s : states) {
      if (!is_bound(params, s)) {
        sink.record({s.label(), std::to_string(s.n), std::to_string(s.l), std::string(scheme.name()),
                     "", "", "", "", "", "unbound"});
        continue;
      }
      const auto it = by_state.find({s.n, s.l});
      if (it == by_state.end()) {
        sink.record({s.label(), std::to_string(s.n), std::to_string(s.l), std::string(scheme.name()),
                     sink.num(energy(params, units, s)), "", "", "", "", "missing"});
        failed = failed || gated;
        continue;
      }
      const auto& e = it->second;
      max_dev = std::max(max_dev, e.abs_dev);
      std::string status = "info";
      if (!e.converged)
        status = "unconverged";
      else if (gated)
        status = e.abs_dev < o.tolerance ? "pass" : "fail";
      if (status == "unconverged" || status == "fail")
        failed = true;
      sink.record({s.label(), std::to_string(s.n), std::to_string(s.l), std::string(scheme.name()),
                   sink.num(e.analytic), sink.num(e.numeric), format_fixed(e.abs_dev, 12),
                   format_fixed(e.rel_dev, 12), e.converged ? "yes" : "no", status});
    }
    err << scheme.name() << ": " << states.size() << " states, max |dE| = " << shortest(max_dev)
        << ' ' << units.energy_unit << (gated ? " (tolerance " + shortest(o.tolerance) + ")" : "")
        << '\n';
  }
  sink.flush();
  if (failed && o.strict)
    throw StrictFailure("comparison failed under --strict");
  return kSuccess;
}

// ---------------------------------------------------------------- wavefunction

struct WavefunctionOptions {
  PhysicsOptions physics;
  OutputOptions output;
  std::string state;
  std::optional<double> r_max;
  int points = 500;
};

void cmd_wavefunction(const WavefunctionOptions& o, std::ostream& out) {
  const auto [params, units] = resolve(o.physics);
  const auto s = QuantumState::parse(o.state);
  const auto w = make_radial_wavefunction(params, s);
  const double r_max = o.r_max.value_or(60.0 * params.b / w.epsilon);
  if (!(r_max > 0.0))
    throw UsageError("--r-max must be positive");
  if (o.points < 2)
    throw UsageError("--points must be at least 2");

  Sink sink(o.output, out);
  sink.record({"r", "R", "R2"});
  for (int i = 0; i < o.points; ++i) {
    const double r = r_max * static_cast<double>(i) / (o.points - 1);
    const double R = radial_value(w, r);
    sink.record({sink.num(r), sink.num(R), sink.num(R * R)});
  }
  sink.flush();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Manning-Rosen bound-state spectra, wavefunctions and table reproduction", "mrspec"};
  app.require_subcommand(1);

  SpectrumOptions spectrum;
  auto* sp = app.add_subcommand("spectrum", "Closed-form energies for a list of states");
  add_physics_options(sp, spectrum.physics);
  add_output_options(sp, spectrum.output);
  sp->add_option("--state", spectrum.states, "Spectroscopic label, e.g. 2p (repeatable)");
  sp->add_option("--l-max", spectrum.l_max, "Without --state: list every bound state with l <= l-max");

  TableOptions table;
  auto* tb = app.add_subcommand("table", "Reproduce a published energy table as CSV");
  add_output_options(tb, table.output);
  tb->add_option("which", table.which, "table1, table2 or table3")->required();
  tb->add_option("--molecule", table.molecules, "Override the table's molecules");
  tb->add_flag("--with-oracle", table.with_oracle, "Add numerical greene_aldrich and exact columns");
  tb->add_option("--grid-points", table.grid_points, "Oracle grid intervals")
      ->check(CLI::Range(1000, 10000000))
      ->capture_default_str();

  FigureOptions figure;
  auto* fg = app.add_subcommand("figure-data", "Data behind the potential and centrifugal plots");
  add_output_options(fg, figure.output);
  fg->add_option("which", figure.which, "fig1 or fig2")->required();
  fg->add_option("--r-min", figure.r_min)->capture_default_str();
  fg->add_option("--r-max", figure.r_max)->capture_default_str();
  fg->add_option("--points", figure.points)->capture_default_str();
  fg->add_option("--delta", figure.delta, "fig2 screening parameter")->capture_default_str();
  fg->add_option("--shift-c0", figure.shift_c0, "fig2 shift constant")->capture_default_str();

  CompareOptions cmp;
  auto* cp = app.add_subcommand("compare", "Closed form against the numerical radial solver");
  add_physics_options(cp, cmp.physics);
  add_output_options(cp, cmp.output);
  cp->add_option("--state", cmp.states, "Spectroscopic label (repeatable)");
  cp->add_option("--block", cmp.block, "table1: add the states published at the chosen 1/b");
  cp->add_option("--scheme", cmp.scheme, "both, greene_aldrich, exact or shifted")
      ->capture_default_str();
  cp->add_option("--tol", cmp.tolerance, "Pass threshold for the greene_aldrich scheme")
      ->capture_default_str();
  cp->add_option("--grid-points", cmp.grid_points)->check(CLI::Range(1000, 10000000))->capture_default_str();
  cp->add_flag("--strict", cmp.strict, "Exit 3 if any gated comparison fails");

  WavefunctionOptions wf;
  auto* wv = app.add_subcommand("wavefunction", "Sample a normalized radial wavefunction");
  add_physics_options(wv, wf.physics);
  add_output_options(wv, wf.output);
  wv->add_option("--state", wf.state, "Spectroscopic label")->required();
  wv->add_option("--r-max", wf.r_max, "Outer radius (default 60 b / epsilon)");
  wv->add_option("--points", wf.points)->capture_default_str();

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("mrspec");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store)
    argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "mrspec: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (sp->parsed())
      cmd_spectrum(spectrum, out);
    else if (tb->parsed())
      cmd_table(table, out);
    else if (fg->parsed())
      cmd_figure_data(figure, out);
    else if (cp->parsed())
      return cmd_compare(cmp, out, err);
    else if (wv->parsed())
      cmd_wavefunction(wf, out);
    return kSuccess;
  } catch (const StrictFailure& e) {
    err << "mrspec: " << e.what() << '\n';
    return kStrictFailure;
  } catch (const UsageError& e) {
    err << "mrspec: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConfigError& e) {
    err << "mrspec: " << e.what() << '\n';
    return kUsageError;
  } catch (const NotFoundError& e) {
    err << "mrspec: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "mrspec: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "mrspec: " << e.what() << '\n';
    return kComputationError;
  }
}

} // namespace mrspec::cli
