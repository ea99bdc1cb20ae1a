#include "cli.hpp"

#include "cpvdw/asymptotics.hpp"
#include "cpvdw/atom_io.hpp"
#include "cpvdw/curve.hpp"
#include "cpvdw/errors.hpp"
#include "cpvdw/output.hpp"
#include "cpvdw/selftest.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace cpvdw::cli {

namespace {

using potentials::EvalContext;

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int points = 0;
  bool geometric = true;
};

//! min:max:points[:geo|lin]
GridSpec parse_grid(const std::string &text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');)
    parts.push_back(item);
  if (parts.size() != 3 && parts.size() != 4)
    throw ConfigError("--grid expects min:max:points[:geo|lin], got '" + text +
                      "'");
  GridSpec g;
  try {
    std::size_t used = 0;
    g.min = std::stod(parts[0], &used);
    if (used != parts[0].size())
      throw std::invalid_argument(parts[0]);
    g.max = std::stod(parts[1], &used);
    if (used != parts[1].size())
      throw std::invalid_argument(parts[1]);
    g.points = std::stoi(parts[2], &used);
    if (used != parts[2].size())
      throw std::invalid_argument(parts[2]);
  } catch (const std::logic_error &) {
    throw ConfigError("--grid expects numbers in min:max:points, got '" + text +
                      "'");
  }
  if (parts.size() == 4) {
    if (parts[3] == "lin")
      g.geometric = false;
    else if (parts[3] != "geo")
      throw ConfigError("--grid spacing must be geo or lin, got '" + parts[3] +
                        "'");
  }
  return g;
}

struct RunConfig {
  std::string subcommand;
  std::string atom;
  std::string atom_b;
  std::string plate = "conducting";
  std::string grid;
  std::optional<std::string> units;
  double rel_tol = 1e-10;
  std::string format = "csv";
  std::string out_path;
  std::string channel;
  std::optional<double> fixture_beta_d;
};

EvalContext context_for(const RunConfig &cfg, const char *default_units) {
  const auto system = units::parse_unit_system(cfg.units.value_or(default_units));
  if (!(cfg.rel_tol > 0.0 && cfg.rel_tol <= 1e-2))
    throw ConfigError("--rel-tol must lie in (0, 1e-2]");
  return potentials::make_context(system, cfg.rel_tol);
}

std::vector<double> grid_for(const RunConfig &cfg) {
  if (cfg.grid.empty())
    throw ConfigError("--grid min:max:points is required");
  const auto g = parse_grid(cfg.grid);
  return potentials::make_grid(g.min, g.max, g.points, g.geometric);
}

response::AtomModel atom_from(const std::string &path, const char *flag) {
  if (path.empty())
    throw ConfigError(std::string(flag) + " <file> is required");
  return response::load_atom_file(path);
}

potentials::PotentialCurve curve_for(const RunConfig &cfg,
                                     const EvalContext &ctx) {
  const auto grid = grid_for(cfg);
  const auto a = atom_from(cfg.atom, "--atom");
  if (cfg.subcommand == "pair" ||
      (cfg.subcommand == "slopes" && !cfg.atom_b.empty())) {
    const auto b = atom_from(cfg.atom_b, "--atom-b");
    return potentials::pair_curve(a, b, grid, ctx);
  }
  return potentials::mirror_curve(a, grid, green::parse_plate(cfg.plate), ctx);
}

int cmd_curve(const RunConfig &cfg, std::ostream &out) {
  const auto ctx = context_for(cfg, "si");
  const auto curve = curve_for(cfg, ctx);
  if (cfg.format == "json")
    output::write_curve_json(out, curve);
  else
    output::write_curve_csv(out, curve);
  return ok;
}

int cmd_slopes(const RunConfig &cfg, std::ostream &out) {
  const auto ctx = context_for(cfg, "si");
  const auto curve = curve_for(cfg, ctx);
  std::optional<potentials::Channel> channel;
  if (!cfg.channel.empty() && cfg.channel != "total") {
    channel = potentials::parse_channel(cfg.channel);
    if (channel->b.has_value() !=
        (curve.geometry == potentials::Geometry::free_pair))
      throw ConfigError("channel '" + cfg.channel +
                        "' does not match the geometry");
  }
  const auto profile = asymptotics::local_log_slope(curve, channel);
  const std::string label = channel ? potentials::name(*channel) : "total";
  if (cfg.format == "json")
    output::write_slopes_json(out, profile, curve, label);
  else
    output::write_slopes_csv(out, profile, curve, label);
  return ok;
}

int cmd_tables(const RunConfig &cfg, std::ostream &out) {
  const auto ctx = context_for(cfg, "natural");
  auto fixtures = asymptotics::default_fixtures(ctx.constants.hbar);
  if (cfg.fixture_beta_d)
    fixtures.diamagnetic = response::diamagnetic_fixture(*cfg.fixture_beta_d);
  const auto report = asymptotics::verify_tables(ctx, fixtures);
  if (cfg.format == "json")
    output::write_tables_json(out, report, ctx);
  else
    output::write_tables_text(out, report);
  return report.all_passed() ? ok : check_failed;
}

int cmd_selftest(const RunConfig &cfg, std::ostream &out) {
  const auto ctx = context_for(cfg, "natural");
  const auto report = selftest::run(ctx);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["engine"] = output::engine_version();
    j["units"] = "natural";
    j["rel_tol"] = ctx.quadrature.rel_tol;
    for (const auto &c : report.checks)
      j["checks"].push_back({{"name", c.name},
                             {"passed", c.passed},
                             {"worst", c.worst},
                             {"tolerance", c.tolerance},
                             {"detail", c.detail}});
    j["prefactor_verdict"] = report.prefactor_verdict;
    j["all_passed"] = report.all_passed();
    out << j.dump(2) << '\n';
  } else {
    out << output::engine_version() << " self-test (natural units, rel_tol "
        << output::format_double(ctx.quadrature.rel_tol) << ")\n";
    for (const auto &c : report.checks) {
      char line[64];
      std::snprintf(line, sizeof line, "%.3e / %.1e", c.worst, c.tolerance);
      out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  [" << line << "]";
      if (!c.detail.empty())
        out << "  " << c.detail;
      out << '\n';
    }
    out << "mirror prefactor verdict: " << report.prefactor_verdict << '\n';
    out << (report.all_passed() ? "all checks passed" : "some checks FAILED")
        << '\n';
  }
  return report.all_passed() ? ok : check_failed;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Casimir-Polder and van der Waals dispersion potentials of "
               "electric, para- and diamagnetic atoms",
               "cpvdw"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App *sub, bool with_grid) {
    sub->add_option("--units", cfg.units, "Unit system")
        ->check(CLI::IsMember({"si", "natural"}));
    sub->add_option("--rel-tol", cfg.rel_tol, "Quadrature relative tolerance");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out_path, "Output file (default stdout)");
    if (with_grid)
      sub->add_option("--grid", cfg.grid, "min:max:points[:geo|lin]");
  };

  auto *mirror = app.add_subcommand("mirror", "Atom in front of a perfect mirror");
  mirror->add_option("--atom", cfg.atom, "Atom definition file");
  mirror->add_option("--plate", cfg.plate, "Plate kind")
      ->check(CLI::IsMember({"conducting", "permeable"}));
  add_common(mirror, true);

  auto *pair = app.add_subcommand("pair", "Two atoms in free space");
  pair->add_option("--atom", cfg.atom, "Atom A definition file");
  pair->add_option("--atom-b", cfg.atom_b, "Atom B definition file");
  add_common(pair, true);

  auto *slopes = app.add_subcommand(
      "slopes", "Local log-log slopes of a mirror (or, with --atom-b, pair) curve");
  slopes->add_option("--atom", cfg.atom, "Atom (A) definition file");
  slopes->add_option("--atom-b", cfg.atom_b, "Atom B definition file");
  slopes->add_option("--plate", cfg.plate, "Plate kind")
      ->check(CLI::IsMember({"conducting", "permeable"}));
  slopes->add_option("--channel", cfg.channel, "Channel name or 'total'");
  add_common(slopes, true);

  auto *tables = app.add_subcommand("tables", "Check the sign/power tables");
  tables->add_option("--fixture-beta-d", cfg.fixture_beta_d,
                     "Override the diamagnetic fixture (testing)");
  add_common(tables, false);

  auto *self = app.add_subcommand("selftest", "Run the oracle checks");
  add_common(self, false);

  std::vector<const char *> argv{"cpvdw"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  std::ostringstream buffer;
  int code = ok;
  try {
    if (cfg.subcommand == "mirror" || cfg.subcommand == "pair")
      code = cmd_curve(cfg, buffer);
    else if (cfg.subcommand == "slopes")
      code = cmd_slopes(cfg, buffer);
    else if (cfg.subcommand == "tables")
      code = cmd_tables(cfg, buffer);
    else
      code = cmd_selftest(cfg, buffer);
  } catch (const NumericalError &e) {
    err << "numerical failure: " << e.what() << '\n';
    return numerical;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  if (cfg.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << cfg.out_path << "'\n";
      return usage;
    }
    file << buffer.str();
  }
  return code;
}

} // namespace cpvdw::cli
