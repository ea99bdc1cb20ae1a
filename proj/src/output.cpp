#include "cpvdw/output.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>

namespace cpvdw::output {

using nlohmann::json;
using potentials::PotentialCurve;

std::string_view engine_version() { return "cpvdw 0.1.0"; }

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

bool is_geometric(const std::vector<double> &d) {
  if (d.size() < 3)
    return true;
  const double ratio = d[1] / d[0];
  for (std::size_t i = 1; i + 1 < d.size(); ++i)
    if (std::abs(d[i + 1] / d[i] / ratio - 1.0) > 1e-9)
      return false;
  return true;
}

std::string grid_text(const std::vector<double> &d) {
  if (d.empty())
    return "empty";
  return format_double(d.front()) + ":" + format_double(d.back()) + ":" +
         std::to_string(d.size()) + (is_geometric(d) ? " geometric" : " linear");
}

std::string labels(const PotentialCurve &c) {
  std::string s;
  for (std::size_t i = 0; i < c.atom_labels.size(); ++i)
    s += (i ? "," : "") + c.atom_labels[i];
  return s;
}

void metadata_lines(std::ostream &out, const PotentialCurve &c) {
  out << "# engine: " << engine_version() << '\n';
  out << "# geometry: " << potentials::to_string(c.geometry) << '\n';
  if (c.plate)
    out << "# plate: " << green::to_string(*c.plate) << '\n';
  out << "# method: " << potentials::to_string(c.method) << '\n';
  out << "# units: " << units::to_string(c.unit_system) << '\n';
  out << "# rel_tol: " << format_double(c.tolerances.rel_tol) << '\n';
  out << "# grid: " << grid_text(c.distances) << '\n';
  out << "# atoms: " << labels(c) << '\n';
}

json metadata_json(const PotentialCurve &c) {
  json m;
  m["engine"] = engine_version();
  m["geometry"] = potentials::to_string(c.geometry);
  if (c.plate)
    m["plate"] = green::to_string(*c.plate);
  m["method"] = potentials::to_string(c.method);
  m["units"] = units::to_string(c.unit_system);
  m["rel_tol"] = c.tolerances.rel_tol;
  m["grid"] = grid_text(c.distances);
  m["atoms"] = c.atom_labels;
  return m;
}

json optional_number(const std::optional<double> &v) {
  return v ? json(*v) : json(nullptr);
}

} // namespace

void write_curve_csv(std::ostream &out, const PotentialCurve &curve) {
  metadata_lines(out, curve);
  out << "distance";
  for (const auto &ch : curve.channels)
    out << ",channel:" << potentials::name(ch);
  out << ",total\n";
  for (std::size_t i = 0; i < curve.distances.size(); ++i) {
    out << format_double(curve.distances[i]);
    for (const auto &series : curve.values)
      out << ',' << format_double(series[i]);
    out << ',' << format_double(curve.total[i]) << '\n';
  }
}

void write_curve_json(std::ostream &out, const PotentialCurve &curve) {
  json j;
  j["metadata"] = metadata_json(curve);
  j["distances"] = curve.distances;
  json channels = json::object();
  for (std::size_t c = 0; c < curve.channels.size(); ++c)
    channels[potentials::name(curve.channels[c])] = curve.values[c];
  j["channels"] = channels;
  j["total"] = curve.total;
  out << j.dump(2) << '\n';
}

void write_slopes_csv(std::ostream &out, const asymptotics::SlopeProfile &p,
                      const PotentialCurve &source,
                      const std::string &channel) {
  metadata_lines(out, source);
  out << "# channel: " << channel << '\n';
  out << "distance,slope,sign\n";
  for (std::size_t i = 0; i < p.distances.size(); ++i)
    out << format_double(p.distances[i]) << ','
        << (p.exponent[i] ? format_double(*p.exponent[i]) : "nan") << ','
        << p.sign[i] << '\n';
}

void write_slopes_json(std::ostream &out, const asymptotics::SlopeProfile &p,
                       const PotentialCurve &source,
                       const std::string &channel) {
  json j;
  j["metadata"] = metadata_json(source);
  j["metadata"]["channel"] = channel;
  json rows = json::array();
  for (std::size_t i = 0; i < p.distances.size(); ++i)
    rows.push_back({{"distance", p.distances[i]},
                    {"slope", optional_number(p.exponent[i])},
                    {"sign", p.sign[i]}});
  j["slopes"] = rows;
  out << j.dump(2) << '\n';
}

namespace {

const char *regime_text(const asymptotics::Claim &c) {
  if (!c.regime)
    return "all";
  return *c.regime == potentials::Regime::nonretarded ? "nonretarded"
                                                       : "retarded";
}

std::string claim_text(const asymptotics::Claim &c) {
  return std::string(c.sign > 0 ? "+" : "-") + "1/r^" + std::to_string(c.power);
}

void table_block(std::ostream &out, const char *title,
                 const std::vector<asymptotics::TableEntry> &entries,
                 const std::vector<asymptotics::ClaimResult> &results) {
  out << title << '\n';
  char line[256];
  std::snprintf(line, sizeof line, "  %-36s %-12s %-10s %-9s %-8s %-10s %s\n",
                "entry", "regime", "expected", "distance", "sign", "slope",
                "result");
  out << line;
  for (const auto &r : results) {
    std::snprintf(line, sizeof line,
                  "  %-36s %-12s %-10s %-9.3g %-8s %-10.5f %s\n",
                  asymptotics::describe(entries[r.entry]).c_str(),
                  regime_text(r.claim), claim_text(r.claim).c_str(), r.distance,
                  r.measured_sign > 0 ? "+" : (r.measured_sign < 0 ? "-" : "0"),
                  r.measured_slope, r.passed ? "PASS" : "FAIL");
    out << line;
  }
}

json results_json(const std::vector<asymptotics::TableEntry> &entries,
                  const std::vector<asymptotics::ClaimResult> &results) {
  json cells = json::array();
  for (const auto &r : results) {
    const auto &e = entries[r.entry];
    json cell;
    cell["entry"] = asymptotics::describe(e);
    cell["channel"] = potentials::name(e.channel);
    if (e.plate)
      cell["plate"] = green::to_string(*e.plate);
    cell["regime"] = regime_text(r.claim);
    cell["expected_sign"] = r.claim.sign;
    cell["expected_power"] = r.claim.power;
    cell["distance"] = r.distance;
    cell["measured_sign"] = r.measured_sign;
    cell["measured_slope"] = std::isfinite(r.measured_slope)
                                 ? json(r.measured_slope)
                                 : json(nullptr);
    cell["passed"] = r.passed;
    cells.push_back(cell);
  }
  return cells;
}

} // namespace

void write_tables_text(std::ostream &out,
                       const asymptotics::TableReport &report) {
  table_block(out, "Single atom at a perfect mirror", report.mirror_entries,
              report.mirror_results);
  out << '\n';
  table_block(out, "Atom pair in free space", report.pair_entries,
              report.pair_results);
  out << '\n' << (report.all_passed() ? "all cells PASS" : "some cells FAIL")
      << '\n';
}

void write_tables_json(std::ostream &out,
                       const asymptotics::TableReport &report,
                       const potentials::EvalContext &ctx) {
  json j;
  j["metadata"] = {{"engine", engine_version()},
                   {"units", units::to_string(ctx.system)},
                   {"rel_tol", ctx.quadrature.rel_tol},
                   {"slope_tolerance", asymptotics::slope_tolerance}};
  j["mirror"] = results_json(report.mirror_entries, report.mirror_results);
  j["pair"] = results_json(report.pair_entries, report.pair_results);
  j["all_passed"] = report.all_passed();
  out << j.dump(2) << '\n';
}

} // namespace cpvdw::output
