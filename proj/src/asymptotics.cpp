#include "cpvdw/asymptotics.hpp"
#include "cpvdw/errors.hpp"

#include <cmath>
#include <exception>
#include <sstream>

namespace cpvdw::asymptotics {

using potentials::PlateKind;
using potentials::Response;

namespace {

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

void check_geometric(const std::vector<double> &d) {
  if (d.size() < 5)
    throw DomainError("slope profile needs at least 5 grid points");
  potentials::check_grid(d);
  const double ratio = d[1] / d[0];
  for (std::size_t i = 1; i + 1 < d.size(); ++i) {
    const double r = d[i + 1] / d[i];
    if (std::abs(r / ratio - 1.0) > 1e-9)
      throw DomainError("slope profile needs a geometric grid");
  }
}

} // namespace

SlopeProfile log_slope(const std::vector<double> &distances,
                       const std::vector<double> &values) {
  if (values.size() != distances.size())
    throw DomainError("distance and value lists differ in length");
  check_geometric(distances);
  const std::size_t n = distances.size();
  SlopeProfile out;
  out.distances = distances;
  out.exponent.resize(n);
  out.sign.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.sign[i] = sign_of(values[i]);

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i == 0 ? 0 : i - 1;
    const std::size_t hi = i + 1 == n ? n - 1 : i + 1;
    bool usable = true;
    for (std::size_t j = lo; j <= hi; ++j)
      if (out.sign[j] == 0 || out.sign[j] != out.sign[i])
        usable = false;
    if (!usable)
      continue;
    out.exponent[i] = (std::log(std::abs(values[hi])) -
                       std::log(std::abs(values[lo]))) /
                      (std::log(distances[hi]) - std::log(distances[lo]));
  }
  return out;
}

SlopeProfile local_log_slope(const PotentialCurve &curve,
                             const std::optional<Channel> &channel) {
  return log_slope(curve.distances,
                   channel ? curve.series(*channel) : curve.total);
}

std::vector<TableEntry> mirror_table() {
  std::vector<TableEntry> out;
  for (auto plate :
       {PlateKind::perfectly_conducting, PlateKind::infinitely_permeable}) {
    const int s = plate == PlateKind::perfectly_conducting ? 1 : -1;
    out.push_back({Geometry::mirror, plate, {Response::electric, {}},
                   {{Regime::retarded, -s, 4}, {Regime::nonretarded, -s, 3}}});
    out.push_back({Geometry::mirror, plate, {Response::paramagnetic, {}},
                   {{Regime::retarded, s, 4}, {Regime::nonretarded, s, 3}}});
    out.push_back({Geometry::mirror, plate, {Response::diamagnetic, {}},
                   {{std::nullopt, -s, 4}}});
  }
  return out;
}

std::vector<TableEntry> pair_table() {
  std::vector<TableEntry> out;
  for (const auto &ch : potentials::pair_channels()) {
    const Response a = ch.a;
    const Response b = *ch.b;
    TableEntry entry{Geometry::free_pair, std::nullopt, ch, {}};
    if (a == Response::diamagnetic && b == Response::diamagnetic) {
      entry.claims = {{std::nullopt, -1, 7}};
      out.push_back(entry);
      continue;
    }
    const bool mag_a = a != Response::electric;
    const bool mag_b = b != Response::electric;
    // Like kinds attract; electric-magnetic repels, flipped once per
    // diamagnetic partner.
    int sign = mag_a == mag_b ? -1 : 1;
    if ((a == Response::diamagnetic) != (b == Response::diamagnetic))
      sign = -sign;
    int nonret_power;
    if (a == Response::diamagnetic || b == Response::diamagnetic) {
      const Response other = a == Response::diamagnetic ? b : a;
      nonret_power = other == Response::electric ? 5 : 6;
    } else {
      nonret_power = mag_a == mag_b ? 6 : 4;
    }
    entry.claims = {{Regime::retarded, sign, 7},
                    {Regime::nonretarded, sign, nonret_power}};
    out.push_back(entry);
  }
  return out;
}

Fixtures default_fixtures(double hbar) {
  return {response::electric_fixture(hbar, 1.0, 1.0),
          response::paramagnetic_fixture(hbar, 1.0, 1.0),
          response::diamagnetic_fixture(-1.0), 1.0};
}

bool TableReport::all_passed() const {
  for (const auto *list : {&mirror_results, &pair_results})
    for (const auto &r : *list)
      if (!r.passed)
        return false;
  return true;
}

std::string describe(const TableEntry &entry) {
  std::ostringstream s;
  if (entry.geometry == Geometry::mirror)
    s << "mirror/" << green::to_string(*entry.plate) << " atom="
      << potentials::name(entry.channel);
  else
    s << "pair channel=" << potentials::name(entry.channel);
  return s.str();
}

namespace {

const response::AtomModel &fixture_for(Response r, const Fixtures &fx) {
  switch (r) {
  case Response::electric:
    return fx.electric;
  case Response::paramagnetic:
    return fx.paramagnetic;
  case Response::diamagnetic:
    break;
  }
  return fx.diamagnetic;
}

struct Job {
  bool mirror;
  std::size_t entry;
  Claim claim;
  double distance;
};

ClaimResult run(const Job &job, const TableEntry &entry,
                const potentials::EvalContext &ctx, const Fixtures &fx,
                double slope_tol) {
  // Five-point geometric stencil centred on the check distance.
  constexpr double ratio = 1.01;
  std::vector<double> grid;
  for (int k = -2; k <= 2; ++k)
    grid.push_back(job.distance * std::pow(ratio, k));

  const auto &atom_a = fixture_for(entry.channel.a, fx);
  const auto serial = potentials::Execution::serial;
  PotentialCurve curve =
      job.mirror
          ? potentials::mirror_curve(atom_a, grid, *entry.plate, ctx,
                                     serial)
          : potentials::pair_curve(atom_a, fixture_for(*entry.channel.b, fx),
                                   grid, ctx, serial);
  const auto profile = local_log_slope(curve, entry.channel);

  ClaimResult r{job.entry, job.claim, job.distance, std::nan(""), 0, false, ""};
  r.measured_sign = profile.sign[2];
  bool all_signs = true;
  for (int s : profile.sign)
    all_signs = all_signs && s == job.claim.sign;
  if (profile.exponent[2])
    r.measured_slope = *profile.exponent[2];
  const bool slope_ok =
      profile.exponent[2] &&
      std::abs(r.measured_slope + job.claim.power) <= slope_tol;
  r.passed = all_signs && slope_ok;

  std::ostringstream msg;
  msg.precision(6);
  msg << describe(entry) << " regime="
      << (job.claim.regime ? potentials::to_string(*job.claim.regime) : "any")
      << " r=" << job.distance << " expected " << (job.claim.sign > 0 ? '+' : '-')
      << "1/r^" << job.claim.power << ", measured sign "
      << (r.measured_sign > 0 ? '+' : (r.measured_sign < 0 ? '-' : '0'))
      << " slope " << r.measured_slope;
  r.message = msg.str();
  return r;
}

} // namespace

TableReport verify_tables(const potentials::EvalContext &ctx,
                          const Fixtures &fx, double slope_tol,
                          potentials::Execution execution) {
  TableReport report;
  report.mirror_entries = mirror_table();
  report.pair_entries = pair_table();

  // Deep-regime distances in units of c / omega0.
  const double unit = ctx.constants.c / fx.omega0;
  const double nonret = unit / potentials::deep_regime_depth;
  const double ret = unit * potentials::deep_regime_depth;

  std::vector<Job> jobs;
  auto schedule = [&](bool mirror, const std::vector<TableEntry> &entries) {
    for (std::size_t e = 0; e < entries.size(); ++e)
      for (const auto &claim : entries[e].claims) {
        if (!claim.regime) {
          for (double d : {nonret, unit, ret})
            jobs.push_back({mirror, e, claim, d});
        } else {
          jobs.push_back({mirror, e, claim,
                          *claim.regime == Regime::nonretarded ? nonret : ret});
        }
      }
  };
  schedule(true, report.mirror_entries);
  schedule(false, report.pair_entries);

  std::vector<ClaimResult> results(jobs.size());
  std::vector<std::exception_ptr> failures(jobs.size());
  auto body = [&](std::size_t i) {
    try {
      const auto &job = jobs[i];
      const auto &entry = job.mirror ? report.mirror_entries[job.entry]
                                     : report.pair_entries[job.entry];
      results[i] = run(job, entry, ctx, fx, slope_tol);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  };
  const long n = static_cast<long>(jobs.size());
  if (execution == potentials::Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i)
      body(static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < n; ++i)
      body(static_cast<std::size_t>(i));
  }
  for (auto &f : failures)
    if (f)
      std::rethrow_exception(f);

  for (std::size_t i = 0; i < jobs.size(); ++i)
    (jobs[i].mirror ? report.mirror_results : report.pair_results)
        .push_back(results[i]);
  return report;
}

} // namespace cpvdw::asymptotics
