#include "cpvdw/selftest.hpp"
#include "cpvdw/asymptotics.hpp"
#include "cpvdw/curve.hpp"
#include "cpvdw/green.hpp"
#include "cpvdw/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace cpvdw::selftest {

namespace {

using potentials::Channel;
using potentials::PlateKind;
using potentials::Regime;
using potentials::Response;

constexpr double pi = std::numbers::pi;

double rel(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

class Collector {
public:
  explicit Collector(double rel_tol) : rel_tol_(rel_tol) {}

  // Stated tolerance, widened when the quadrature itself was loosened.
  double value_tol(double stated) const {
    return std::max(stated, 10.0 * rel_tol_);
  }

  void add(std::string name, double worst, double tol, std::string detail = {}) {
    report.checks.push_back(
        {std::move(name), worst <= tol, worst, tol, std::move(detail)});
  }

  void add_bool(std::string name, bool ok, std::string detail = {}) {
    report.checks.push_back(
        {std::move(name), ok, ok ? 0.0 : 1.0, 0.0, std::move(detail)});
  }

  Report report;

private:
  double rel_tol_;
};

void polynomial_identities(Collector &out) {
  std::mt19937_64 rng(20240101);
  std::uniform_real_distribution<double> dist(0.0, 10.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double x = dist(rng);
    const auto s = green::fg(x);
    const double f = s.coeff_iso, g = s.coeff_rad;
    const double from_fg = 0.5 * (3 * f * f - 2 * f * g + g * g) * std::exp(-2 * x);
    worst = std::max(worst, rel(green::h1(x), from_fg));
    worst = std::max(worst, rel(green::h2(x), (1 + x) * (1 + x) * std::exp(-2 * x)));
  }
  out.add("h1/h2 polynomial identities (100 random x)", worst, 1e-12);
}

void trace_kernels(Collector &out) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> pos(0.05, 5.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    oracle::Vec3 dir{unit(rng), unit(rng), unit(rng)};
    const double len = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
    const double l = pos(rng);
    const double xi = pos(rng);
    const oracle::Vec3 lv{dir[0] / len * l, dir[1] / len * l, dir[2] / len * l};
    worst = std::max(worst, rel(green::trace_gmm_gmm_free(l, xi, 1.0),
                                oracle::brute_trace_mm(lv, xi, 1.0)));
    worst = std::max(worst, rel(green::trace_gme_gem_free(l, xi, 1.0),
                                oracle::brute_trace_me(lv, xi, 1.0)));
  }
  out.add("trace kernels vs 3x3 tensor products (100 random l, xi)", worst,
          1e-12);
}

void gamma_integrals(Collector &out, const potentials::EvalContext &ctx) {
  auto spec = ctx.quadrature;
  spec.decay_scale = 0.5;
  const double h1_coeffs[] = {3, 6, 5, 2, 1};
  const double h2_coeffs[] = {1, 2, 1};
  const double x2h2_coeffs[] = {0, 0, 1, 2, 1};
  struct Case {
    const char *name;
    double (*f)(double);
    std::span<const double> coeffs;
    double exact;
  };
  const Case cases[] = {
      {"int h1 = 23/4", [](double x) { return green::h1(x); }, h1_coeffs, 23.0 / 4},
      {"int h2 = 5/4", [](double x) { return green::h2(x); }, h2_coeffs, 5.0 / 4},
      {"int x^2 h2 = 7/4", [](double x) { return x * x * green::h2(x); },
       x2h2_coeffs, 7.0 / 4},
  };
  for (const auto &c : cases) {
    const double gamma = oracle::poly_exp_integral(c.coeffs, 2.0);
    const double q = quad::integrate_semiinf(c.f, spec).value;
    const double worst = std::max(rel(q, c.exact), rel(gamma, c.exact));
    out.add(c.name, worst, out.value_tol(1e-9));
  }
}

void mirror_closed_form(Collector &out, const potentials::EvalContext &ctx) {
  const auto atom = response::diamagnetic_fixture(-1.0);
  double worst = 0.0;
  double ratio = 0.0;
  for (auto plate : {PlateKind::perfectly_conducting, PlateKind::infinitely_permeable})
    for (double z : {0.5, 1.0, 2.0, 5.0}) {
      const double q = potentials::cp_mirror(atom, z, plate, ctx).diamagnetic;
      const double closed =
          potentials::cp_mirror_diamagnetic_closed(-1.0, z, plate, ctx.constants);
      worst = std::max(worst, rel(q, closed));
      // Printed variant with a single pi in the denominator.
      const double single_pi = green::plate_sign(plate) * 3.0 * ctx.constants.hbar *
                               ctx.constants.mu0 * ctx.constants.c * -1.0 /
                               (32.0 * pi * std::pow(z, 4));
      ratio = q / single_pi;
    }
  out.add("mirror diamagnetic quadrature vs 3 hbar mu0 c beta/(32 pi^2 z^4)",
          worst, out.value_tol(1e-9));
  out.report.single_pi_ratio = ratio;
  const bool pi2 = worst <= out.value_tol(1e-9);
  const bool single = rel(ratio, 1.0) <= out.value_tol(1e-9);
  std::ostringstream v;
  v.precision(10);
  if (pi2 && !single)
    v << "32π² supported; the 32π form is off by a factor π "
      << "(quadrature / single-π form = " << ratio << ", 1/π = " << 1.0 / pi
      << ") and is not supported";
  else
    v << "inconclusive (quadrature / single-π form = " << ratio << ")";
  out.report.prefactor_verdict = v.str();
  out.add("single-pi printed form deviates by a factor pi", rel(ratio, 1.0 / pi),
          out.value_tol(1e-9));
}

void q_integral(Collector &out) {
  double worst = 0.0;
  const auto grid = potentials::make_grid(0.01, 10.0, 13);
  for (auto plate : {PlateKind::perfectly_conducting, PlateKind::infinitely_permeable})
    for (double u : grid) {
      const double z = 1.0, c = 1.0, xi = u * c / z;
      worst = std::max(worst, rel(green::mirror_gmm_trace_via_q_integral(z, xi, plate, c),
                                  green::mirror_gmm_trace(z, xi, plate, c)));
    }
  out.add("mirror kernel vs plane-wave q-integral (z xi/c in [0.01, 10])", worst,
          1e-8);
}

void dd_closed_form(Collector &out, const potentials::EvalContext &ctx) {
  const auto atom = response::diamagnetic_fixture(-1.0);
  double worst = 0.0;
  for (double l : potentials::make_grid(0.1, 100.0, 20)) {
    const auto v = potentials::vdw_pair(atom, atom, l, ctx);
    worst = std::max(worst, rel(v.channel(Response::diamagnetic, Response::diamagnetic),
                                potentials::vdw_dd_closed(-1.0, -1.0, l, ctx.constants)));
  }
  out.add("dd channel vs -23 hbar mu0^2 c bA bB/(64 pi^3 l^7) (20 points)", worst,
          out.value_tol(1e-9));
}

void asymptote_checks(Collector &out, const potentials::EvalContext &ctx) {
  const auto fx = asymptotics::default_fixtures(ctx.constants.hbar);
  struct Case {
    const char *name;
    const response::AtomModel &partner;
    Response kind;
    Regime regime;
    double l;
  };
  const Case cases[] = {
      {"de nonretarded (l^-5) coefficient", fx.electric, Response::electric,
       Regime::nonretarded, 1e-3},
      {"de retarded (l^-7) coefficient", fx.electric, Response::electric,
       Regime::retarded, 1e3},
      {"dp nonretarded (l^-6) coefficient", fx.paramagnetic, Response::paramagnetic,
       Regime::nonretarded, 1e-3},
      {"dp retarded (l^-7) coefficient", fx.paramagnetic, Response::paramagnetic,
       Regime::retarded, 1e3},
  };
  for (const auto &c : cases) {
    const Channel ch{Response::diamagnetic, c.kind};
    const double q = potentials::vdw_pair(fx.diamagnetic, c.partner, c.l, ctx)
                         .channel(Response::diamagnetic, c.kind);
    const double a = potentials::vdw_asymptote(ch, fx.diamagnetic, c.partner, c.l,
                                               c.regime, ctx.constants);
    out.add(c.name, rel(q, a), 0.01);
  }
}

void structural(Collector &out, const potentials::EvalContext &ctx) {
  const auto mixed_a = response::make_atom(
      "mixed-a", {{1.0, 1.5, response::TransitionKind::electric},
                  {2.5, 0.4, response::TransitionKind::electric}},
      {{0.7, 0.3, response::TransitionKind::magnetic}},
      {.direct_beta_d = -0.2, .particles = {}});
  const auto mixed_b = response::make_atom(
      "mixed-b", {{0.5, 0.9, response::TransitionKind::electric}},
      {{1.3, 0.8, response::TransitionKind::magnetic}},
      {.direct_beta_d = -0.6, .particles = {}});
  double worst_sym = 0.0;
  double worst_add = 0.0;
  for (double l : potentials::make_grid(0.05, 20.0, 8)) {
    const auto ab = potentials::vdw_pair(mixed_a, mixed_b, l, ctx);
    const auto ba = potentials::vdw_pair(mixed_b, mixed_a, l, ctx);
    for (const auto &ch : potentials::pair_channels())
      if (ab.channel(ch.a, *ch.b) != ba.channel(*ch.b, ch.a))
        worst_sym = 1.0;
    worst_add = std::max(worst_add,
                         rel(ab.total, potentials::vdw_free_full(mixed_a, mixed_b, l, ctx)));
  }
  out.add("channel symmetry under A <-> B (bit-identical)", worst_sym, 0.0);
  out.add("sum of channels vs one-pass free-space total", worst_add,
          out.value_tol(1e-12));

  const auto fx = asymptotics::default_fixtures(ctx.constants.hbar);
  bool flips = true;
  for (double l : potentials::make_grid(1e-3, 1e3, 13)) {
    const double ep = potentials::vdw_pair(fx.electric, fx.paramagnetic, l, ctx)
                          .channel(Response::electric, Response::paramagnetic);
    const double ed = potentials::vdw_pair(fx.electric, fx.diamagnetic, l, ctx)
                          .channel(Response::electric, Response::diamagnetic);
    flips = flips && ep > 0.0 && ed < 0.0;
  }
  out.add_bool("Lenz-rule sign flip p -> d against an electric partner", flips);
}

void tables(Collector &out, const potentials::EvalContext &ctx) {
  const auto report = asymptotics::verify_tables(
      ctx, asymptotics::default_fixtures(ctx.constants.hbar));
  std::size_t failed = 0, total = 0;
  std::string first_failure;
  for (const auto *list : {&report.mirror_results, &report.pair_results})
    for (const auto &r : *list) {
      ++total;
      if (!r.passed) {
        ++failed;
        if (first_failure.empty())
          first_failure = r.message;
      }
    }
  out.add_bool("sign/power tables (" + std::to_string(total) + " checks)",
               failed == 0, first_failure);
}

} // namespace

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check &c) { return c.passed; });
}

Report run(const potentials::EvalContext &requested) {
  // The fixtures and reference distances are dimensionless.
  const auto ctx = potentials::make_context(units::UnitSystem::natural,
                                            requested.quadrature.rel_tol);
  Collector out(ctx.quadrature.rel_tol);
  polynomial_identities(out);
  trace_kernels(out);
  gamma_integrals(out, ctx);
  mirror_closed_form(out, ctx);
  q_integral(out);
  dd_closed_form(out, ctx);
  asymptote_checks(out, ctx);
  structural(out, ctx);
  tables(out, ctx);
  return out.report;
}

} // namespace cpvdw::selftest
