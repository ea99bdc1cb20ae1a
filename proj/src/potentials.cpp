#include "cpvdw/potentials.hpp"
#include "cpvdw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace cpvdw::potentials {

namespace {

constexpr double pi = std::numbers::pi;

constexpr std::array<Response, 3> all_responses = {
    Response::electric, Response::paramagnetic, Response::diamagnetic};

void check_distance(double d, const char *what) {
  if (!(d > 0.0) || !std::isfinite(d))
    throw DomainError(std::string(what) + " must be finite and > 0");
}

// One response function of one atom, divided by its static magnitude so the
// quadrature sees O(1) values whatever the unit system.
class ScaledResponse {
public:
  ScaledResponse(const AtomModel &atom, Response kind, double hbar)
      : atom_(atom), kind_(kind), hbar_(hbar) {
    switch (kind_) {
    case Response::electric:
      scale_ = response::alpha_iso(atom_, 0.0, hbar_);
      break;
    case Response::paramagnetic:
      scale_ = response::beta_para_iso(atom_, 0.0, hbar_);
      break;
    case Response::diamagnetic:
      scale_ = std::abs(atom_.beta_d());
      break;
    }
  }

  bool absent() const { return scale_ == 0.0; }
  double scale() const { return scale_; }

  double operator()(double xi) const {
    switch (kind_) {
    case Response::electric:
      return response::alpha_iso(atom_, xi, hbar_) / scale_;
    case Response::paramagnetic:
      return response::beta_para_iso(atom_, xi, hbar_) / scale_;
    case Response::diamagnetic:
      break;
    }
    return atom_.beta_d() / scale_;
  }

private:
  const AtomModel &atom_;
  Response kind_;
  double hbar_;
  double scale_ = 0.0;
};

double integrate(const std::function<double(double)> &f, double decay_scale,
                 const EvalContext &ctx, const std::string &context) {
  auto spec = ctx.quadrature;
  spec.decay_scale = decay_scale;
  try {
    return quad::integrate_semiinf(f, spec).value;
  } catch (const IntegrandError &e) {
    throw IntegrandError(context + ": " + e.what(), e.abscissa());
  } catch (const NumericalError &e) {
    throw NumericalError(context + ": " + e.what(), e.best_estimate(),
                         e.error_bound());
  }
}

std::string at(const std::string &channel, const char *var, double d) {
  std::ostringstream s;
  s.precision(6);
  s << "channel " << channel << " at " << var << " = " << d;
  return s.str();
}

bool is_magnetic(Response r) { return r != Response::electric; }

} // namespace

char symbol(Response r) {
  switch (r) {
  case Response::electric:
    return 'e';
  case Response::paramagnetic:
    return 'p';
  case Response::diamagnetic:
    break;
  }
  return 'd';
}

std::string name(const Channel &channel) {
  std::string s(1, symbol(channel.a));
  if (channel.b)
    s += symbol(*channel.b);
  return s;
}

Channel parse_channel(const std::string &text) {
  auto one = [&](char c) {
    for (auto r : all_responses)
      if (symbol(r) == c)
        return r;
    throw ConfigError("unknown channel '" + text + "'");
  };
  if (text.size() == 1)
    return {one(text[0]), std::nullopt};
  if (text.size() == 2)
    return {one(text[0]), one(text[1])};
  throw ConfigError("unknown channel '" + text + "'");
}

const std::array<Channel, 3> &mirror_channels() {
  static const std::array<Channel, 3> list = {
      Channel{Response::electric, std::nullopt},
      Channel{Response::paramagnetic, std::nullopt},
      Channel{Response::diamagnetic, std::nullopt}};
  return list;
}

const std::array<Channel, 9> &pair_channels() {
  static const std::array<Channel, 9> list = [] {
    std::array<Channel, 9> out{};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        out[3 * i + j] = Channel{all_responses[i], all_responses[j]};
    return out;
  }();
  return list;
}

std::size_t pair_index(Response a, Response b) {
  return 3 * static_cast<std::size_t>(a) + static_cast<std::size_t>(b);
}

EvalContext make_context(units::UnitSystem system, double rel_tol) {
  EvalContext ctx{units::constants_for(system), {}, system};
  ctx.quadrature.rel_tol = rel_tol;
  quad::validate(ctx.quadrature);
  return ctx;
}

double MirrorValues::channel(Response r) const {
  switch (r) {
  case Response::electric:
    return electric;
  case Response::paramagnetic:
    return paramagnetic;
  case Response::diamagnetic:
    break;
  }
  return diamagnetic;
}

MirrorValues cp_mirror(const AtomModel &atom, double z, PlateKind plate,
                       const EvalContext &ctx) {
  check_distance(z, "atom-mirror distance z");
  const auto &k = ctx.constants;
  const double sign = green::plate_sign(plate);
  // u = 2 z xi / c, d xi = c / (2z) du; Tr G_mm1 = sign K(u) / (8 pi z^3).
  const double z2 = z * z;
  const double prefactor = k.hbar * k.c / (32.0 * pi * pi * z2 * z2);
  const double xi_per_u = k.c / (2.0 * z);

  auto channel_integral = [&](Response kind) {
    const ScaledResponse r(atom, kind, k.hbar);
    if (r.absent())
      return 0.0;
    auto f = [&](double u) { return r(u * xi_per_u) * green::mirror_kernel(u); };
    return r.scale() *
           integrate(f, 1.0, ctx,
                     at(std::string(1, symbol(kind)), "z", z));
  };

  MirrorValues v;
  // Tr G_ee1 = -Tr G_mm1 on the mirror.
  v.electric = -sign * prefactor / k.eps0 * channel_integral(Response::electric);
  v.paramagnetic =
      sign * prefactor * k.mu0 * channel_integral(Response::paramagnetic);
  v.diamagnetic =
      sign * prefactor * k.mu0 * channel_integral(Response::diamagnetic);
  v.magnetic = v.paramagnetic + v.diamagnetic;
  v.total = v.electric + v.magnetic;
  return v;
}

double cp_mirror_diamagnetic_closed(double beta_d, double z, PlateKind plate,
                                    const units::Constants &k) {
  check_distance(z, "atom-mirror distance z");
  const double z2 = z * z;
  return green::plate_sign(plate) * 3.0 * k.hbar * k.mu0 * k.c * beta_d /
         (32.0 * pi * pi * z2 * z2);
}

PairValues vdw_pair(const AtomModel &atom_a, const AtomModel &atom_b, double l,
                    const EvalContext &ctx) {
  check_distance(l, "interatomic distance l");
  const auto &k = ctx.constants;
  // x = l xi / c. Common factor hbar mu0^2 c / (16 pi^3 l^7); the electric
  // polarisability enters with an extra c^2 per atom.
  const double l7 = std::pow(l, 7);
  const double base = k.hbar * k.mu0 * k.mu0 * k.c / (16.0 * pi * pi * pi * l7);
  const double c2 = k.c * k.c;
  const double xi_per_x = k.c / l;

  PairValues out;
  for (std::size_t idx = 0; idx < 9; ++idx) {
    const auto &ch = pair_channels()[idx];
    const ScaledResponse ra(atom_a, ch.a, k.hbar);
    const ScaledResponse rb(atom_b, *ch.b, k.hbar);
    if (ra.absent() || rb.absent())
      continue;
    const bool mag_a = is_magnetic(ch.a);
    const bool mag_b = is_magnetic(*ch.b);
    double value;
    if (mag_a == mag_b) {
      // -1/l^6 [c^4 alpha alpha + beta beta] h1
      auto f = [&](double x) {
        const double xi = x * xi_per_x;
        return (ra(xi) * rb(xi)) * green::h1(x);
      };
      const double weight = mag_a ? 1.0 : c2 * c2;
      value = -base * weight * (ra.scale() * rb.scale()) *
              integrate(f, 0.5, ctx, at(name(ch), "l", l));
    } else {
      // +1/l^4 xi^2 alpha beta h2
      auto f = [&](double x) {
        const double xi = x * xi_per_x;
        return (ra(xi) * rb(xi)) * (x * x * green::h2(x));
      };
      value = base * c2 * (ra.scale() * rb.scale()) *
              integrate(f, 0.5, ctx, at(name(ch), "l", l));
    }
    out.channels[idx] = value;
  }
  out.total = 0.0;
  for (double v : out.channels)
    out.total += v;
  return out;
}

double vdw_free_full(const AtomModel &atom_a, const AtomModel &atom_b,
                     double l, const EvalContext &ctx) {
  check_distance(l, "interatomic distance l");
  const auto &k = ctx.constants;
  const double c2 = k.c * k.c;
  const double c4 = c2 * c2;
  const double xi_per_x = k.c / l;
  auto alpha = [&](const AtomModel &a, double xi) {
    return response::alpha_iso(a, xi, k.hbar);
  };
  auto beta = [&](const AtomModel &a, double xi) {
    return response::beta_total(a, xi, k.hbar);
  };
  auto beta_mag = [&](const AtomModel &a) {
    return response::beta_para_iso(a, 0.0, k.hbar) + std::abs(a.beta_d());
  };

  double scale1 = c4 * alpha(atom_a, 0.0) * alpha(atom_b, 0.0) +
                  beta_mag(atom_a) * beta_mag(atom_b);
  double scale2 = alpha(atom_a, 0.0) * beta_mag(atom_b) +
                  beta_mag(atom_a) * alpha(atom_b, 0.0);
  if (scale1 == 0.0)
    scale1 = 1.0;
  if (scale2 == 0.0)
    scale2 = 1.0;

  auto f1 = [&](double x) {
    const double xi = x * xi_per_x;
    return (c4 * alpha(atom_a, xi) * alpha(atom_b, xi) +
            beta(atom_a, xi) * beta(atom_b, xi)) /
           scale1 * green::h1(x);
  };
  auto f2 = [&](double x) {
    const double xi = x * xi_per_x;
    return (alpha(atom_a, xi) * beta(atom_b, xi) +
            beta(atom_a, xi) * alpha(atom_b, xi)) /
           scale2 * x * x * green::h2(x);
  };
  const double i1 = scale1 * integrate(f1, 0.5, ctx, at("h1-part", "l", l));
  const double i2 = scale2 * integrate(f2, 0.5, ctx, at("h2-part", "l", l));
  const double base = k.hbar * k.mu0 * k.mu0 * k.c /
                      (16.0 * pi * pi * pi * std::pow(l, 7));
  return base * (-i1 + c2 * i2);
}

double vdw_dd_closed(double beta_a, double beta_b, double l,
                     const units::Constants &k) {
  check_distance(l, "interatomic distance l");
  return -23.0 * k.hbar * k.mu0 * k.mu0 * k.c * beta_a * beta_b /
         (64.0 * pi * pi * pi * std::pow(l, 7));
}

std::string_view to_string(Regime regime) {
  return regime == Regime::nonretarded ? "nonretarded" : "retarded";
}

namespace {

double sum_omega_dipole(const std::vector<response::Transition> &ts) {
  double s = 0.0;
  for (const auto &t : ts)
    s += t.omega_k * t.dipole_sq;
  return s;
}

double sum_dipole(const std::vector<response::Transition> &ts) {
  double s = 0.0;
  for (const auto &t : ts)
    s += t.dipole_sq;
  return s;
}

// Asymptote with the diamagnetic atom in slot A.
double dia_first(Response other, const AtomModel &dia, const AtomModel &b,
                 double l, Regime regime, const units::Constants &k) {
  const double mu02 = k.mu0 * k.mu0;
  const double abs_bd = std::abs(dia.beta_d());
  switch (other) {
  case Response::electric:
    if (regime == Regime::nonretarded)
      return -5.0 * mu02 * k.c * abs_bd * sum_omega_dipole(b.electric()) /
             (96.0 * pi * pi * pi * std::pow(l, 5));
    return -7.0 * k.hbar * mu02 * k.c * k.c * k.c * abs_bd *
           response::alpha_iso(b, 0.0, k.hbar) /
           (64.0 * pi * pi * pi * std::pow(l, 7));
  case Response::paramagnetic:
    if (regime == Regime::nonretarded)
      return mu02 * abs_bd * sum_dipole(b.magnetic()) /
             (16.0 * pi * pi * std::pow(l, 6));
    return 23.0 * k.hbar * mu02 * k.c * abs_bd *
           response::beta_para_iso(b, 0.0, k.hbar) /
           (64.0 * pi * pi * pi * std::pow(l, 7));
  case Response::diamagnetic:
    break;
  }
  return vdw_dd_closed(dia.beta_d(), b.beta_d(), l, k);
}

double static_response(Response r, const AtomModel &atom, double hbar) {
  return r == Response::electric ? response::alpha_iso(atom, 0.0, hbar)
                                 : response::beta_para_iso(atom, 0.0, hbar);
}

} // namespace

double vdw_asymptote(const Channel &channel, const AtomModel &atom_a,
                     const AtomModel &atom_b, double l, Regime regime,
                     const units::Constants &k) {
  check_distance(l, "interatomic distance l");
  if (!channel.b)
    throw UnsupportedError("vdw_asymptote needs a two-atom channel");
  const Response a = channel.a;
  const Response b = *channel.b;
  if (a == Response::diamagnetic)
    return dia_first(b, atom_a, atom_b, l, regime, k);
  if (b == Response::diamagnetic)
    return dia_first(a, atom_b, atom_a, l, regime, k);
  if (regime == Regime::nonretarded)
    throw UnsupportedError("no closed nonretarded asymptote for channel " +
                           name(channel));
  // Static limit of the free-space formula: int h1 = 23/4, int x^2 h2 = 7/4.
  const double sa = static_response(a, atom_a, k.hbar);
  const double sb = static_response(b, atom_b, k.hbar);
  const double base =
      k.hbar * k.mu0 * k.mu0 * k.c / (64.0 * pi * pi * pi * std::pow(l, 7));
  const double c2 = k.c * k.c;
  if (a == Response::electric && b == Response::electric)
    return -23.0 * base * c2 * c2 * sa * sb;
  if (a == Response::paramagnetic && b == Response::paramagnetic)
    return -23.0 * base * sa * sb;
  return 7.0 * base * c2 * sa * sb;
}

bool in_deep_regime(const std::vector<double> &omegas, double l, double c,
                    Regime regime) {
  if (omegas.empty())
    return true;
  const auto [lo, hi] = std::minmax_element(omegas.begin(), omegas.end());
  constexpr double slack = 1.0 + 1e-12;
  if (regime == Regime::nonretarded)
    return l * *hi / c <= slack / deep_regime_depth;
  return l * *lo / c * slack >= deep_regime_depth;
}

std::vector<double> channel_frequencies(const Channel &channel,
                                        const AtomModel &atom_a,
                                        const AtomModel *atom_b) {
  std::vector<double> out;
  auto add = [&](Response r, const AtomModel &atom) {
    const auto *list = r == Response::electric       ? &atom.electric()
                       : r == Response::paramagnetic ? &atom.magnetic()
                                                     : nullptr;
    if (list)
      for (const auto &t : *list)
        out.push_back(t.omega_k);
  };
  add(channel.a, atom_a);
  if (channel.b) {
    if (!atom_b)
      throw DomainError("pair channel needs two atoms");
    add(*channel.b, *atom_b);
  }
  return out;
}

} // namespace cpvdw::potentials
