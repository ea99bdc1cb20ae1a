#include "cpvdw/response.hpp"
#include "cpvdw/errors.hpp"

#include <cmath>
#include <utility>

namespace cpvdw::response {

namespace {

void check_transitions(const std::vector<Transition> &list,
                       TransitionKind expected, const char *what) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto &t = list[i];
    const auto where = std::string(what) + " transition " + std::to_string(i);
    if (t.kind != expected)
      throw ConfigError(where + ": wrong transition kind");
    if (!(t.omega_k > 0.0) || !std::isfinite(t.omega_k))
      throw DomainError(where + ": omega must be finite and > 0");
    if (!(t.dipole_sq >= 0.0) || !std::isfinite(t.dipole_sq))
      throw DomainError(where + ": squared dipole must be finite and >= 0");
  }
}

void check_xi(double xi) {
  if (!(xi >= 0.0))
    throw DomainError("imaginary frequency xi must be >= 0");
}

} // namespace

double diamagnetisability(const DiamagneticSpec &spec) {
  if (spec.direct_beta_d && !spec.particles.empty())
    throw ConfigError("diamagnetic response given both as beta_d and as "
                      "particles; specify exactly one");
  if (spec.direct_beta_d) {
    const double b = *spec.direct_beta_d;
    if (!std::isfinite(b))
      throw DomainError("beta_d must be finite");
    if (b > 0.0)
      throw DomainError("beta_d must be <= 0 (Lenz rule)");
    return b;
  }
  double sum = 0.0;
  for (const auto &p : spec.particles) {
    if (!(p.mass > 0.0))
      throw DomainError("particle mass must be > 0");
    if (!(p.mean_sq_radius >= 0.0))
      throw DomainError("particle mean-square radius must be >= 0");
    sum += p.charge * p.charge * p.mean_sq_radius / (6.0 * p.mass);
  }
  return -sum;
}

AtomModel make_atom(std::string label, std::vector<Transition> electric,
                    std::vector<Transition> magnetic,
                    DiamagneticSpec diamagnetic) {
  check_transitions(electric, TransitionKind::electric, "electric");
  check_transitions(magnetic, TransitionKind::magnetic, "magnetic");
  const double bd = diamagnetisability(diamagnetic);
  if (electric.empty() && magnetic.empty() && bd == 0.0)
    throw ConfigError("atom '" + label +
                      "' has no electric, paramagnetic or diamagnetic response");
  AtomModel atom;
  atom.label_ = std::move(label);
  atom.electric_ = std::move(electric);
  atom.magnetic_ = std::move(magnetic);
  atom.diamagnetic_ = std::move(diamagnetic);
  atom.beta_d_ = bd;
  return atom;
}

// alpha(0) = (2/3hbar) d / omega, so d = 3 hbar omega alpha(0) / 2.
AtomModel electric_fixture(double hbar, double omega, double static_response) {
  return make_atom("electric-fixture",
                   {{omega, 1.5 * hbar * omega * static_response,
                     TransitionKind::electric}},
                   {}, {});
}

AtomModel paramagnetic_fixture(double hbar, double omega,
                               double static_response) {
  return make_atom("paramagnetic-fixture", {},
                   {{omega, 1.5 * hbar * omega * static_response,
                     TransitionKind::magnetic}},
                   {});
}

AtomModel diamagnetic_fixture(double beta_d) {
  DiamagneticSpec spec;
  spec.direct_beta_d = beta_d;
  return make_atom("diamagnetic-fixture", {}, {}, spec);
}

double lorentzian_sum(const std::vector<Transition> &transitions, double xi,
                      double hbar) {
  check_xi(xi);
  double sum = 0.0;
  for (const auto &t : transitions)
    sum += t.omega_k * t.dipole_sq / (t.omega_k * t.omega_k + xi * xi);
  return 2.0 * sum / (3.0 * hbar);
}

double alpha_iso(const AtomModel &atom, double xi, double hbar) {
  return lorentzian_sum(atom.electric(), xi, hbar);
}

double beta_para_iso(const AtomModel &atom, double xi, double hbar) {
  return lorentzian_sum(atom.magnetic(), xi, hbar);
}

double beta_total(const AtomModel &atom, double xi, double hbar) {
  return beta_para_iso(atom, xi, hbar) + atom.beta_d();
}

} // namespace cpvdw::response
