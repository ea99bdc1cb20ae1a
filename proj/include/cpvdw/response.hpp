#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cpvdw::response {

enum class TransitionKind { electric, magnetic };

//! One excited state reached by a dipole transition from the ground state.
//! `dipole_sq` is |<0|mu|k>|^2 (electric) or |<0|m|k>|^2 (magnetic).
struct Transition {
  double omega_k;
  double dipole_sq;
  TransitionKind kind;
};

//! Bound charge contributing to the diamagnetisability.
struct Particle {
  double charge;
  double mass;
  double mean_sq_radius; //!< <r^2> relative to the centre of mass
};

//! Either a directly specified beta_d or a particle decomposition.
//! Specifying both is rejected when an atom is built.
struct DiamagneticSpec {
  std::optional<double> direct_beta_d;
  std::vector<Particle> particles;

  bool empty() const { return !direct_beta_d && particles.empty(); }
};

//! beta^d = -sum q^2 <r^2> / (6 m). Always <= 0.
double diamagnetisability(const DiamagneticSpec &spec);

//! Isotropic ground-state atom. Construct through `make_atom`, which
//! validates every transition and the diamagnetic part, and caches beta^d.
class AtomModel {
public:
  const std::string &label() const { return label_; }
  const std::vector<Transition> &electric() const { return electric_; }
  const std::vector<Transition> &magnetic() const { return magnetic_; }
  const DiamagneticSpec &diamagnetic() const { return diamagnetic_; }
  double beta_d() const { return beta_d_; }

  bool has_electric() const { return !electric_.empty(); }
  bool has_paramagnetic() const { return !magnetic_.empty(); }
  bool has_diamagnetic() const { return beta_d_ != 0.0; }

  friend AtomModel make_atom(std::string label,
                             std::vector<Transition> electric,
                             std::vector<Transition> magnetic,
                             DiamagneticSpec diamagnetic);

private:
  AtomModel() = default;

  std::string label_;
  std::vector<Transition> electric_;
  std::vector<Transition> magnetic_;
  DiamagneticSpec diamagnetic_;
  double beta_d_ = 0.0;
};

//! Throws DomainError on invalid transitions or a positive beta_d,
//! ConfigError on ambiguous or all-empty atoms.
AtomModel make_atom(std::string label, std::vector<Transition> electric,
                    std::vector<Transition> magnetic,
                    DiamagneticSpec diamagnetic);

//! Single-transition fixtures used by the table checks and examples:
//! transition at `omega` with weight chosen so the static response equals
//! `static_response` (alpha(0) or beta^p(0)).
AtomModel electric_fixture(double hbar, double omega = 1.0,
                           double static_response = 1.0);
AtomModel paramagnetic_fixture(double hbar, double omega = 1.0,
                               double static_response = 1.0);
AtomModel diamagnetic_fixture(double beta_d = -1.0);

// Response functions on the imaginary frequency axis, omega = i xi.

double alpha_iso(const AtomModel &atom, double xi, double hbar);
double beta_para_iso(const AtomModel &atom, double xi, double hbar);
//! beta^p(i xi) + beta^d.
double beta_total(const AtomModel &atom, double xi, double hbar);

//! (2 / 3 hbar) sum_k omega_k d_k / (omega_k^2 + xi^2) over `transitions`.
double lorentzian_sum(const std::vector<Transition> &transitions, double xi,
                      double hbar);

} // namespace cpvdw::response
