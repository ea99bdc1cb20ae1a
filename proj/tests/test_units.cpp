#include "cpvdw/errors.hpp"
#include "cpvdw/potentials.hpp"
#include "cpvdw/units.hpp"

#include <doctest.h>

#include <cmath>

using namespace cpvdw;
using units::UnitSystem;

TEST_CASE("natural units are all ones") {
  const auto k = units::constants_for(UnitSystem::natural);
  CHECK(k.hbar == 1.0);
  CHECK(k.c == 1.0);
  CHECK(k.eps0 == 1.0);
  CHECK(k.mu0 == 1.0);
}

TEST_CASE("SI constants") {
  const auto k = units::constants_for(UnitSystem::SI);
  CHECK(k.c == 2.99792458e8);
  CHECK(k.hbar == doctest::Approx(1.054571817e-34).epsilon(1e-12));
  CHECK(k.eps0 == doctest::Approx(8.8541878128e-12).epsilon(1e-9));
  for (auto s : {UnitSystem::SI, UnitSystem::natural}) {
    const auto c = units::constants_for(s);
    CHECK(std::abs(c.mu0 * c.eps0 * c.c * c.c - 1.0) <= 1e-12);
    CHECK(c.hbar > 0);
    CHECK(c.eps0 > 0);
  }
}

TEST_CASE("unit system parsing") {
  CHECK(units::parse_unit_system("si") == UnitSystem::SI);
  CHECK(units::parse_unit_system("natural") == UnitSystem::natural);
  CHECK_THROWS_AS(units::parse_unit_system("cgs"), ConfigError);
}

// Closed forms computed with natural-unit constants, then multiplied by the
// dimensional prefactor, must reproduce the SI evaluation.
TEST_CASE("natural-to-SI prefactor scaling of closed forms") {
  const auto si = units::constants_for(UnitSystem::SI);
  const auto nat = units::constants_for(UnitSystem::natural);
  const double beta_a = -3.9e-29, beta_b = -1.2e-28, l = 7e-10, z = 3e-9;

  const double dd_si = potentials::vdw_dd_closed(beta_a, beta_b, l, si);
  const double dd_nat = potentials::vdw_dd_closed(beta_a, beta_b, l, nat);
  CHECK(dd_nat * si.hbar * si.mu0 * si.mu0 * si.c ==
        doctest::Approx(dd_si).epsilon(1e-10));

  const auto plate = green::PlateKind::infinitely_permeable;
  const double m_si = potentials::cp_mirror_diamagnetic_closed(beta_a, z, plate, si);
  const double m_nat = potentials::cp_mirror_diamagnetic_closed(beta_a, z, plate, nat);
  CHECK(m_nat * si.hbar * si.mu0 * si.c == doctest::Approx(m_si).epsilon(1e-10));

  // Retarded de asymptote carries hbar mu0^2 c^3.
  const auto e_si = response::electric_fixture(si.hbar, 2.4e16, 7.4e-41);
  const auto e_nat = response::electric_fixture(1.0, 2.4e16, 7.4e-41);
  const auto d = response::diamagnetic_fixture(beta_a);
  const potentials::Channel de{potentials::Response::diamagnetic,
                               potentials::Response::electric};
  const double r_si = potentials::vdw_asymptote(de, d, e_si, l, potentials::Regime::retarded, si);
  const double r_nat = potentials::vdw_asymptote(de, d, e_nat, l, potentials::Regime::retarded, nat);
  CHECK(r_nat * si.hbar * si.mu0 * si.mu0 * si.c * si.c * si.c ==
        doctest::Approx(r_si).epsilon(1e-10));
}
