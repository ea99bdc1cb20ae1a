#include "cpvdw/errors.hpp"
#include "cpvdw/response.hpp"

#include <doctest.h>

#include <random>

using namespace cpvdw;
using namespace cpvdw::response;

namespace {

AtomModel electric_atom(std::vector<Transition> ts) {
  return make_atom("e", std::move(ts), {}, {});
}

} // namespace

TEST_CASE("diamagnetisability") {
  SUBCASE("single unit particle") {
    DiamagneticSpec s;
    s.particles = {{1.0, 1.0, 6.0}};
    CHECK(diamagnetisability(s) == -1.0);
  }
  SUBCASE("empty particle list") { CHECK(diamagnetisability({}) == 0.0); }
  SUBCASE("hydrogenic ground state") {
    // <r^2> = 3 a0^2 gives -e^2 a0^2 / (2 m_e); value from independent
    // high-precision arithmetic.
    const double e = 1.602176634e-19, a0 = 5.29177210903e-11,
                 me = 9.1093837015e-31;
    DiamagneticSpec s;
    s.particles = {{-e, me, 3 * a0 * a0}};
    CHECK(diamagnetisability(s) ==
          doctest::Approx(-3.94551830042485e-29).epsilon(1e-12));
  }
  SUBCASE("direct value passes through") {
    DiamagneticSpec s;
    s.direct_beta_d = -2.5;
    CHECK(diamagnetisability(s) == -2.5);
  }
  SUBCASE("errors") {
    DiamagneticSpec positive;
    positive.direct_beta_d = 0.1;
    CHECK_THROWS_AS(diamagnetisability(positive), DomainError);
    DiamagneticSpec massless;
    massless.particles = {{1.0, 0.0, 1.0}};
    CHECK_THROWS_AS(diamagnetisability(massless), DomainError);
    DiamagneticSpec both;
    both.direct_beta_d = -1.0;
    both.particles = {{1.0, 1.0, 1.0}};
    CHECK_THROWS_AS(diamagnetisability(both), ConfigError);
  }
}

TEST_CASE("atom construction") {
  CHECK_THROWS_AS(make_atom("empty", {}, {}, {}), ConfigError);
  CHECK_THROWS_AS(electric_atom({{-1.0, 1.0, TransitionKind::electric}}),
                  DomainError);
  CHECK_THROWS_AS(electric_atom({{1.0, -1.0, TransitionKind::electric}}),
                  DomainError);
  CHECK_THROWS_AS(make_atom("x", {}, {{1.0, 1.0, TransitionKind::electric}}, {}),
                  ConfigError);
  const auto d = diamagnetic_fixture(-1.0);
  CHECK(d.has_diamagnetic());
  CHECK_FALSE(d.has_electric());
}

TEST_CASE("polarisability on the imaginary axis") {
  const auto atom = electric_atom({{1.0, 1.5, TransitionKind::electric}});
  CHECK(alpha_iso(atom, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(alpha_iso(atom, 1e8, 1.0) < 1e-15);
  CHECK_THROWS_AS(alpha_iso(atom, -0.1, 1.0), DomainError);

  const auto second = electric_atom({{2.0, 0.7, TransitionKind::electric}});
  const auto both = electric_atom({{1.0, 1.5, TransitionKind::electric},
                                   {2.0, 0.7, TransitionKind::electric}});
  for (double xi : {0.0, 0.3, 4.0})
    CHECK(alpha_iso(both, xi, 1.0) ==
          doctest::Approx(alpha_iso(atom, xi, 1.0) + alpha_iso(second, xi, 1.0))
              .epsilon(1e-15));
  CHECK(beta_para_iso(atom, 0.5, 1.0) == 0.0);
}

TEST_CASE("paramagnetisability and total magnetisability") {
  const auto p = paramagnetic_fixture(1.0);
  CHECK(beta_para_iso(p, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(beta_para_iso(p, 0.2, 1.0) > beta_para_iso(p, 0.9, 1.0));

  const auto d = diamagnetic_fixture(-1.0);
  for (double xi : {0.0, 1.0, 1e6})
    CHECK(beta_total(d, xi, 1.0) == -1.0);

  const auto pd = make_atom("pd", {}, {{1.0, 1.5, TransitionKind::magnetic}},
                            {.direct_beta_d = -1.0, .particles = {}});
  CHECK(beta_total(pd, 0.0, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(beta_total(pd, 1e9, 1.0) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("response properties over random atoms") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> w(0.1, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Transition> e, m;
    for (int k = 0; k < 3; ++k) {
      e.push_back({w(rng), w(rng), TransitionKind::electric});
      m.push_back({w(rng), w(rng), TransitionKind::magnetic});
    }
    const double bd = -w(rng);
    const auto atom = make_atom("r", e, m, {.direct_beta_d = bd, .particles = {}});
    auto scaled = e;
    for (auto &t : scaled)
      t.dipole_sq *= 3.0;
    const auto atom3 = make_atom("r3", scaled, m, {.direct_beta_d = bd, .particles = {}});

    double prev_a = alpha_iso(atom, 0.0, 1.0);
    double prev_b = beta_para_iso(atom, 0.0, 1.0);
    for (double xi = 0.05; xi < 50.0; xi *= 1.7) {
      const double a = alpha_iso(atom, xi, 1.0);
      const double b = beta_para_iso(atom, xi, 1.0);
      CHECK(a >= 0.0);
      CHECK(b >= 0.0);
      CHECK(a <= prev_a);
      CHECK(b <= prev_b);
      CHECK(beta_total(atom, xi, 1.0) - b == doctest::Approx(bd).epsilon(1e-12));
      CHECK(alpha_iso(atom3, xi, 1.0) == doctest::Approx(3.0 * a).epsilon(1e-14));
      prev_a = a;
      prev_b = b;
    }
  }
}
