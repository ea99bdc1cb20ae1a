#include "cpvdw/atom_io.hpp"
#include "cpvdw/errors.hpp"

#include <doctest.h>

#include <string>

using namespace cpvdw;
using namespace cpvdw::response;

namespace {

std::string error_of(const std::string &text) {
  try {
    parse_atom(text, "atom.yaml");
  } catch (const ConfigError &e) {
    return e.what();
  }
  return {};
}

} // namespace

TEST_CASE("parse a complete atom") {
  const auto atom = parse_atom(R"(label: test-atom
electric_transitions:
  - {omega: 1.0, mu_sq: 1.5}
  - {omega: 3.0, mu_sq: 0.5}
magnetic_transitions:
  - {omega: 2.0, m_sq: 0.25}
particles:
  - {q: 1.0, m: 1.0, r_sq: 6.0}
)",
                               "inline");
  CHECK(atom.label() == "test-atom");
  CHECK(atom.electric().size() == 2);
  CHECK(atom.magnetic().size() == 1);
  CHECK(atom.beta_d() == -1.0);
}

TEST_CASE("direct beta_d, label defaults to the source") {
  const auto atom = parse_atom("beta_d: -2.0\n", "dia.yaml");
  CHECK(atom.label() == "dia.yaml");
  CHECK(atom.beta_d() == -2.0);
}

TEST_CASE("errors carry line and column") {
  CHECK(error_of("beta_d: 0.5\n").find("atom.yaml:1:9") != std::string::npos);
  CHECK(error_of("beta_d: -1\nparticles: []\n").find("atom.yaml:2:") !=
        std::string::npos);
  CHECK(error_of("label: x\nelectric_transitions:\n  - {omega: -1, mu_sq: 1}\n")
            .find("atom.yaml:3:") != std::string::npos);
  CHECK(error_of("label: x\nelectric_transitions:\n  - {omega: 1}\n")
            .find("missing 'mu_sq'") != std::string::npos);
  CHECK(error_of("label: x\nalpha_tensor: [1, 2, 3]\n").find("isotropic") !=
        std::string::npos);
  CHECK(error_of("beta_d: abc\n").find("must be a number") != std::string::npos);
  CHECK(error_of("label: [unclosed\n").find("syntax error") != std::string::npos);
  CHECK(error_of("label: nothing\n").find("no electric") != std::string::npos);
}

TEST_CASE("missing file names the path") {
  try {
    load_atom_file("/nonexistent/atom.yaml");
    FAIL("expected ConfigError");
  } catch (const ConfigError &e) {
    CHECK(std::string(e.what()).find("/nonexistent/atom.yaml") !=
          std::string::npos);
  }
}

TEST_CASE("shipped atom files load") {
  for (const char *name : {"electric.yaml", "paramagnetic.yaml",
                           "diamagnetic.yaml", "hydrogen-like.yaml"})
    CHECK_NOTHROW(load_atom_file(std::string(CPVDW_EXAMPLES_DIR) + "/" + name));
}
