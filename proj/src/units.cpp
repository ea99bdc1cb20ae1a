#include "cpvdw/units.hpp"
#include "cpvdw/errors.hpp"

#include <numbers>
#include <string>

namespace cpvdw::units {

namespace {
// Exact SI definitions (2019 redefinition) plus the conventional mu0.
constexpr double c_si = 2.99792458e8;
constexpr double planck_h = 6.62607015e-34;
constexpr double hbar_si = planck_h / (2.0 * std::numbers::pi);
constexpr double mu0_si = 4.0e-7 * std::numbers::pi;
// eps0 follows from mu0 eps0 c^2 = 1.
constexpr double eps0_si = 1.0 / (mu0_si * c_si * c_si);
} // namespace

Constants constants_for(UnitSystem system) {
  switch (system) {
  case UnitSystem::natural:
    return {1.0, 1.0, 1.0, 1.0};
  case UnitSystem::SI:
    break;
  }
  return {hbar_si, c_si, eps0_si, mu0_si};
}

std::string_view to_string(UnitSystem system) {
  return system == UnitSystem::SI ? "si" : "natural";
}

UnitSystem parse_unit_system(std::string_view text) {
  if (text == "si" || text == "SI")
    return UnitSystem::SI;
  if (text == "natural")
    return UnitSystem::natural;
  throw ConfigError("unknown unit system '" + std::string(text) +
                    "' (expected si|natural)");
}

} // namespace cpvdw::units
