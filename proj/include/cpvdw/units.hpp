#pragma once

#include <string_view>

namespace cpvdw::units {

enum class UnitSystem { SI, natural };

//! hbar [J s], c [m/s], eps0 [F/m], mu0 [H/m]. In natural units all are 1.
struct Constants {
  double hbar;
  double c;
  double eps0;
  double mu0;
};

Constants constants_for(UnitSystem system);

std::string_view to_string(UnitSystem system);
//! Accepts "si" or "natural"; throws ConfigError otherwise.
UnitSystem parse_unit_system(std::string_view text);

} // namespace cpvdw::units
