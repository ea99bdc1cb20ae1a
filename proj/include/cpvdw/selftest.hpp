#pragma once

#include "cpvdw/potentials.hpp"

#include <string>
#include <vector>

namespace cpvdw::selftest {

struct Check {
  std::string name;
  bool passed;
  double worst;     //!< worst deviation seen (relative unless noted)
  double tolerance; //!< threshold applied to `worst`
  std::string detail;
};

struct Report {
  std::vector<Check> checks;
  //! Which mirror prefactor the quadrature supports.
  std::string prefactor_verdict;
  //! Quadrature value divided by the single-pi printed form (expected 1/pi).
  double single_pi_ratio = 0.0;

  bool all_passed() const;
};

//! Runs the oracle checks at the quadrature tolerance of `ctx`, always in
//! natural units. Value comparisons use max(stated tolerance, 10 rel_tol), so a
//! loosened rel_tol still checks signs and slopes at their fixed limits.
Report run(const potentials::EvalContext &ctx);

} // namespace cpvdw::selftest
