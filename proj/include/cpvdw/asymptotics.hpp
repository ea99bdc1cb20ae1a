#pragma once

#include "cpvdw/curve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cpvdw::asymptotics {

using potentials::Channel;
using potentials::Geometry;
using potentials::PotentialCurve;
using potentials::Regime;

//! Local exponent n(l) = d ln|U| / d ln l and sign of U per grid point.
//! Points whose stencil touches a zero or straddles a sign change carry no
//! exponent.
struct SlopeProfile {
  std::vector<double> distances;
  std::vector<std::optional<double>> exponent;
  std::vector<int> sign; //!< +1, -1, or 0 where U == 0
};

//! Log-log slope of `values` on a geometric grid (constant ratio to 1e-9,
//! at least 5 points). Central differences inside, one-sided at the ends.
//! Throws DomainError on a non-geometric or too short grid.
SlopeProfile log_slope(const std::vector<double> &distances,
                       const std::vector<double> &values);

//! Slope profile of one channel, or of the total when `channel` is empty.
SlopeProfile local_log_slope(const PotentialCurve &curve,
                             const std::optional<Channel> &channel = {});

//! One sign/power claim of a table cell. An empty regime means the claim
//! holds at every distance (merged diamagnetic cells).
struct Claim {
  std::optional<Regime> regime;
  int sign;
  int power; //!< U ~ sign / r^power
};

struct TableEntry {
  Geometry geometry;
  std::optional<potentials::PlateKind> plate; //!< mirror only
  Channel channel;
  std::vector<Claim> claims;
};

//! Sign/power table of the single-atom potential at a perfect mirror:
//! 6 entries (electric, paramagnetic, diamagnetic atom per plate kind).
std::vector<TableEntry> mirror_table();
//! Sign/power table of the free-space pair potential: 9 channel entries,
//! the diamagnetic-diamagnetic one with a single merged claim.
std::vector<TableEntry> pair_table();

//! Single-transition fixture atoms at frequency omega0.
struct Fixtures {
  response::AtomModel electric;
  response::AtomModel paramagnetic;
  response::AtomModel diamagnetic;
  double omega0;
};

//! omega0 = 1 with unit static responses and beta_d = -1 (in the units of
//! `hbar`).
Fixtures default_fixtures(double hbar);

struct ClaimResult {
  std::size_t entry; //!< index into the table
  Claim claim;
  double distance;
  double measured_slope;
  int measured_sign;
  bool passed;
  std::string message;
};

struct TableReport {
  std::vector<TableEntry> mirror_entries;
  std::vector<TableEntry> pair_entries;
  std::vector<ClaimResult> mirror_results;
  std::vector<ClaimResult> pair_results;

  bool all_passed() const;
};

inline constexpr double slope_tolerance = 0.05;

//! Evaluates every claim of both tables in its deep regime (or, for merged
//! claims, at three distances spanning both regimes), checking the sign
//! exactly and the slope within `slope_tol` of -power.
TableReport verify_tables(const potentials::EvalContext &ctx,
                          const Fixtures &fixtures,
                          double slope_tol = slope_tolerance,
                          potentials::Execution execution =
                              potentials::Execution::parallel);

std::string describe(const TableEntry &entry);

} // namespace cpvdw::asymptotics
