#pragma once

#include "cpvdw/potentials.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cpvdw::potentials {

enum class Geometry { mirror, free_pair };
enum class Method { quadrature, closed_form };

std::string_view to_string(Geometry g);
std::string_view to_string(Method m);

//! Potential values over a distance grid, one series per channel plus the
//! total. For the mirror the channels are e, p, d; for a pair the nine
//! two-atom channels in pair_channels() order.
struct PotentialCurve {
  Geometry geometry = Geometry::mirror;
  std::optional<PlateKind> plate;
  std::vector<double> distances;
  std::vector<Channel> channels;
  std::vector<std::vector<double>> values; //!< values[channel][point]
  std::vector<double> total;
  Method method = Method::quadrature;
  units::UnitSystem unit_system = units::UnitSystem::SI;
  quad::QuadratureSpec tolerances;
  std::vector<std::string> atom_labels;

  //! Throws DomainError if the channel is not part of this curve.
  const std::vector<double> &series(const Channel &channel) const;
};

//! Strictly increasing, positive distances; geometric spacing when
//! `geometric`, linear otherwise. Throws ConfigError on bad input.
std::vector<double> make_grid(double min, double max, int points,
                              bool geometric = true);

//! Throws DomainError unless distances are positive and strictly increasing.
void check_grid(const std::vector<double> &distances);

enum class Execution { serial, parallel };

//! Curves over a grid. `serial` is the reference loop; `parallel` spreads
//! grid points over OpenMP threads and yields bit-identical values. The
//! first failing point (by index) is rethrown.
PotentialCurve mirror_curve(const AtomModel &atom,
                            const std::vector<double> &distances,
                            PlateKind plate, const EvalContext &ctx,
                            Execution execution = Execution::parallel);

PotentialCurve pair_curve(const AtomModel &atom_a, const AtomModel &atom_b,
                          const std::vector<double> &distances,
                          const EvalContext &ctx,
                          Execution execution = Execution::parallel);

//! Purely diamagnetic closed forms as curves (method = closed_form).
PotentialCurve mirror_curve_closed_form(const AtomModel &atom,
                                        const std::vector<double> &distances,
                                        PlateKind plate,
                                        const EvalContext &ctx);
PotentialCurve pair_curve_closed_form(const AtomModel &atom_a,
                                      const AtomModel &atom_b,
                                      const std::vector<double> &distances,
                                      const EvalContext &ctx);

//! F = -dU/dr of the total (or of one channel): second-order central
//! differences on the (possibly non-uniform) grid, second-order one-sided
//! stencils at both ends. Needs at least 3 points.
std::vector<double> force_from_curve(const PotentialCurve &curve);
std::vector<double> force_from_curve(const PotentialCurve &curve,
                                     const Channel &channel);
std::vector<double> force_from_series(const std::vector<double> &distances,
                                      const std::vector<double> &values);

} // namespace cpvdw::potentials
