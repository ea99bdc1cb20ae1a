#include "cpvdw/curve.hpp"
#include "cpvdw/errors.hpp"

#include <cmath>
#include <exception>
#include <functional>

namespace cpvdw::potentials {

std::string_view to_string(Geometry g) {
  return g == Geometry::mirror ? "mirror" : "free_pair";
}

std::string_view to_string(Method m) {
  return m == Method::quadrature ? "quadrature" : "closed_form";
}

const std::vector<double> &PotentialCurve::series(const Channel &channel) const {
  for (std::size_t i = 0; i < channels.size(); ++i)
    if (channels[i] == channel)
      return values[i];
  throw DomainError("channel " + name(channel) + " not present in curve");
}

std::vector<double> make_grid(double min, double max, int points,
                              bool geometric) {
  if (!(min > 0.0) || !std::isfinite(min))
    throw ConfigError("grid minimum must be finite and > 0");
  if (!(max > min) || !std::isfinite(max))
    throw ConfigError("grid maximum must be finite and > minimum");
  if (points < 2)
    throw ConfigError("grid needs at least 2 points");
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double n = points - 1;
  for (int i = 0; i < points; ++i) {
    const double t = i / n;
    grid[static_cast<std::size_t>(i)] =
        geometric ? min * std::pow(max / min, t) : min + (max - min) * t;
  }
  grid.front() = min;
  grid.back() = max;
  return grid;
}

void check_grid(const std::vector<double> &d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!(d[i] > 0.0) || !std::isfinite(d[i]))
      throw DomainError("distances must be finite and > 0");
    if (i > 0 && !(d[i] > d[i - 1]))
      throw DomainError("distances must be strictly increasing");
  }
}

namespace {

// Runs body(i) for every grid index; parallel and serial differ only in
// scheduling, each index writes its own slot.
void for_each_point(std::size_t n, Execution execution,
                    const std::function<void(std::size_t)> &body) {
  std::vector<std::exception_ptr> failures(n);
  if (execution == Execution::parallel) {
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        failures[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        body(i);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  }
  for (auto &f : failures)
    if (f)
      std::rethrow_exception(f);
}

PotentialCurve skeleton(Geometry geometry, const std::vector<double> &d,
                        std::size_t channel_count, const EvalContext &ctx) {
  check_grid(d);
  PotentialCurve curve;
  curve.geometry = geometry;
  curve.distances = d;
  curve.values.assign(channel_count, std::vector<double>(d.size(), 0.0));
  curve.total.assign(d.size(), 0.0);
  curve.unit_system = ctx.system;
  curve.tolerances = ctx.quadrature;
  return curve;
}

void require_purely_diamagnetic(const AtomModel &atom) {
  if (atom.has_electric() || atom.has_paramagnetic())
    throw UnsupportedError("closed form exists only for purely diamagnetic "
                           "atoms; '" + atom.label() + "' is not");
}

} // namespace

PotentialCurve mirror_curve(const AtomModel &atom,
                            const std::vector<double> &distances,
                            PlateKind plate, const EvalContext &ctx, Execution execution) {
  auto curve = skeleton(Geometry::mirror, distances, 3, ctx);
  curve.plate = plate;
  curve.channels.assign(mirror_channels().begin(), mirror_channels().end());
  curve.atom_labels = {atom.label()};
  for_each_point(distances.size(), execution, [&](std::size_t i) {
    const auto v = cp_mirror(atom, distances[i], plate, ctx);
    curve.values[0][i] = v.electric;
    curve.values[1][i] = v.paramagnetic;
    curve.values[2][i] = v.diamagnetic;
    curve.total[i] = v.total;
  });
  return curve;
}

PotentialCurve pair_curve(const AtomModel &atom_a, const AtomModel &atom_b,
                          const std::vector<double> &distances,
                          const EvalContext &ctx,
                          Execution execution) {
  auto curve = skeleton(Geometry::free_pair, distances, 9, ctx);
  curve.channels.assign(pair_channels().begin(), pair_channels().end());
  curve.atom_labels = {atom_a.label(), atom_b.label()};
  for_each_point(distances.size(), execution, [&](std::size_t i) {
    const auto v = vdw_pair(atom_a, atom_b, distances[i], ctx);
    for (std::size_t c = 0; c < 9; ++c)
      curve.values[c][i] = v.channels[c];
    curve.total[i] = v.total;
  });
  return curve;
}

PotentialCurve mirror_curve_closed_form(const AtomModel &atom,
                                        const std::vector<double> &distances,
                                        PlateKind plate,
                                        const EvalContext &ctx) {
  require_purely_diamagnetic(atom);
  auto curve = skeleton(Geometry::mirror, distances, 3, ctx);
  curve.plate = plate;
  curve.method = Method::closed_form;
  curve.channels.assign(mirror_channels().begin(), mirror_channels().end());
  curve.atom_labels = {atom.label()};
  for (std::size_t i = 0; i < distances.size(); ++i) {
    curve.values[2][i] = cp_mirror_diamagnetic_closed(
        atom.beta_d(), distances[i], plate, ctx.constants);
    curve.total[i] = curve.values[2][i];
  }
  return curve;
}

PotentialCurve pair_curve_closed_form(const AtomModel &atom_a,
                                      const AtomModel &atom_b,
                                      const std::vector<double> &distances,
                                      const EvalContext &ctx) {
  require_purely_diamagnetic(atom_a);
  require_purely_diamagnetic(atom_b);
  auto curve = skeleton(Geometry::free_pair, distances, 9, ctx);
  curve.method = Method::closed_form;
  curve.channels.assign(pair_channels().begin(), pair_channels().end());
  curve.atom_labels = {atom_a.label(), atom_b.label()};
  const auto dd = pair_index(Response::diamagnetic, Response::diamagnetic);
  for (std::size_t i = 0; i < distances.size(); ++i) {
    curve.values[dd][i] = vdw_dd_closed(atom_a.beta_d(), atom_b.beta_d(),
                                        distances[i], ctx.constants);
    curve.total[i] = curve.values[dd][i];
  }
  return curve;
}

std::vector<double> force_from_series(const std::vector<double> &r,
                                      const std::vector<double> &u) {
  if (r.size() < 3)
    throw DomainError("force needs at least 3 grid points");
  if (u.size() != r.size())
    throw DomainError("distance and value lists differ in length");
  check_grid(r);
  const std::size_t n = r.size();
  std::vector<double> force(n);
  // Derivative at r[j] from the quadratic through points i0, i1, i2.
  auto derivative = [&](std::size_t j, std::size_t i0, std::size_t i1,
                        std::size_t i2) {
    const double x = r[j];
    const double a = r[i0], b = r[i1], c = r[i2];
    const double w0 = (2 * x - b - c) / ((a - b) * (a - c));
    const double w1 = (2 * x - a - c) / ((b - a) * (b - c));
    const double w2 = (2 * x - a - b) / ((c - a) * (c - b));
    return w0 * u[i0] + w1 * u[i1] + w2 * u[i2];
  };
  force[0] = -derivative(0, 0, 1, 2);
  for (std::size_t i = 1; i + 1 < n; ++i)
    force[i] = -derivative(i, i - 1, i, i + 1);
  force[n - 1] = -derivative(n - 1, n - 3, n - 2, n - 1);
  return force;
}

std::vector<double> force_from_curve(const PotentialCurve &curve) {
  return force_from_series(curve.distances, curve.total);
}

std::vector<double> force_from_curve(const PotentialCurve &curve,
                                     const Channel &channel) {
  return force_from_series(curve.distances, curve.series(channel));
}

} // namespace cpvdw::potentials
