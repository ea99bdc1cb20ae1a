#include "cpvdw/green.hpp"
#include "cpvdw/errors.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace cpvdw::green {

namespace {

constexpr double pi = std::numbers::pi;

void check_positive(double v, const char *name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw DomainError(std::string(name) + " must be finite and > 0");
}

void check_xi(double xi) {
  if (!(xi >= 0.0))
    throw DomainError("imaginary frequency xi must be >= 0");
}

} // namespace

std::string_view to_string(PlateKind plate) {
  return plate == PlateKind::perfectly_conducting ? "conducting" : "permeable";
}

PlateKind parse_plate(std::string_view text) {
  if (text == "conducting")
    return PlateKind::perfectly_conducting;
  if (text == "permeable")
    return PlateKind::infinitely_permeable;
  throw ConfigError("unknown plate kind '" + std::string(text) +
                    "' (expected conducting|permeable)");
}

FreeGreenScalars fg(double x) {
  return {1.0 + x + x * x, 3.0 + 3.0 * x + x * x, x};
}

double h1(double x) {
  return (3.0 + x * (6.0 + x * (5.0 + x * (2.0 + x)))) * std::exp(-2.0 * x);
}

double h2(double x) {
  const double p = 1.0 + x;
  return p * p * std::exp(-2.0 * x);
}

double trace_gmm_gmm_free(double l, double xi, double c) {
  check_positive(l, "separation l");
  check_xi(xi);
  const double l3 = l * l * l;
  return 2.0 * h1(l * xi / c) / (16.0 * pi * pi * l3 * l3);
}

double trace_gme_gem_free(double l, double xi, double c) {
  check_positive(l, "separation l");
  check_xi(xi);
  return -xi * xi * h2(l * xi / c) / (8.0 * pi * pi * c * c * l * l * l * l);
}

double mirror_kernel(double u) {
  return std::exp(-u) * (1.0 + u * (1.0 + 0.5 * u));
}

double mirror_gmm_trace(double z, double xi, PlateKind plate, double c) {
  check_positive(z, "distance z");
  check_xi(xi);
  return plate_sign(plate) * mirror_kernel(2.0 * z * xi / c) /
         (8.0 * pi * z * z * z);
}

double mirror_gee_trace(double z, double xi, PlateKind plate, double c) {
  return -mirror_gmm_trace(z, xi, plate, c);
}

namespace {

using cplx = std::complex<double>;
using cvec = std::array<cplx, 3>;

cvec cross(const cvec &a, const cvec &b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

// Bilinear (not Hermitian) product: the trace of the dyad a b.
cplx dot(const cvec &a, const cvec &b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

cvec scale(cplx s, const cvec &a) { return {s * a[0], s * a[1], s * a[2]}; }

cvec add(const cvec &a, const cvec &b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

// Trace of the curl-curl of one plane-wave term of the reflected tensor,
// (q+ x e_p+)(e_p- x q-) - (q+ x e_s)(e_s x q-), at in-plane direction phi.
// The factors i from the left curl and -i from the right curl cancel.
double curl_curl_trace(double q, double b, double kappa, double phi) {
  const cvec ex{std::cos(phi), std::sin(phi), 0.0};
  const cvec ez{0.0, 0.0, 1.0};
  const cplx I{0.0, 1.0};
  const cvec q_plus = add(scale(q, ex), scale(I * b, ez));
  const cvec q_minus = add(scale(q, ex), scale(-I * b, ez));
  const cvec e_s = cross(ex, ez);
  const cvec e_p_plus = scale(1.0 / kappa, add(scale(-I * q, ez), scale(-b, ex)));
  const cvec e_p_minus = scale(1.0 / kappa, add(scale(-I * q, ez), scale(b, ex)));
  const cplx p_term = dot(cross(q_plus, e_p_plus), cross(e_p_minus, q_minus));
  const cplx s_term = dot(cross(q_plus, e_s), cross(e_s, q_minus));
  return (p_term - s_term).real();
}

} // namespace

double mirror_gmm_trace_via_q_integral(double z, double xi, PlateKind plate,
                                       double c,
                                       const quad::QuadratureSpec &spec) {
  check_positive(z, "distance z");
  check_positive(xi, "imaginary frequency xi");
  const double kappa = xi / c;
  // Dimensionless t = q z; the integrand carries exp(-2 b z), b >= kappa.
  // The azimuthal integral contributes 2 pi since the trace does not
  // depend on the in-plane direction; it is sampled at an arbitrary angle.
  constexpr double phi = 0.7;
  auto integrand = [&](double t) {
    const double q = t / z;
    const double b = std::sqrt(q * q + kappa * kappa);
    // Shift the exponent by the q = 0 value to keep the integrand O(1).
    return q / b * curl_curl_trace(q, b, kappa, phi) *
           std::exp(-2.0 * (b - kappa) * z) / z;
  };
  const auto res = quad::integrate_semiinf(integrand, spec);
  const double prefactor = plate_sign(plate) / (8.0 * pi * pi) * 2.0 * pi;
  return prefactor * res.value * std::exp(-2.0 * kappa * z);
}

} // namespace cpvdw::green
