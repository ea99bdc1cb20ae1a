#pragma once

#include "cpvdw/quad.hpp"

#include <string_view>

namespace cpvdw::green {

enum class PlateKind { perfectly_conducting, infinitely_permeable };

std::string_view to_string(PlateKind plate);
//! Accepts "conducting" or "permeable".
PlateKind parse_plate(std::string_view text);

//! +1 for a perfectly conducting plate, -1 for an infinitely permeable one.
inline double plate_sign(PlateKind plate) {
  return plate == PlateKind::perfectly_conducting ? 1.0 : -1.0;
}

//! Coefficients of the free-space Green tensor at imaginary frequency,
//! G0 = c^2 / (4 pi xi^2 l^3) [f(x) I - g(x) e_l e_l] exp(-x), x = l xi / c.
struct FreeGreenScalars {
  double coeff_iso; //!< f(x)
  double coeff_rad; //!< g(x)
  double x;
};

FreeGreenScalars fg(double x);

//! (3 f^2 - 2 f g + g^2) exp(-2x) / 2 = (3 + 6x + 5x^2 + 2x^3 + x^4) exp(-2x).
double h1(double x);
//! (1 + x)^2 exp(-2x).
double h2(double x);

// Two-point free-space trace kernels. Both depend on the separation l only,
// so they are symmetric in the two points.

//! Tr[G_mm0(rA,rB) . G_mm0(rB,rA)] = 2 h1(x) / (16 pi^2 l^6); equals the
//! G_ee0 product since G_ee0 = G_mm0 = (xi/c)^2 G0 in free space.
double trace_gmm_gmm_free(double l, double xi, double c);

//! Tr[G_me0(rA,rB) . G_em0(rB,rA)] = -xi^2 h2(x) / (8 pi^2 c^2 l^4).
double trace_gme_gem_free(double l, double xi, double c);

// Scattering part at coincident points z above a perfect mirror.

//! Tr G_mm1(z,z,i xi) = +-exp(-2 z xi/c)(1 + 2 z xi/c + 2 z^2 xi^2/c^2)/(8 pi z^3),
//! upper sign for a perfectly conducting plate.
double mirror_gmm_trace(double z, double xi, PlateKind plate, double c);

//! Tr G_ee1(z,z,i xi) = -Tr G_mm1(z,z,i xi) for the perfect mirror.
double mirror_gee_trace(double z, double xi, PlateKind plate, double c);

//! Dimensionless mirror kernel e^{-u} (1 + u + u^2/2), u = 2 z xi / c, so
//! that Tr G_mm1 = +- mirror_kernel(u) / (8 pi z^3).
double mirror_kernel(double u);

//! Independent route to mirror_gmm_trace: applies the double curl to the
//! plane-wave expansion of the reflected Green tensor with complex
//! polarisation vectors, sets both points to z, and integrates the
//! azimuthally symmetric trace over the in-plane wave number numerically.
//! Requires xi > 0. Throws NumericalError if the q-integral fails.
double mirror_gmm_trace_via_q_integral(double z, double xi, PlateKind plate,
                                       double c,
                                       const quad::QuadratureSpec &spec = {
                                           1e-12, 1e-300, 0.5, 4000});

} // namespace cpvdw::green
