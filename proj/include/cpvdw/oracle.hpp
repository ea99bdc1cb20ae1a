#pragma once

// Brute-force references used by the test suite and the CLI self-test.
// Nothing here is used by the production evaluation paths.

#include <array>
#include <span>

namespace cpvdw::oracle {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 identity();
Mat3 dyad(const Vec3 &a, const Vec3 &b);
//! Matrix of v -> e x v.
Mat3 cross_matrix(const Vec3 &e);
Mat3 operator*(const Mat3 &a, const Mat3 &b);
Mat3 operator+(const Mat3 &a, const Mat3 &b);
Mat3 operator*(double s, const Mat3 &a);
double trace(const Mat3 &a);

//! Free-space Green tensor G0(rA, rB, i xi) for separation vector
//! l_vec = rA - rB, assembled from f, g and the e_l e_l dyad.
Mat3 free_green(const Vec3 &l_vec, double xi, double c);
//! G_mm0 = G_ee0 = (xi/c)^2 G0.
Mat3 free_green_mm(const Vec3 &l_vec, double xi, double c);
//! G_me0(rA, rB) = xi/(4 pi c l^2) (1 + l xi/c) exp(-l xi/c) e_l x I.
Mat3 free_green_me(const Vec3 &l_vec, double xi, double c);
//! G_em0(rA, rB) = -G_me0(rA, rB).
Mat3 free_green_em(const Vec3 &l_vec, double xi, double c);

//! Tr[G_mm0(rA,rB) G_mm0(rB,rA)] by explicit 3x3 products.
double brute_trace_mm(const Vec3 &l_vec, double xi, double c);
//! Tr[G_me0(rA,rB) G_em0(rB,rA)] by explicit 3x3 products.
double brute_trace_me(const Vec3 &l_vec, double xi, double c);

//! Exact value of int_0^inf (sum_n coeffs[n] x^n) exp(-rate x) dx
//! = sum_n coeffs[n] n! / rate^(n+1).
double poly_exp_integral(std::span<const double> coeffs, double rate);

} // namespace cpvdw::oracle
