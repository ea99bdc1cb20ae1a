#include "cpvdw/oracle.hpp"

#include <cmath>
#include <numbers>

namespace cpvdw::oracle {

Mat3 identity() {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    m[i][i] = 1.0;
  return m;
}

Mat3 dyad(const Vec3 &a, const Vec3 &b) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[i][j] = a[i] * b[j];
  return m;
}

Mat3 cross_matrix(const Vec3 &e) {
  Mat3 m{};
  m[0] = {0.0, -e[2], e[1]};
  m[1] = {e[2], 0.0, -e[0]};
  m[2] = {-e[1], e[0], 0.0};
  return m;
}

Mat3 operator*(const Mat3 &a, const Mat3 &b) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        m[i][j] += a[i][k] * b[k][j];
  return m;
}

Mat3 operator+(const Mat3 &a, const Mat3 &b) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[i][j] = a[i][j] + b[i][j];
  return m;
}

Mat3 operator*(double s, const Mat3 &a) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[i][j] = s * a[i][j];
  return m;
}

double trace(const Mat3 &a) { return a[0][0] + a[1][1] + a[2][2]; }

namespace {

struct Geometry {
  double l;
  Vec3 e;
};

Geometry split(const Vec3 &v) {
  const double l = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  return {l, {v[0] / l, v[1] / l, v[2] / l}};
}

Vec3 negate(const Vec3 &v) { return {-v[0], -v[1], -v[2]}; }

} // namespace

Mat3 free_green(const Vec3 &l_vec, double xi, double c) {
  const auto [l, e] = split(l_vec);
  const double x = l * xi / c;
  const double f = 1.0 + x + x * x;
  const double g = 3.0 + 3.0 * x + x * x;
  const double pre =
      c * c / (4.0 * std::numbers::pi * xi * xi * l * l * l) * std::exp(-x);
  return pre * (f * identity() + (-g) * dyad(e, e));
}

Mat3 free_green_mm(const Vec3 &l_vec, double xi, double c) {
  // Written out without the c^2/xi^2 factor so that xi = 0 stays finite.
  const auto [l, e] = split(l_vec);
  const double x = l * xi / c;
  const double f = 1.0 + x + x * x;
  const double g = 3.0 + 3.0 * x + x * x;
  const double pre = std::exp(-x) / (4.0 * std::numbers::pi * l * l * l);
  return pre * (f * identity() + (-g) * dyad(e, e));
}

Mat3 free_green_me(const Vec3 &l_vec, double xi, double c) {
  const auto [l, e] = split(l_vec);
  const double x = l * xi / c;
  const double pre =
      xi / (4.0 * std::numbers::pi * c * l * l) * (1.0 + x) * std::exp(-x);
  return pre * cross_matrix(e);
}

Mat3 free_green_em(const Vec3 &l_vec, double xi, double c) {
  return -1.0 * free_green_me(l_vec, xi, c);
}

double brute_trace_mm(const Vec3 &l_vec, double xi, double c) {
  return trace(free_green_mm(l_vec, xi, c) *
               free_green_mm(negate(l_vec), xi, c));
}

double brute_trace_me(const Vec3 &l_vec, double xi, double c) {
  return trace(free_green_me(l_vec, xi, c) *
               free_green_em(negate(l_vec), xi, c));
}

double poly_exp_integral(std::span<const double> coeffs, double rate) {
  double sum = 0.0;
  double factorial = 1.0;
  double power = rate;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (n > 0) {
      factorial *= static_cast<double>(n);
      power *= rate;
    }
    sum += coeffs[n] * factorial / power;
  }
  return sum;
}

} // namespace cpvdw::oracle
