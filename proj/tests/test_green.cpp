#include "cpvdw/errors.hpp"
#include "cpvdw/green.hpp"
#include "cpvdw/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace cpvdw;
using namespace cpvdw::green;

constexpr double pi = std::numbers::pi;

TEST_CASE("f and g") {
  CHECK(fg(0).coeff_iso == 1);
  CHECK(fg(0).coeff_rad == 3);
  CHECK(fg(1).coeff_iso == 3);
  CHECK(fg(1).coeff_rad == 7);
  CHECK(fg(2).coeff_iso == 7);
  CHECK(fg(2).coeff_rad == 13);
}

TEST_CASE("h1 expansion matches the f/g form") {
  // (3f^2 - 2fg + g^2)/2 at x = 0, 1, 2.5 is 3, 17, 119.5625 by hand.
  const double expected[] = {3.0, 17.0, 119.5625};
  const double xs[] = {0.0, 1.0, 2.5};
  for (int i = 0; i < 3; ++i) {
    const auto s = fg(xs[i]);
    const double half = 0.5 * (3 * s.coeff_iso * s.coeff_iso -
                               2 * s.coeff_iso * s.coeff_rad +
                               s.coeff_rad * s.coeff_rad);
    CHECK(half == doctest::Approx(expected[i]).epsilon(1e-15));
    CHECK(h1(xs[i]) * std::exp(2 * xs[i]) ==
          doctest::Approx(expected[i]).epsilon(1e-14));
  }
  CHECK(h2(1.0) == doctest::Approx(4.0 * std::exp(-2.0)).epsilon(1e-15));
}

TEST_CASE("polynomial identities at random x") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(0.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    const double x = d(rng);
    const auto s = fg(x);
    const double lhs = 0.5 * (3 * s.coeff_iso * s.coeff_iso -
                              2 * s.coeff_iso * s.coeff_rad +
                              s.coeff_rad * s.coeff_rad);
    const double rhs = 3 + 6 * x + 5 * x * x + 2 * x * x * x + x * x * x * x;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("free-space trace kernels") {
  CHECK(trace_gmm_gmm_free(1.0, 0.0, 1.0) ==
        doctest::Approx(3.0 / (8 * pi * pi)).epsilon(1e-15));
  CHECK(trace_gme_gem_free(1.0, 0.0, 1.0) == 0.0);
  CHECK_THROWS_AS(trace_gmm_gmm_free(0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(trace_gme_gem_free(-1.0, 1.0, 1.0), DomainError);

  // Brute-force 3x3 products with a random orientation of the separation.
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1, 1), pos(0.05, 5.0);
  for (int i = 0; i < 100; ++i) {
    oracle::Vec3 v{u(rng), u(rng), u(rng)};
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    const double l = pos(rng), xi = pos(rng), c = 1.3;
    const oracle::Vec3 lv{v[0] / n * l, v[1] / n * l, v[2] / n * l};
    CHECK(trace_gmm_gmm_free(l, xi, c) ==
          doctest::Approx(oracle::brute_trace_mm(lv, xi, c)).epsilon(1e-12));
    CHECK(trace_gme_gem_free(l, xi, c) ==
          doctest::Approx(oracle::brute_trace_me(lv, xi, c)).epsilon(1e-12));
    // Symmetric under exchanging the points.
    const oracle::Vec3 back{-lv[0], -lv[1], -lv[2]};
    CHECK(oracle::brute_trace_mm(back, xi, c) ==
          doctest::Approx(oracle::brute_trace_mm(lv, xi, c)).epsilon(1e-13));
  }
}

// G_mm0 = curl G0 curl' and G_me0 = -(xi/c) curl G0 at omega = i xi, by
// central differences of the f/g tensor.
TEST_CASE("double-curl relations by finite differences") {
  using oracle::Mat3;
  using oracle::Vec3;
  using oracle::operator*;
  const double xi = 0.7, c = 1.0, h = 1e-3;
  const Vec3 ra{0.3, -0.5, 1.1}, rb{-0.2, 0.4, 0.1};
  auto G = [&](const Vec3 &r, const Vec3 &rp) {
    return oracle::free_green({r[0] - rp[0], r[1] - rp[1], r[2] - rp[2]}, xi, c);
  };
  auto shifted = [&](Vec3 r, int a, double s) {
    r[a] += s;
    return r;
  };
  const int eps[3][3][3] = {{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
                            {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
                            {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};
  // (curl_r G)_ij = eps_iab d_a G_bj
  auto curl_left = [&](auto &&T, const Vec3 &r, const Vec3 &rp) {
    Mat3 out{};
    for (int a = 0; a < 3; ++a) {
      const Mat3 p = T(shifted(r, a, h), rp), m = T(shifted(r, a, -h), rp);
      for (int i = 0; i < 3; ++i)
        for (int b = 0; b < 3; ++b)
          for (int j = 0; j < 3; ++j)
            out[i][j] += eps[i][a][b] * (p[b][j] - m[b][j]) / (2 * h);
    }
    return out;
  };
  // (T x grad')_ij = eps_jkl d'_l T_ik
  auto curl_right = [&](auto &&T, const Vec3 &r, const Vec3 &rp) {
    Mat3 out{};
    for (int l = 0; l < 3; ++l) {
      const Mat3 p = T(r, shifted(rp, l, h)), m = T(r, shifted(rp, l, -h));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k)
            out[i][j] += eps[j][k][l] * (p[i][k] - m[i][k]) / (2 * h);
    }
    return out;
  };
  auto right_curl_G = [&](const Vec3 &r, const Vec3 &rp) { return curl_right(G, r, rp); };
  const Mat3 gmm = curl_left(right_curl_G, ra, rb);
  const Mat3 ref = oracle::free_green_mm({ra[0] - rb[0], ra[1] - rb[1], ra[2] - rb[2]}, xi, c);
  // Stencil error is O(h^2) relative to the largest entry.
  auto close = [](const Mat3 &a, const Mat3 &b) {
    double big = 0.0, diff = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        big = std::max(big, std::abs(b[i][j]));
        diff = std::max(diff, std::abs(a[i][j] - b[i][j]));
      }
    return diff <= 1e-4 * big;
  };
  CHECK(close(gmm, ref));

  const double k = xi / c;
  const Mat3 gme = (-k) * curl_left(G, ra, rb);
  const Mat3 gem_ba = (-k) * curl_right(G, rb, ra);
  const Vec3 l{ra[0] - rb[0], ra[1] - rb[1], ra[2] - rb[2]};
  const Mat3 me_ref = oracle::free_green_me(l, xi, c);
  CHECK(close(gme, me_ref));
  const double lnorm = std::sqrt(l[0] * l[0] + l[1] * l[1] + l[2] * l[2]);
  CHECK(oracle::trace(gme * gem_ba) ==
        doctest::Approx(trace_gme_gem_free(lnorm, xi, c)).epsilon(1e-4));
}

TEST_CASE("mirror kernels") {
  const auto cond = PlateKind::perfectly_conducting;
  const auto perm = PlateKind::infinitely_permeable;
  CHECK(mirror_gmm_trace(1.0, 0.0, cond, 1.0) ==
        doctest::Approx(1.0 / (8 * pi)).epsilon(1e-15));
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> d(0.01, 5.0);
  for (int i = 0; i < 50; ++i) {
    const double z = d(rng), xi = d(rng);
    CHECK(mirror_gmm_trace(z, xi, perm, 1.0) == -mirror_gmm_trace(z, xi, cond, 1.0));
    CHECK(mirror_gee_trace(z, xi, cond, 1.0) < 0.0);
    CHECK(mirror_gee_trace(z, xi, cond, 1.0) + mirror_gmm_trace(z, xi, cond, 1.0) == 0.0);
  }
  CHECK(mirror_gee_trace(1.0, 1e4, cond, 1.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(mirror_gmm_trace(0.0, 1.0, cond, 1.0), DomainError);
  CHECK_THROWS_AS(mirror_gmm_trace(1.0, -1.0, cond, 1.0), DomainError);
}

TEST_CASE("mirror kernel vs plane-wave q-integral") {
  for (auto plate : {PlateKind::perfectly_conducting, PlateKind::infinitely_permeable}) {
    CHECK(mirror_gmm_trace_via_q_integral(1.0, 1.0, plate, 1.0) ==
          doctest::Approx(mirror_gmm_trace(1.0, 1.0, plate, 1.0)).epsilon(1e-8));
    CHECK(mirror_gmm_trace_via_q_integral(1.0, 0.7, plate, 1.0) ==
          doctest::Approx(mirror_gmm_trace(1.0, 0.7, plate, 1.0)).epsilon(1e-8));
    for (double u = 0.01; u <= 10.0; u *= 1.5) {
      const double z = 2.5, c = 3.0, xi = u * c / z;
      CHECK(mirror_gmm_trace_via_q_integral(z, xi, plate, c) ==
            doctest::Approx(mirror_gmm_trace(z, xi, plate, c)).epsilon(1e-8));
    }
  }
  // Large z xi / c: bounded by the closed kernel envelope with 4 pi z^3.
  const double z = 1.0, xi = 30.0;
  const double u = 2 * z * xi;
  CHECK(std::abs(mirror_gmm_trace_via_q_integral(z, xi, PlateKind::perfectly_conducting, 1.0)) <
        std::exp(-u) * (1 + u + 0.5 * u * u) / (4 * pi * z * z * z));
  CHECK(mirror_gmm_trace_via_q_integral(1.0, 1.0, PlateKind::infinitely_permeable, 1.0) ==
        -mirror_gmm_trace_via_q_integral(1.0, 1.0, PlateKind::perfectly_conducting, 1.0));
  CHECK_THROWS_AS(mirror_gmm_trace_via_q_integral(1.0, 0.0,
                                                  PlateKind::perfectly_conducting, 1.0),
                  DomainError);
}
