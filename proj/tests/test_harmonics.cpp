#include "sphspec/harmonics.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace sphspec;

namespace {

// Gauss-Legendre x trapezoid quadrature over the sphere.
double sphere_quadrature(const auto& f, int n_theta = 64, int n_phi = 128) {
  // Gauss-Legendre nodes via Newton on P_n.
  std::vector<double> nodes(n_theta), weights(n_theta);
  for (int i = 0; i < n_theta; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n_theta + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n_theta; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n_theta * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = x;
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n_theta; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = n_theta * (x * p1 - p0) / (x * x - 1.0);
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  double total = 0.0;
  for (int i = 0; i < n_theta; ++i) {
    const double theta = std::acos(nodes[i]);
    double ring = 0.0;
    for (int j = 0; j < n_phi; ++j) {
      ring += f(SpherePoint(theta, 2.0 * M_PI * j / n_phi));
    }
    total += weights[i] * ring * 2.0 * M_PI / n_phi;
  }
  return total;
}

}  // namespace

TEST_CASE("Legendre polynomial basics") {
  for (int n : {0, 1, 2, 5, 10, 30}) {
    CHECK(legendre_poly(n, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(legendre_poly(2, 0.0) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK_THROWS_AS(legendre_poly(3, 1.5), std::domain_error);

  // Orthogonality of P_5 and P_3 by composite Simpson on [-1, 1].
  double simpson = 0.0;
  const int intervals = 2000;
  const double h = 2.0 / intervals;
  for (int i = 0; i <= intervals; ++i) {
    const double t = -1.0 + i * h;
    const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    simpson += w * legendre_poly(5, t) * legendre_poly(3, t);
  }
  simpson *= h / 3.0;
  CHECK(std::abs(simpson) < 1e-9);
}

TEST_CASE("Gegenbauer polynomials") {
  for (double lam : {0.5, 1.0, 2.5}) {
    CHECK(gegenbauer(lam, 0, 0.3) == 1.0);
  }
  CHECK(gegenbauer(0.5, 3, 0.5) == doctest::Approx(-0.4375).epsilon(1e-14));
  for (int n = 0; n <= 20; ++n) {
    for (double t = -1.0; t <= 1.0; t += 0.125) {
      CHECK(gegenbauer(0.5, n, t) ==
            doctest::Approx(legendre_poly(n, t)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(gegenbauer(0.0, 2, 0.5), std::domain_error);

  // Generating function (1 - 2rt + r^2)^{-lam} = sum_n C_n^lam(t) r^n.
  const double lam = 1.0, t = 0.3, r = 0.4;
  double series = 0.0;
  for (int n = 0; n <= 40; ++n) {
    series += gegenbauer(lam, n, t) * std::pow(r, n);
  }
  const double closed = std::pow(1.0 - 2.0 * r * t + r * r, -lam);
  CHECK(std::abs(series - closed) < 1e-10);
}

TEST_CASE("lowest harmonics") {
  const SpherePoint p(1.1, 2.3);
  CHECK(real_sph_harm(0, 1, p) ==
        doctest::Approx(1.0 / std::sqrt(4.0 * M_PI)).epsilon(1e-14));
  CHECK_THROWS_AS(real_sph_harm(2, 6, p), std::out_of_range);

  // Y_1 components are sqrt(3/4pi) {cos th, sin th cos ph, sin th sin ph}.
  const double c = std::sqrt(3.0 / (4.0 * M_PI));
  CHECK(real_sph_harm(1, 1, p) == doctest::Approx(c * std::cos(1.1)).epsilon(1e-13));
  const double y_cos = real_sph_harm(1, 2, p);
  const double y_sin = real_sph_harm(1, 3, p);
  CHECK(std::abs(std::abs(y_cos) -
                 c * std::sin(1.1) * std::abs(std::cos(2.3))) < 1e-13);
  CHECK(y_cos * y_cos + y_sin * y_sin ==
        doctest::Approx(c * c * std::sin(1.1) * std::sin(1.1)).epsilon(1e-12));
}

TEST_CASE("orthonormality up to n = 10") {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 1; k <= 2 * n + 1; ++k) {
      for (int n2 = n; n2 <= 10; ++n2) {
        for (int k2 = (n2 == n ? k : 1); k2 <= 2 * n2 + 1; ++k2) {
          const double gram = sphere_quadrature([&](const SpherePoint& s) {
            return real_sph_harm(n, k, s) * real_sph_harm(n2, k2, s);
          });
          const double expected = (n == n2 && k == k2) ? 1.0 : 0.0;
          CHECK(std::abs(gram - expected) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("gradient components match finite differences") {
  const double step = 1e-5;
  for (int n : {1, 3, 7, 12}) {
    for (int k = 1; k <= 2 * n + 1; k += std::max(1, n / 2)) {
      const SpherePoint s(0.9, 1.7);
      const TangentVector g = sph_harm_gradient(n, k, s);
      const double d_theta =
          (real_sph_harm(n, k, SpherePoint(s.theta + step, s.phi)) -
           real_sph_harm(n, k, SpherePoint(s.theta - step, s.phi))) /
          (2.0 * step);
      const double d_phi =
          (real_sph_harm(n, k, SpherePoint(s.theta, s.phi + step)) -
           real_sph_harm(n, k, SpherePoint(s.theta, s.phi - step))) /
          (2.0 * step) / std::sin(s.theta);
      const double scale = std::max(1.0, std::abs(g.v_theta));
      CHECK(std::abs(g.v_theta - d_theta) < 1e-6 * scale);
      CHECK(std::abs(g.v_phi - d_phi) < 1e-6 * std::max(1.0, std::abs(g.v_phi)));
    }
  }
  CHECK(sph_harm_gradient(0, 1, SpherePoint(0.4, 0.2)).norm_squared() == 0.0);
  CHECK_THROWS_AS(sph_harm_gradient(2, 2, SpherePoint(0.0, 0.0)),
                  std::domain_error);
}

TEST_CASE("perp rotation is an isometry") {
  for (int n : {1, 4, 9}) {
    for (int k = 1; k <= 2 * n + 1; ++k) {
      const TangentVector g = sph_harm_gradient(n, k, SpherePoint(2.0, 0.3));
      const TangentVector w = perp(g);
      CHECK(std::abs(w.norm_squared() - g.norm_squared()) <=
            1e-13 * std::max(1.0, g.norm_squared()));
    }
  }
}

TEST_CASE("pointwise identities") {
  const auto sample = random_sphere_points(100, 42);
  const auto r0 = identity_residuals_serial(0, sample);
  CHECK(r0.scalar < 1e-14);
  CHECK(r0.gradient < 1e-14);
  CHECK(r0.addition < 1e-14);

  const auto r10 = identity_residuals_serial(10, sample);
  CHECK(r10.scalar < 1e-10);
  CHECK(r10.gradient < 1e-8);
  CHECK(r10.addition < 1e-10);

  // North-pole and equator points: the scalar identity is frame-free.
  const std::vector<SpherePoint> special = {SpherePoint(0.0, 0.0),
                                            SpherePoint(M_PI / 2.0, 0.0),
                                            SpherePoint(M_PI / 2.0, 2.1)};
  const auto r1 = identity_residuals_serial(1, special);
  CHECK(r1.scalar < 1e-14);

  for (int n : {5, 20, 30}) {
    const auto r = identity_residuals_serial(n, sample);
    CHECK(r.scalar < 1e-10);
    CHECK(r.addition < 1e-10);
    if (n <= 20) CHECK(r.gradient < 1e-8);
  }
}

TEST_CASE("random points are deterministic and pole-clamped") {
  const auto a = random_sphere_points(50, 9);
  const auto b = random_sphere_points(50, 9);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].theta == b[i].theta);
    CHECK(a[i].phi == b[i].phi);
    CHECK(a[i].theta >= 1e-3);
    CHECK(a[i].theta <= M_PI - 1e-3);
  }
}
