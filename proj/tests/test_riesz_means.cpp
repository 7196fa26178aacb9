#include "sphspec/riesz_means.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace sphspec;

namespace {

DomainSpec whole_sphere(int d) { return DomainSpec(d, sphere_area(d)); }

}  // namespace

TEST_CASE("Riesz order validation") {
  CHECK_THROWS_AS(RieszOrder(0.5), std::domain_error);
  CHECK_NOTHROW(RieszOrder(1.0));
}

TEST_CASE("riesz_rhs reference values on S^2") {
  const DomainSpec sphere = whole_sphere(3);
  CHECK(riesz_rhs(sphere, 6.0, RieszOrder(1.0)) ==
        doctest::Approx(18.0).epsilon(1e-14));
  CHECK(riesz_rhs(sphere, 0.0, RieszOrder(1.0)) == 0.0);
  CHECK(riesz_rhs(sphere, 0.0, RieszOrder(2.0)) == 0.0);
  CHECK(riesz_rhs(sphere, 1.0, RieszOrder(1.0)) ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("piecewise build matches the stated breakpoints") {
  const auto F = build_F_piecewise(whole_sphere(3), 12.0);
  const std::vector<std::pair<double, double>> expected = {
      {0.0, 0.0}, {2.0, 2.0}, {6.0, 18.0}, {12.0, 72.0}};
  CHECK(F.breakpoints() == expected);

  const auto single = build_F_piecewise(whole_sphere(3), 1.0);
  REQUIRE(single.segment_count() == 1);
  CHECK(single.slope(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(single.breakpoints().front() == std::pair{0.0, 0.0});

  const auto F4 = build_F_piecewise(whole_sphere(4), 3.0);
  const std::vector<std::pair<double, double>> expected4 = {{0.0, 0.0},
                                                            {3.0, 3.0}};
  CHECK(F4.breakpoints() == expected4);
}

TEST_CASE("polyline evaluation agrees with the direct sum") {
  std::mt19937_64 rng(2026);
  for (int d = 3; d <= 8; ++d) {
    const DomainSpec domain(d, 0.37 * sphere_area(d));
    const double lambda_max = 40.0 + 5.0 * d;
    const auto F = build_F_piecewise(domain, lambda_max);
    std::uniform_real_distribution<double> u(0.0, lambda_max);
    for (int trial = 0; trial < 200; ++trial) {
      const double lambda = u(rng);
      const double direct = riesz_rhs(domain, lambda, RieszOrder(1.0));
      const double poly = F.eval(lambda);
      CHECK(std::abs(direct - poly) <= 1e-12 * std::max(1.0, std::abs(direct)));
    }
  }
}

TEST_CASE("riesz_rhs is non-decreasing and midpoint convex in lambda") {
  for (double sigma : {1.0, 1.5, 2.0}) {
    const DomainSpec domain(4, 3.0);
    double prev = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double lambda = 0.1 * i;
      const double value = riesz_rhs(domain, lambda, RieszOrder(sigma));
      CHECK(value >= prev - 1e-12 * std::max(1.0, value));
      prev = value;
      const double mid = riesz_rhs(domain, lambda + 0.05, RieszOrder(sigma));
      const double next = riesz_rhs(domain, lambda + 0.1, RieszOrder(sigma));
      CHECK(2.0 * mid <= value + next + 1e-10 * std::max(1.0, next));
    }
  }
}

TEST_CASE("S^2 closed-form segment") {
  CHECK(F_S2_segment(0.25, 1, 0.0) == 0.0);
  CHECK(F_S2_segment(0.5, 2, 4.0) == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(riesz_rhs(whole_sphere(3), 4.0, RieszOrder(1.0)) ==
        doctest::Approx(10.0).epsilon(1e-14));
  for (int N = 1; N <= 10; ++N) {
    const double lam = static_cast<double>(N) * (N + 1);
    CHECK(F_S2_segment(0.3, N, lam) ==
          doctest::Approx(0.3 * lam * lam).epsilon(1e-13));
  }
  CHECK_THROWS_AS(F_S2_segment(0.5, 2, 100.0), std::domain_error);
}

TEST_CASE("classical gap: tangent on S^2, strictly positive above") {
  for (double area : {M_PI, 4.0 * M_PI}) {
    const DomainSpec domain(3, area);
    CHECK(classical_gap(domain, 0.0) == 0.0);
    for (int N = 1; N <= 30; ++N) {
      const double lam = static_cast<double>(N) * (N + 1);
      const double scale = classical_constant(1.0, 2) * area * lam * lam;
      CHECK(std::abs(classical_gap(domain, lam)) <= 1e-12 * scale);
    }
  }
  for (int d = 4; d <= 8; ++d) {
    const DomainSpec domain(d, sphere_area(d));
    for (int N = 1; N <= 30; ++N) {
      const double lam = static_cast<double>(N) * (N + d - 2);
      CHECK(classical_gap(domain, lam) > 0.0);
    }
    for (int i = 0; i <= 500; ++i) {
      const double lam = 0.5 * i;
      const double scale = std::max(
          1.0, classical_constant(1.0, d - 1) * domain.area *
                   std::pow(lam, (d + 1) / 2.0));
      CHECK(classical_gap(domain, lam) >= -1e-12 * scale);
    }
  }
}

TEST_CASE("the n >= 1 tail stays below the parabola") {
  CHECK(F_prime_S2(0.5, 1.7) == 0.0);
  CHECK(F_prime_S2(0.5, 6.0) == doctest::Approx(12.0).epsilon(1e-14));
  for (double alpha : {0.125, 0.25, 0.5}) {
    for (int N = 1; N <= 15; ++N) {
      const double lam = static_cast<double>(N) * (N + 1);
      CHECK(F_prime_S2(alpha, lam) ==
            doctest::Approx(alpha * lam * lam - 2.0 * alpha * lam)
                .epsilon(1e-12));
    }
    for (int i = 0; i <= 2000; ++i) {
      const double lam = 0.1 * i;
      const double cap = alpha * lam * lam;
      CHECK(F_prime_S2(alpha, lam) <= cap + 1e-12 * std::max(1.0, cap));
    }
  }
  // Per-segment discriminant of the quadratic gap, exact in integers.
  for (long long N = 1; N <= 100; ++N) {
    CHECK(-4 * (N * N - 1) <= 0);
  }
}

TEST_CASE("order-lifting identity residual") {
  CHECK(riesz_lift_residual(-2.0, 2.0) == 0.0);
  CHECK(riesz_lift_residual(0.0, 2.0) == 0.0);
  CHECK(riesz_lift_residual(1.0, 2.0) < 1e-10);
  CHECK(riesz_lift_residual(3.0, 3.0) < 1e-8);
  for (double E : {0.5, 7.0, 42.0, 100.0}) {
    for (double sigma : {1.5, 2.0, 2.5, 3.0}) {
      CHECK(riesz_lift_residual(E, sigma) < 1e-8);
    }
  }
  CHECK_THROWS_AS(riesz_lift_residual(1.0, 1.0), std::domain_error);
}
