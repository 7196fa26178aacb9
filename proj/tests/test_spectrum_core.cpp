#include "sphspec/spectrum_core.hpp"

#include <doctest.h>

#include <cmath>

using namespace sphspec;

namespace {

// Simpson rule on [0,1]; enough for the smooth radial profiles below.
double simpson01(const auto& f, int intervals) {
  const double h = 1.0 / intervals;
  double sum = f(0.0) + f(1.0);
  for (int i = 1; i < intervals; ++i) {
    sum += (i % 2 == 1 ? 4.0 : 2.0) * f(i * h);
  }
  return sum * h / 3.0;
}

// Quadrature oracle for the defining integral of the semiclassical
// constant, using only textbook unit-sphere surface areas for d <= 3.
double classical_constant_quadrature(double sigma, int d) {
  const double surface[] = {2.0, 2.0 * M_PI, 4.0 * M_PI};
  const double radial = simpson01(
      [&](double r) {
        return std::pow(1.0 - r * r, sigma) * std::pow(r, d - 1);
      },
      20000);
  return surface[d - 1] * radial / std::pow(2.0 * M_PI, d);
}

}  // namespace

TEST_CASE("multiplicity specializes to 2n+1 on S^2") {
  for (int n = 0; n <= 10; ++n) {
    CHECK(multiplicity(3, n) == 2 * n + 1);
  }
}

TEST_CASE("multiplicity of the constant eigenspace is 1") {
  for (int d = 3; d <= 10; ++d) {
    CHECK(multiplicity(d, 0) == 1);
  }
}

TEST_CASE("multiplicity matches the harmonic-polynomial dimension count") {
  CHECK(multiplicity(4, 2) == 9);
  for (int d = 3; d <= 10; ++d) {
    for (int n = 0; n <= 60; ++n) {
      const BigInt oracle =
          binomial(d + n - 1, n) - binomial(d + n - 3, n - 2);
      CHECK(multiplicity(d, n) == oracle);
    }
  }
}

TEST_CASE("multiplicity rejects bad arguments") {
  CHECK_THROWS_AS(multiplicity(2, 1), std::domain_error);
  CHECK_THROWS_AS(multiplicity(3, -1), std::domain_error);
}

TEST_CASE("partial multiplicity sum telescopes to k_{d+1}(N)") {
  CHECK(multiplicity_partial_sum(4, 3) == 30);
  for (int N = 1; N <= 10; ++N) {
    CHECK(multiplicity_partial_sum(3, N - 1) == BigInt(N) * N);
  }
  for (int d = 3; d <= 10; ++d) {
    CHECK(multiplicity_partial_sum(d, 0) == 1);
    for (int N = 0; N <= 50; ++N) {
      BigInt direct = 0;
      for (int n = 0; n <= N; ++n) direct += multiplicity(d, n);
      CHECK(multiplicity_partial_sum(d, N) == direct);
    }
  }
}

TEST_CASE("sphere areas") {
  CHECK(sphere_area(3) == doctest::Approx(4.0 * M_PI).epsilon(1e-14));
  CHECK(sphere_area(4) == doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-14));
  CHECK(sphere_area(6) == doctest::Approx(std::pow(M_PI, 3)).epsilon(1e-14));
  CHECK_THROWS_AS(sphere_area(2), std::domain_error);
}

TEST_CASE("ball volumes") {
  CHECK(ball_volume(1) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(ball_volume(2) == doctest::Approx(M_PI).epsilon(1e-14));
  CHECK(ball_volume(3) == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(ball_volume(0), std::domain_error);
}

TEST_CASE("semiclassical constant") {
  CHECK(std::abs(classical_constant(1.0, 2) * 8.0 * M_PI - 1.0) < 1e-14);
  // L^cl_{1,1} = Gamma(2) / ((4 pi)^{1/2} Gamma(5/2)) = 2 / (3 pi).
  CHECK(classical_constant(1.0, 1) ==
        doctest::Approx(2.0 / (3.0 * M_PI)).epsilon(1e-14));
  for (int d = 1; d <= 3; ++d) {
    CHECK(classical_constant(0.0, d) ==
          doctest::Approx(ball_volume(d) / std::pow(2.0 * M_PI, d))
              .epsilon(1e-12));
    for (double sigma : {0.0, 1.0, 2.0}) {
      CHECK(std::abs(classical_constant(sigma, d) -
                     classical_constant_quadrature(sigma, d)) < 1e-8);
    }
  }
  CHECK_THROWS_AS(classical_constant(-1.0, 2), std::domain_error);
}

TEST_CASE("closed form of f equals the brute-force ladder sum") {
  CHECK(f_oracle(3, 2) == 18);
  CHECK(f_oracle(3, 0) == 0);
  CHECK(f_closed(4, 1) == 3);
  for (int d = 3; d <= 10; ++d) {
    CHECK(f_closed(d, 0) == 0);
    for (int N = 0; N <= 50; ++N) {
      CHECK(f_closed(d, N) == f_oracle(d, N));
    }
  }
  for (int N = 1; N <= 6; ++N) {
    const BigInt lam = BigInt(N) * (N + 1);
    CHECK(f_closed(3, N) * 2 == lam * lam);
  }
}

TEST_CASE("appendix intermediate sums agree both ways") {
  for (int d : {3, 5, 8, 10}) {
    for (int N = 0; N <= 30; ++N) {
      const AppendixSums s = appendix_sums(d, N);
      CHECK(s.sigma1_closed == s.sigma1_direct);
      CHECK(s.sigma2_closed == s.sigma2_direct);
      CHECK(s.sigma1_closed - s.sigma2_closed == f_closed(d, N));
    }
  }
}

TEST_CASE("ladder and flattened spectrum") {
  const auto entries = ladder(3, 3);
  REQUIRE(entries.size() == 4);
  CHECK(entries[2].lambda == 6);
  CHECK(entries[2].mult == 5);

  const auto spectrum = ladder_spectrum(3, 9);
  REQUIRE(spectrum.size() == 9);
  CHECK(spectrum[0] == 0.0);
  CHECK(spectrum[1] == 2.0);
  CHECK(spectrum[3] == 2.0);
  CHECK(spectrum[4] == 6.0);
}

TEST_CASE("domain spec validation") {
  CHECK_THROWS_AS(DomainSpec(3, 0.0), std::domain_error);
  CHECK_THROWS_AS(DomainSpec(3, 5.0 * M_PI), std::domain_error);
  CHECK_NOTHROW(DomainSpec(3, 4.0 * M_PI));
}
