#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace sphspec {

using BigInt = boost::multiprecision::cpp_int;

/// The sphere S^{d-1} embedded in R^d.  Only d >= 3 is supported.
struct SphereSpec {
  int d;

  explicit SphereSpec(int dim);
};

/// One eigenvalue level of the Laplace-Beltrami operator on S^{d-1}:
/// eigenvalue Lambda_n = n(n+d-2) with multiplicity k_d(n), both exact.
struct LadderEntry {
  int n;
  BigInt lambda;
  BigInt mult;
};

/// A domain on S^{d-1} described by its ambient dimension and surface
/// measure.  0 < area <= sphere_area(d).
struct DomainSpec {
  int d;
  double area;

  DomainSpec(int dim, double surface_area);
};

/// Exact binomial coefficient; 0 when k < 0 or k > n.
BigInt binomial(long n, long k);

/// Multiplicity k_d(n) of the n-th sphere eigenvalue, exact.
BigInt multiplicity(int d, int n);

/// Sum of k_d(n) over n = 0..N, which telescopes to k_{d+1}(N).
BigInt multiplicity_partial_sum(int d, int N);

/// Eigenvalue ladder up to level n_max.
std::vector<LadderEntry> ladder(int d, int n_max);

/// Flattened sphere spectrum: each eigenvalue repeated with its
/// multiplicity, at least `count` entries.
std::vector<double> ladder_spectrum(int d, std::size_t count);

/// Surface area sigma_d = 2 pi^{d/2} / Gamma(d/2) of S^{d-1}.
double sphere_area(int d);

/// Volume omega_d = pi^{d/2} / Gamma(d/2 + 1) of the unit ball in R^d.
double ball_volume(int d);

/// Semiclassical constant L^cl_{sigma,d} = Gamma(sigma+1) /
/// ((4 pi)^{d/2} Gamma(sigma + d/2 + 1)).
double classical_constant(double sigma, int d);

/// Closed form of f(Lambda_N) = sum_{n<N} k_d(n)(Lambda_N - Lambda_n):
///   (2N+d-1)(2N+d-3)/(d+1) * binom(N+d-2, d-1),   exact.
BigInt f_closed(int d, int N);

/// Brute-force evaluation of f(Lambda_N); the oracle for f_closed.
BigInt f_oracle(int d, int N);

/// The two intermediate sums behind f(Lambda_N), each computed both
/// from its closed form and by direct summation.
struct AppendixSums {
  BigInt sigma1_closed;  // N(2N+d-3) binom(N+d-2, d-1)
  BigInt sigma1_direct;  // Lambda_N * sum_{n<N} k_d(n)
  BigInt sigma2_closed;  // (d-1)/(d+1) binom(N+d-2, d-1)(N-1)(2N+d-3)
  BigInt sigma2_direct;  // sum_{n<N} k_d(n) Lambda_n
};

AppendixSums appendix_sums(int d, int N);

}  // namespace sphspec
