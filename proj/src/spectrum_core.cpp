#include "sphspec/spectrum_core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sphspec {

namespace {

void require_dimension(int d) {
  if (d < 3) {
    throw std::domain_error("ambient dimension d must be >= 3, got " +
                            std::to_string(d));
  }
}

void require_level(int n) {
  if (n < 0) {
    throw std::domain_error("level index must be >= 0, got " +
                            std::to_string(n));
  }
}

BigInt exact_divide(const BigInt& numerator, long denominator) {
  BigInt q = numerator / denominator;
  if (q * denominator != numerator) {
    throw std::logic_error("expected exact division failed");
  }
  return q;
}

BigInt level_eigenvalue(int d, int n) {
  return BigInt(n) * (n + d - 2);
}

}  // namespace

SphereSpec::SphereSpec(int dim) : d(dim) { require_dimension(d); }

DomainSpec::DomainSpec(int dim, double surface_area) : d(dim), area(surface_area) {
  require_dimension(d);
  if (!(area > 0.0) || area > sphere_area(d) * (1.0 + 1e-12)) {
    throw std::domain_error("domain area must lie in (0, sigma_d]");
  }
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt multiplicity(int d, int n) {
  require_dimension(d);
  require_level(n);
  BigInt numerator = binomial(n + d - 3, d - 3) * (2 * n + d - 2);
  return exact_divide(numerator, d - 2);
}

BigInt multiplicity_partial_sum(int d, int N) {
  require_dimension(d);
  require_level(N);
  return multiplicity(d + 1, N);
}

std::vector<LadderEntry> ladder(int d, int n_max) {
  require_dimension(d);
  require_level(n_max);
  std::vector<LadderEntry> entries;
  entries.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    entries.push_back({n, level_eigenvalue(d, n), multiplicity(d, n)});
  }
  return entries;
}

std::vector<double> ladder_spectrum(int d, std::size_t count) {
  require_dimension(d);
  std::vector<double> spectrum;
  spectrum.reserve(count);
  for (int n = 0; spectrum.size() < count; ++n) {
    const double lambda = static_cast<double>(n) * (n + d - 2);
    const BigInt mult = multiplicity(d, n);
    for (BigInt k = 0; k < mult && spectrum.size() < count; ++k) {
      spectrum.push_back(lambda);
    }
  }
  return spectrum;
}

double sphere_area(int d) {
  require_dimension(d);
  return 2.0 * std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0);
}

double ball_volume(int d) {
  if (d < 1) {
    throw std::domain_error("ball volume requires d >= 1");
  }
  return std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

double classical_constant(double sigma, int d) {
  if (sigma < 0.0 || d < 1) {
    throw std::domain_error("classical constant requires sigma >= 0, d >= 1");
  }
  return std::exp(std::lgamma(sigma + 1.0) - (d / 2.0) * std::log(4.0 * M_PI) -
                  std::lgamma(sigma + d / 2.0 + 1.0));
}

BigInt f_closed(int d, int N) {
  require_dimension(d);
  require_level(N);
  BigInt numerator =
      BigInt(2 * N + d - 1) * (2 * N + d - 3) * binomial(N + d - 2, d - 1);
  return exact_divide(numerator, d + 1);
}

BigInt f_oracle(int d, int N) {
  require_dimension(d);
  require_level(N);
  const BigInt lambda_N = level_eigenvalue(d, N);
  BigInt sum = 0;
  for (int n = 0; n < N; ++n) {
    sum += multiplicity(d, n) * (lambda_N - level_eigenvalue(d, n));
  }
  return sum;
}

AppendixSums appendix_sums(int d, int N) {
  require_dimension(d);
  require_level(N);
  AppendixSums sums;
  const BigInt lambda_N = level_eigenvalue(d, N);
  sums.sigma1_closed = BigInt(N) * (2 * N + d - 3) * binomial(N + d - 2, d - 1);
  sums.sigma2_closed = exact_divide(
      BigInt(d - 1) * binomial(N + d - 2, d - 1) * (N - 1) * (2 * N + d - 3),
      d + 1);
  sums.sigma1_direct = 0;
  sums.sigma2_direct = 0;
  for (int n = 0; n < N; ++n) {
    const BigInt mult = multiplicity(d, n);
    sums.sigma1_direct += lambda_N * mult;
    sums.sigma2_direct += mult * level_eigenvalue(d, n);
  }
  return sums;
}

}  // namespace sphspec
