#pragma once

#include "sphspec/spectrum_core.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace sphspec {

/// Riesz order sigma >= 1.
struct RieszOrder {
  double sigma;

  explicit RieszOrder(double s);
};

/// A convex piecewise-linear function given by its breakpoints.
/// Evaluation interpolates linearly; ties at a breakpoint resolve to
/// the left segment.
class PiecewiseLinearConvex {
 public:
  explicit PiecewiseLinearConvex(std::vector<std::pair<double, double>> points);

  const std::vector<std::pair<double, double>>& breakpoints() const {
    return points_;
  }

  std::size_t segment_count() const { return points_.size() - 1; }
  double slope(std::size_t segment) const;
  double max_slope() const { return slope(segment_count() - 1); }
  double domain_end() const { return points_.back().first; }

  /// Linear interpolation; x outside [x_0, x_last] is a domain error.
  double eval(double x) const;

 private:
  std::vector<std::pair<double, double>> points_;
};

/// (|Omega|/sigma_d) sum_n (lambda - Lambda_n)_+^sigma k_d(n).
/// The sum has finite support and truncates at the largest n with
/// Lambda_n < lambda.
double riesz_rhs(const DomainSpec& domain, double lambda, RieszOrder order);

/// The sigma = 1 Riesz mean as a polyline with breakpoints at
/// (Lambda_N, (|Omega|/sigma_d) f(Lambda_N)).  All Lambda_N <= lambda_max
/// appear; one extra breakpoint is appended when needed so the polyline
/// covers [0, lambda_max].
PiecewiseLinearConvex build_F_piecewise(const DomainSpec& domain,
                                        double lambda_max);

/// Closed form of the sigma = 1 mean on S^2 on the segment
/// lambda in [Lambda_{N-1}, Lambda_N]:  alpha(2 N^2 lambda - N^2(N^2-1)),
/// with alpha = |Omega|/(8 pi).
double F_S2_segment(double alpha, int N, double lambda);

/// F(lambda) - L^cl_{1,d-1} |Omega| lambda^{(d+1)/2}.  Non-negative for
/// all lambda; strictly positive at lambda = Lambda_N when d >= 4.
double classical_gap(const DomainSpec& domain, double lambda);

/// The S^2 mean with the n = 0 term removed:
/// 2 alpha sum_{n>=1} (lambda - n(n+1))_+ (2n+1).  Satisfies
/// F'(lambda) <= alpha lambda^2.
double F_prime_S2(double alpha, double lambda);

/// Residual of the order-lifting identity
///   E_+^sigma = (1/c_sigma) int_0^inf (E-t)_+ t^{sigma-2} dt,
/// c_sigma = B(2, sigma-1), evaluated by adaptive quadrature.
double riesz_lift_residual(double E, double sigma);

}  // namespace sphspec
