#pragma once

#include "sphspec/riesz_means.hpp"

#include <span>

namespace sphspec {

/// Convex conjugate g^v(p) = sup_{x>=0} (px - g(x)) of a convex polyline.
/// Exact for piecewise-linear g: the sup is attained at a breakpoint.
/// p above the largest constructed slope means the polyline was truncated
/// too early and is a domain error.
double conjugate_piecewise(const PiecewiseLinearConvex& F, double p);

/// The full conjugate as a polyline: breakpoints at p = 0 and at the
/// segment slopes of F.
PiecewiseLinearConvex build_conjugate_polyline(const PiecewiseLinearConvex& F);

/// Closed form of the conjugate of the S^2 Riesz mean:
///   F^v(p) = N(N-1)(p - alpha N(N-1)),  p in [2 alpha (N-1)^2, 2 alpha N^2],
/// and 0 on [0, 2 alpha].
double F_S2_conjugate(double alpha, double p);

/// Parabola lower bound p(p - 2 alpha)/(4 alpha) for F_S2_conjugate.
double F_S2_conjugate_lower(double alpha, double p);

/// Conjugate of a Riesz mean of a concrete spectrum at parameter p:
///   (p - [p]) mu_{[p]+1} + sum_{k<=[p]} mu_k.
/// At integer p this is the sum of the first p eigenvalues.  The spectrum
/// must be sorted non-decreasing and long enough for the index used.
double eigen_sum_transform(std::span<const double> spectrum, double p);

}  // namespace sphspec
