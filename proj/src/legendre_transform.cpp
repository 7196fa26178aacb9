#include "sphspec/legendre_transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sphspec {

double conjugate_piecewise(const PiecewiseLinearConvex& F, double p) {
  if (p < 0.0) {
    throw std::domain_error("conjugate parameter p must be >= 0");
  }
  if (p > F.max_slope() * (1.0 + 1e-12)) {
    throw std::domain_error(
        "p exceeds the largest constructed slope; rebuild the polyline "
        "with a larger lambda_max");
  }
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& [x, y] : F.breakpoints()) {
    best = std::max(best, p * x - y);
  }
  return best;
}

PiecewiseLinearConvex build_conjugate_polyline(const PiecewiseLinearConvex& F) {
  std::vector<std::pair<double, double>> points;
  points.emplace_back(0.0, conjugate_piecewise(F, 0.0));
  for (std::size_t s = 0; s < F.segment_count(); ++s) {
    const double p = F.slope(s);
    if (p > points.back().first) {
      points.emplace_back(p, conjugate_piecewise(F, p));
    }
  }
  if (points.size() < 2) {
    // Single-segment F: the conjugate is a point mass; extend flat.
    points.emplace_back(points.back().first + 1.0, points.back().second);
  }
  return PiecewiseLinearConvex(std::move(points));
}

double F_S2_conjugate(double alpha, double p) {
  if (!(alpha > 0.0) || alpha > 0.5) {
    throw std::domain_error("alpha must lie in (0, 1/2]");
  }
  if (p < 0.0) {
    throw std::domain_error("p must be >= 0");
  }
  if (p <= 2.0 * alpha) return 0.0;
  // Smallest N with p <= 2 alpha N^2; a junction p = 2 alpha N^2 lands on
  // the left segment.
  const int N = static_cast<int>(std::ceil(std::sqrt(p / (2.0 * alpha)) -
                                           1e-12));
  const double nn = static_cast<double>(N) * (N - 1);
  return nn * (p - alpha * nn);
}

double F_S2_conjugate_lower(double alpha, double p) {
  if (!(alpha > 0.0) || alpha > 0.5) {
    throw std::domain_error("alpha must lie in (0, 1/2]");
  }
  return p * (p - 2.0 * alpha) / (4.0 * alpha);
}

double eigen_sum_transform(std::span<const double> spectrum, double p) {
  if (p < 0.0) {
    throw std::domain_error("p must be >= 0");
  }
  if (!std::is_sorted(spectrum.begin(), spectrum.end())) {
    throw std::invalid_argument("spectrum must be sorted non-decreasing");
  }
  const std::size_t whole = static_cast<std::size_t>(std::floor(p));
  const double frac = p - static_cast<double>(whole);
  const std::size_t needed = whole + (frac > 0.0 ? 1 : 0);
  if (spectrum.size() < needed) {
    throw std::out_of_range("spectrum too short: index " +
                            std::to_string(needed) + " required, have " +
                            std::to_string(spectrum.size()));
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < whole; ++k) sum += spectrum[k];
  if (frac > 0.0) sum += frac * spectrum[whole];
  return sum;
}

}  // namespace sphspec
