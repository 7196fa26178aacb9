#include "sphspec/riesz_means.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sphspec {

namespace {

// Kahan compensated accumulator; the d = 3 tangency tests sit at 1e-12
// and plain summation loses a digit or two there.
class CompensatedSum {
 public:
  void add(double term) {
    const double y = term - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace

RieszOrder::RieszOrder(double s) : sigma(s) {
  if (!(sigma >= 1.0)) {
    throw std::domain_error("Riesz order must satisfy sigma >= 1");
  }
}

PiecewiseLinearConvex::PiecewiseLinearConvex(
    std::vector<std::pair<double, double>> points)
    : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw std::invalid_argument("polyline needs at least two breakpoints");
  }
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i].first > points_[i - 1].first)) {
      throw std::invalid_argument("breakpoint abscissae must be increasing");
    }
  }
  for (std::size_t i = 2; i < points_.size(); ++i) {
    if (slope(i - 1) < slope(i - 2) - 1e-12 * std::abs(slope(i - 1))) {
      throw std::invalid_argument("slopes must be non-decreasing");
    }
  }
}

double PiecewiseLinearConvex::slope(std::size_t segment) const {
  const auto& [x0, y0] = points_[segment];
  const auto& [x1, y1] = points_[segment + 1];
  return (y1 - y0) / (x1 - x0);
}

double PiecewiseLinearConvex::eval(double x) const {
  if (x < points_.front().first || x > points_.back().first) {
    throw std::domain_error("evaluation point outside polyline domain");
  }
  // First breakpoint with abscissa >= x; ties resolve to the left segment.
  auto it = std::lower_bound(
      points_.begin(), points_.end(), x,
      [](const std::pair<double, double>& bp, double v) { return bp.first < v; });
  if (it == points_.begin()) return it->second;
  const auto& [x1, y1] = *it;
  const auto& [x0, y0] = *(it - 1);
  return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

double riesz_rhs(const DomainSpec& domain, double lambda, RieszOrder order) {
  if (lambda < 0.0) {
    throw std::domain_error("lambda must be >= 0");
  }
  const double ratio = domain.area / sphere_area(domain.d);
  CompensatedSum sum;
  for (int n = 0;; ++n) {
    const double level = static_cast<double>(n) * (n + domain.d - 2);
    if (level >= lambda) break;
    const double mult = static_cast<double>(multiplicity(domain.d, n));
    sum.add(std::pow(lambda - level, order.sigma) * mult);
  }
  return ratio * sum.value();
}

PiecewiseLinearConvex build_F_piecewise(const DomainSpec& domain,
                                        double lambda_max) {
  if (!(lambda_max > 0.0)) {
    throw std::domain_error("lambda_max must be positive");
  }
  const double ratio = domain.area / sphere_area(domain.d);
  std::vector<std::pair<double, double>> points;
  int N = 0;
  for (;; ++N) {
    const double level = static_cast<double>(N) * (N + domain.d - 2);
    points.emplace_back(level,
                        ratio * static_cast<double>(f_closed(domain.d, N)));
    if (level >= lambda_max) break;
  }
  return PiecewiseLinearConvex(std::move(points));
}

double F_S2_segment(double alpha, int N, double lambda) {
  if (N < 1) {
    throw std::domain_error("segment index N must be >= 1");
  }
  const double lo = static_cast<double>(N - 1) * N;
  const double hi = static_cast<double>(N) * (N + 1);
  if (lambda < lo || lambda > hi) {
    throw std::domain_error("lambda outside [Lambda_{N-1}, Lambda_N]");
  }
  const double n2 = static_cast<double>(N) * N;
  return alpha * (2.0 * n2 * lambda - n2 * (n2 - 1.0));
}

double classical_gap(const DomainSpec& domain, double lambda) {
  const double F = riesz_rhs(domain, lambda, RieszOrder(1.0));
  const double parabola = classical_constant(1.0, domain.d - 1) * domain.area *
                          std::pow(lambda, (domain.d + 1) / 2.0);
  return F - parabola;
}

double F_prime_S2(double alpha, double lambda) {
  if (lambda < 0.0) {
    throw std::domain_error("lambda must be >= 0");
  }
  if (!(alpha > 0.0) || alpha > 0.5) {
    throw std::domain_error("alpha must lie in (0, 1/2]");
  }
  CompensatedSum sum;
  for (int n = 1;; ++n) {
    const double level = static_cast<double>(n) * (n + 1);
    if (level >= lambda) break;
    sum.add((lambda - level) * (2.0 * n + 1.0));
  }
  return 2.0 * alpha * sum.value();
}

double riesz_lift_residual(double E, double sigma) {
  if (!(sigma > 1.0)) {
    throw std::domain_error("lifting identity requires sigma > 1");
  }
  const double direct = E > 0.0 ? std::pow(E, sigma) : 0.0;
  if (E <= 0.0) return direct;

  // c_sigma = B(2, sigma - 1) = Gamma(sigma-1) / Gamma(sigma+1).
  const double c_sigma =
      std::exp(std::lgamma(sigma - 1.0) - std::lgamma(sigma + 1.0));
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double integral = integrator.integrate(
      [&](double t) { return (E - t) * std::pow(t, sigma - 2.0); }, 0.0, E,
      1e-13);
  return std::abs(direct - integral / c_sigma);
}

}  // namespace sphspec
