#include "sphspec/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace sphspec {

namespace {

constexpr double kPoleMargin = 1e-3;

// Fully normalized associated Legendre function and its colatitude
// derivative: Pbar_n^m = sqrt((2n+1)/(4 pi) (n-m)!/(n+m)!) P_n^m(cos th),
// so that sum-over-m identities carry no extra factors.  Normalized
// recurrences stay bounded through n ~ 60.
struct PBar {
  double value;
  double dtheta;
};

PBar normalized_assoc_legendre(int n, int m, double ct, double st) {
  double pmm = std::sqrt(1.0 / (4.0 * M_PI));
  for (int j = 1; j <= m; ++j) {
    pmm *= -std::sqrt((2.0 * j + 1.0) / (2.0 * j)) * st;
  }
  double p_prev = 0.0;   // Pbar_{nn-1}^m
  double p_curr = pmm;   // Pbar_{nn}^m starting at nn = m
  for (int nn = m + 1; nn <= n; ++nn) {
    double p_next;
    if (nn == m + 1) {
      p_next = std::sqrt(2.0 * m + 3.0) * ct * p_curr;
    } else {
      const double a =
          std::sqrt((4.0 * nn * nn - 1.0) /
                    (static_cast<double>(nn) * nn - static_cast<double>(m) * m));
      const double b = std::sqrt(
          ((static_cast<double>(nn - 1) * (nn - 1) - static_cast<double>(m) * m)) /
          (4.0 * static_cast<double>(nn - 1) * (nn - 1) - 1.0));
      p_next = a * (ct * p_curr - b * p_prev);
    }
    p_prev = p_curr;
    p_curr = p_next;
  }

  PBar result;
  result.value = p_curr;
  if (st < 1e-14) {
    result.dtheta = 0.0;  // only valid (and used) for m = 0
  } else {
    const double c =
        n > m ? std::sqrt((2.0 * n + 1.0) *
                          (static_cast<double>(n) * n - static_cast<double>(m) * m) /
                          (2.0 * n - 1.0))
              : 0.0;
    result.dtheta = (n * ct * p_curr - c * p_prev) / st;
  }
  return result;
}

struct ModeIndex {
  int m;
  bool cosine;  // false: sine mode (m >= 1 only)
};

ModeIndex decode(int n, int k) {
  if (k < 1 || k > 2 * n + 1) {
    throw std::out_of_range("harmonic index k must lie in [1, 2n+1]");
  }
  if (k == 1) return {0, true};
  if (k % 2 == 0) return {k / 2, true};
  return {(k - 1) / 2, false};
}

}  // namespace

SpherePoint::SpherePoint(double colatitude, double longitude)
    : theta(colatitude), phi(longitude) {
  if (!(theta >= 0.0) || !(theta <= M_PI)) {
    throw std::domain_error("colatitude must lie in [0, pi]");
  }
  if (!(phi >= 0.0) || !(phi < 2.0 * M_PI)) {
    throw std::domain_error("longitude must lie in [0, 2 pi)");
  }
  if (theta == 0.0 || theta == M_PI) phi = 0.0;
}

double legendre_poly(int n, double t) {
  if (n < 0) throw std::domain_error("degree must be >= 0");
  if (std::abs(t) > 1.0) throw std::domain_error("|t| must be <= 1");
  double p_prev = 1.0;
  if (n == 0) return p_prev;
  double p_curr = t;
  for (int k = 2; k <= n; ++k) {
    const double p_next = ((2.0 * k - 1.0) * t * p_curr - (k - 1.0) * p_prev) / k;
    p_prev = p_curr;
    p_curr = p_next;
  }
  return p_curr;
}

double gegenbauer(double lam, int n, double t) {
  if (!(lam > 0.0)) throw std::domain_error("Gegenbauer parameter must be > 0");
  if (n < 0) throw std::domain_error("degree must be >= 0");
  if (std::abs(t) > 1.0) throw std::domain_error("|t| must be <= 1");
  double c_prev = 1.0;
  if (n == 0) return c_prev;
  double c_curr = 2.0 * lam * t;
  for (int k = 2; k <= n; ++k) {
    const double c_next =
        (2.0 * (k + lam - 1.0) * t * c_curr - (k + 2.0 * lam - 2.0) * c_prev) / k;
    c_prev = c_curr;
    c_curr = c_next;
  }
  return c_curr;
}

double real_sph_harm(int n, int k, const SpherePoint& point) {
  if (n < 0) throw std::domain_error("degree must be >= 0");
  const ModeIndex mode = decode(n, k);
  const double ct = std::cos(point.theta);
  const double st = std::sin(point.theta);
  const double p = normalized_assoc_legendre(n, mode.m, ct, st).value;
  if (mode.m == 0) return p;
  const double angle = mode.m * point.phi;
  return p * std::sqrt(2.0) * (mode.cosine ? std::cos(angle) : std::sin(angle));
}

TangentVector sph_harm_gradient(int n, int k, const SpherePoint& point) {
  if (n < 0) throw std::domain_error("degree must be >= 0");
  const ModeIndex mode = decode(n, k);
  const double ct = std::cos(point.theta);
  const double st = std::sin(point.theta);
  if (st < 1e-14 && mode.m >= 1) {
    throw std::domain_error("gradient frame is singular at the poles for m >= 1");
  }
  const PBar p = normalized_assoc_legendre(n, mode.m, ct, st);
  if (mode.m == 0) return {p.dtheta, 0.0};
  const double angle = mode.m * point.phi;
  const double azim = mode.cosine ? std::cos(angle) : std::sin(angle);
  const double dazim = mode.m * (mode.cosine ? -std::sin(angle) : std::cos(angle));
  const double root2 = std::sqrt(2.0);
  return {p.dtheta * root2 * azim, p.value * root2 * dazim / st};
}

TangentVector perp(const TangentVector& v) { return {-v.v_phi, v.v_theta}; }

IdentityResiduals identity_residuals_serial(int n,
                                            std::span<const SpherePoint> sample) {
  IdentityResiduals max_res{0.0, 0.0, 0.0};
  const double scalar_target = (2.0 * n + 1.0) / (4.0 * M_PI);
  const double gradient_target = static_cast<double>(n) * (n + 1) * scalar_target;
  const std::size_t count = sample.size();
  for (std::size_t i = 0; i < count; ++i) {
    const SpherePoint& s = sample[i];
    const SpherePoint& s2 = sample[(i + 1) % count];

    double scalar_sum = 0.0;
    double addition_sum = 0.0;
    for (int k = 1; k <= 2 * n + 1; ++k) {
      const double y = real_sph_harm(n, k, s);
      scalar_sum += y * y;
      addition_sum += y * real_sph_harm(n, k, s2);
    }
    const double cos_gamma = std::sin(s.theta) * std::sin(s2.theta) *
                                 std::cos(s.phi - s2.phi) +
                             std::cos(s.theta) * std::cos(s2.theta);
    const double addition_target =
        scalar_target * legendre_poly(n, std::clamp(cos_gamma, -1.0, 1.0));

    max_res.scalar = std::max(max_res.scalar, std::abs(scalar_sum - scalar_target));
    max_res.addition =
        std::max(max_res.addition, std::abs(addition_sum - addition_target));

    if (s.theta > kPoleMargin && s.theta < M_PI - kPoleMargin) {
      double gradient_sum = 0.0;
      for (int k = 1; k <= 2 * n + 1; ++k) {
        gradient_sum += sph_harm_gradient(n, k, s).norm_squared();
      }
      max_res.gradient =
          std::max(max_res.gradient, std::abs(gradient_sum - gradient_target));
    }
  }
  return max_res;
}

IdentityResiduals identity_residuals(int n, std::span<const SpherePoint> sample,
                                     bool parallel) {
#ifdef _OPENMP
  if (parallel) {
    const double scalar_target = (2.0 * n + 1.0) / (4.0 * M_PI);
    const double gradient_target =
        static_cast<double>(n) * (n + 1) * scalar_target;
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(sample.size());
    double max_scalar = 0.0, max_gradient = 0.0, max_addition = 0.0;
#pragma omp parallel for schedule(static) \
    reduction(max : max_scalar, max_gradient, max_addition)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const SpherePoint& s = sample[i];
      const SpherePoint& s2 = sample[(i + 1) % count];
      double scalar_sum = 0.0;
      double addition_sum = 0.0;
      for (int k = 1; k <= 2 * n + 1; ++k) {
        const double y = real_sph_harm(n, k, s);
        scalar_sum += y * y;
        addition_sum += y * real_sph_harm(n, k, s2);
      }
      const double cos_gamma = std::sin(s.theta) * std::sin(s2.theta) *
                                   std::cos(s.phi - s2.phi) +
                               std::cos(s.theta) * std::cos(s2.theta);
      const double addition_target =
          scalar_target * legendre_poly(n, std::clamp(cos_gamma, -1.0, 1.0));
      max_scalar = std::max(max_scalar, std::abs(scalar_sum - scalar_target));
      max_addition =
          std::max(max_addition, std::abs(addition_sum - addition_target));
      if (s.theta > kPoleMargin && s.theta < M_PI - kPoleMargin) {
        double gradient_sum = 0.0;
        for (int k = 1; k <= 2 * n + 1; ++k) {
          gradient_sum += sph_harm_gradient(n, k, s).norm_squared();
        }
        max_gradient =
            std::max(max_gradient, std::abs(gradient_sum - gradient_target));
      }
    }
    return {max_scalar, max_gradient, max_addition};
  }
#else
  (void)parallel;
#endif
  return identity_residuals_serial(n, sample);
}

std::vector<SpherePoint> random_sphere_points(std::size_t count,
                                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u_cos(std::cos(M_PI - kPoleMargin),
                                               std::cos(kPoleMargin));
  std::uniform_real_distribution<double> u_phi(0.0, 2.0 * M_PI);
  std::vector<SpherePoint> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double ct = u_cos(rng);
    points.emplace_back(std::acos(ct), u_phi(rng));
  }
  return points;
}

}  // namespace sphspec
