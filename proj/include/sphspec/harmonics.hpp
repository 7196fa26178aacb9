#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sphspec {

/// Point on S^2 in colatitude/longitude coordinates.  Poles are allowed;
/// phi canonicalizes to 0 there.
struct SpherePoint {
  double theta;  // [0, pi]
  double phi;    // [0, 2 pi)

  SpherePoint(double colatitude, double longitude);
};

/// Tangent vector in the orthonormal local frame (e_theta, e_phi).
struct TangentVector {
  double v_theta;
  double v_phi;

  double norm_squared() const { return v_theta * v_theta + v_phi * v_phi; }
};

/// Classical Legendre polynomial P_n(t), |t| <= 1, via the three-term
/// recurrence.  P_n(1) = 1.
double legendre_poly(int n, double t);

/// Gegenbauer polynomial C_n^lam(t), lam > 0.  C_n^{1/2} are the
/// classical Legendre polynomials.
double gegenbauer(double lam, int n, double t);

/// Real orthonormal spherical harmonic Y_n^k on S^2.  The index
/// k in [1, 2n+1] enumerates m = 0 first, then (cos, sin) pairs for
/// m = 1..n: k = 2m is the cosine mode, k = 2m+1 the sine mode.
double real_sph_harm(int n, int k, const SpherePoint& point);

/// Surface gradient of Y_n^k in the orthonormal frame:
/// (d_theta Y, (1/sin theta) d_phi Y).  Pole evaluation is rejected for
/// m >= 1 modes where the frame is singular.
TangentVector sph_harm_gradient(int n, int k, const SpherePoint& point);

/// Rotation by 90 degrees in the tangent plane; an isometry, so the
/// perp-gradient family inherits the gradient identity.
TangentVector perp(const TangentVector& v);

/// Maximal absolute residuals of the pointwise identities at level n
/// over the sample:
///   scalar:    sum_k Y_n^k(s)^2        - (2n+1)/(4 pi)
///   gradient:  sum_k |grad Y_n^k(s)|^2 - n(n+1)(2n+1)/(4 pi)
///   addition:  sum_k Y_n^k(s) Y_n^k(s') - (2n+1)/(4 pi) P_n(s . s')
/// The addition theorem pairs each point with its cyclic successor.
/// Points too close to a pole are skipped for the gradient residual.
struct IdentityResiduals {
  double scalar;
  double gradient;
  double addition;
};

IdentityResiduals identity_residuals(int n,
                                     std::span<const SpherePoint> sample,
                                     bool parallel = true);

/// Serial reference for identity_residuals; bitwise identical results.
IdentityResiduals identity_residuals_serial(int n,
                                            std::span<const SpherePoint> sample);

/// Deterministic sample of points uniform on the sphere, colatitude
/// restricted to [1e-3, pi - 1e-3].
std::vector<SpherePoint> random_sphere_points(std::size_t count,
                                              std::uint64_t seed);

}  // namespace sphspec
