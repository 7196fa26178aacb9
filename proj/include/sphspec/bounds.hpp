#pragma once

#include "sphspec/spectrum_core.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sphspec {

/// One bound theorem family.  "Upper" families bound partial Neumann
/// sums or single Neumann eigenvalues from above; "lower" families bound
/// Dirichlet-type quantities from below.
enum class BoundFamily {
  neumann_sum_upper_S2,       // sum mu_k <= (2 pi/|Omega|) n^2
  neumann_sum_upper_general,  // (d-1)/(d+1) ((2pi)^{d-1}/(omega_{d-1}|Omega|))^{2/(d-1)} n^{1+2/(d-1)}
  dirichlet_sum_lower_S2,     // sum lambda_k >= (2 pi/|Omega|) n (n - |Omega|/(4 pi))
  dirichlet_eigenvalue_lower, // lambda_n >= (2 pi/|Omega|) (n - |Omega|/(4 pi))
  dirichlet_lambda1_lower,    // the n = 1 case of the above
  neumann_eigenvalue_upper,   // mu_{k+1} <= ((d+1)/2)^{2/(d-1)} (...)^{2/(d-1)} k^{2/(d-1)}
  vector_dirichlet_sum_lower, // sum lambda_k >= (pi/|Omega|) n^2
  stokes_sum_lower,           // sum nu_k >= (2 pi/|Omega|) n^2
};

std::string_view family_tag(BoundFamily family);
BoundFamily parse_family(std::string_view tag);
std::vector<BoundFamily> all_families();

/// True when the family bounds its quantity from above.
bool family_is_upper(BoundFamily family);

/// True when the family compares a single eigenvalue rather than a
/// partial sum.
bool family_is_per_eigenvalue(BoundFamily family);

/// Right-hand side of the family's inequality at eigenvalue index n >= 1.
/// For neumann_eigenvalue_upper the paper indexes mu_{k+1} by k; here n
/// is the eigenvalue index, so n = k + 1 and the formula uses k = n - 1.
double bound_value(BoundFamily family, const DomainSpec& domain, int n);

/// Upper bound 2 L^cl_{1,2} |Omega| lambda^2 on the vector Dirichlet
/// Riesz mean of order 1.
double vector_riesz_upper(const DomainSpec& domain, double lambda);

struct BoundRow {
  int n;
  double lhs;
  double rhs;
  double margin;  // lhs - rhs
  bool satisfied;
};

struct BoundReport {
  BoundFamily family;
  DomainSpec domain;
  std::vector<BoundRow> rows;

  bool all_satisfied() const;
  void write_csv(std::ostream& out) const;
  std::string to_json() const;
};

/// Check every index of the family against a concrete sorted spectrum.
/// The satisfied flag allows a slack of tolerance * max(|lhs|, |rhs|, 1).
BoundReport verify_spectrum(BoundFamily family, const DomainSpec& domain,
                            std::span<const double> spectrum,
                            double tolerance = 1e-9);

}  // namespace sphspec
