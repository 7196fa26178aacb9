#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace sphspec {

enum class BoundaryCondition { dirichlet, neumann };

std::string bc_name(BoundaryCondition bc);
BoundaryCondition parse_bc(const std::string& name);

/// Geodesic cap {theta < theta0} on S^2 with a boundary condition at
/// the rim.
struct CapSpec {
  double theta0;
  BoundaryCondition bc;

  CapSpec(double aperture, BoundaryCondition condition);
  double area() const;
};

struct ModeEigenvalue {
  double value;
  double error_bound;
};

struct CapSpectrumEntry {
  double eigenvalue;
  int m;             // azimuthal index
  int radial_index;  // 1-based within the mode
  double error_bound;
};

/// Flattened cap spectrum: sorted non-decreasing, azimuthal modes with
/// m >= 1 contribute two adjacent entries (cosine before sine).
struct CapSpectrum {
  std::vector<CapSpectrumEntry> entries;

  std::vector<double> values() const;
  void write_csv(std::ostream& out) const;
  std::string to_json() const;
};

/// Eigenvalues <= lambda_max of the separated azimuthal mode
///   -(1/sin th)(sin th u')' + m^2/sin^2 th u = lambda u on (0, theta0),
/// regular at th = 0, with the cap's boundary condition at theta0.
/// Values carry certified error bounds from Richardson extrapolation
/// over mesh refinements; non-convergence within the refinement budget
/// raises an error naming the mode.
std::vector<ModeEigenvalue> mode_eigenvalues(const CapSpec& cap, int m,
                                             double lambda_max);

/// Full cap spectrum up to lambda_max: modes m = 0, 1, ... merged until
/// the lowest eigenvalue of a mode exceeds lambda_max.
CapSpectrum cap_spectrum(const CapSpec& cap, double lambda_max,
                         bool parallel = true);

/// Serial reference for cap_spectrum; identical results.
CapSpectrum cap_spectrum_serial(const CapSpec& cap, double lambda_max);

/// Exact hemisphere spectrum from the sphere ladder by equatorial
/// reflection symmetry: eigenvalue n(n+1) with multiplicity n
/// (Dirichlet) or n+1 (Neumann).  Zero error bounds.
CapSpectrum hemisphere_reference(BoundaryCondition bc, double lambda_max);

}  // namespace sphspec
