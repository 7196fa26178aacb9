#include "sphspec/cap_solver.hpp"

#include "sphspec/io_format.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace sphspec {

namespace {

constexpr double kThetaMin = 1e-6;

// Symmetric tridiagonal pencil (K, M); M positive definite.
struct TridiagPencil {
  std::vector<double> k_diag, k_off;
  std::vector<double> m_diag, m_off;

  std::size_t size() const { return k_diag.size(); }
};

// P1 finite elements for -(sin th u')' + (m^2/sin th) u = lambda sin th u
// on [kThetaMin, theta0], coefficients frozen at element midpoints.
// m = 0 keeps the natural (regular) condition at the left end; m >= 1
// pins u there since u ~ th^m.  Dirichlet drops the rim node.
TridiagPencil assemble(const CapSpec& cap, int m, std::size_t elements) {
  const double a = kThetaMin;
  const double h = (cap.theta0 - a) / static_cast<double>(elements);
  const std::size_t nodes = elements + 1;

  std::vector<double> k_diag(nodes, 0.0), k_off(nodes - 1, 0.0);
  std::vector<double> m_diag(nodes, 0.0), m_off(nodes - 1, 0.0);
  for (std::size_t e = 0; e < elements; ++e) {
    const double mid = a + (static_cast<double>(e) + 0.5) * h;
    const double s = std::sin(mid);
    const double p = s / h;
    const double q = static_cast<double>(m) * m / s * h / 6.0;
    const double w = s * h / 6.0;
    k_diag[e] += p + 2.0 * q;
    k_diag[e + 1] += p + 2.0 * q;
    k_off[e] += -p + q;
    m_diag[e] += 2.0 * w;
    m_diag[e + 1] += 2.0 * w;
    m_off[e] += w;
  }

  const std::size_t lo = m >= 1 ? 1 : 0;
  const std::size_t hi = cap.bc == BoundaryCondition::dirichlet ? nodes - 1 : nodes;
  if (hi <= lo + 1) {
    throw std::runtime_error("mesh too coarse for boundary conditions");
  }
  TridiagPencil pencil;
  pencil.k_diag.assign(k_diag.begin() + lo, k_diag.begin() + hi);
  pencil.m_diag.assign(m_diag.begin() + lo, m_diag.begin() + hi);
  pencil.k_off.assign(k_off.begin() + lo, k_off.begin() + (hi - 1));
  pencil.m_off.assign(m_off.begin() + lo, m_off.begin() + (hi - 1));
  return pencil;
}

// Number of eigenvalues of the pencil strictly below lambda, by the
// Sturm/LDL^T pivot count.  Exact at the discrete level.
std::size_t count_below(const TridiagPencil& p, double lambda) {
  std::size_t negatives = 0;
  double pivot = p.k_diag[0] - lambda * p.m_diag[0];
  if (pivot == 0.0) pivot = -1e-300;
  if (pivot < 0.0) ++negatives;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const double off = p.k_off[i - 1] - lambda * p.m_off[i - 1];
    double d = p.k_diag[i] - lambda * p.m_diag[i] - off * off / pivot;
    if (d == 0.0) d = -1e-300;
    if (d < 0.0) ++negatives;
    pivot = d;
  }
  return negatives;
}

// The lowest eigenvalues below `upper`, by bisection on the Sturm count.
std::vector<double> discrete_eigenvalues(const TridiagPencil& p, double upper) {
  const double lower = -1.0;  // Neumann pencils have an exact zero mode
  const std::size_t count = count_below(p, upper);
  std::vector<double> values(count);
  for (std::size_t j = 1; j <= count; ++j) {
    double lo = lower, hi = upper;
    while (hi - lo > 1e-12 * std::max(1.0, std::abs(hi))) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(p, mid) >= j) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    values[j - 1] = 0.5 * (lo + hi);
  }
  return values;
}

double certification_tolerance(double value) {
  return std::max(1e-6, 5e-8 * std::abs(value));
}

}  // namespace

std::string bc_name(BoundaryCondition bc) {
  return bc == BoundaryCondition::dirichlet ? "dirichlet" : "neumann";
}

BoundaryCondition parse_bc(const std::string& name) {
  if (name == "dirichlet") return BoundaryCondition::dirichlet;
  if (name == "neumann") return BoundaryCondition::neumann;
  throw std::invalid_argument("unknown boundary condition: " + name);
}

CapSpec::CapSpec(double aperture, BoundaryCondition condition)
    : theta0(aperture), bc(condition) {
  if (!(theta0 > 0.0) || !(theta0 < M_PI)) {
    throw std::domain_error("cap aperture must lie in (0, pi)");
  }
}

double CapSpec::area() const { return 2.0 * M_PI * (1.0 - std::cos(theta0)); }

std::vector<ModeEigenvalue> mode_eigenvalues(const CapSpec& cap, int m,
                                             double lambda_max) {
  if (m < 0) throw std::domain_error("azimuthal index must be >= 0");
  if (!(lambda_max > 0.0)) throw std::domain_error("lambda_max must be > 0");

  // Search slightly above lambda_max so extrapolation cannot lose an
  // eigenvalue sitting on the cut.
  const double upper = lambda_max * (1.0 + 1e-3) + 1e-6;

  for (std::size_t base : {1000u, 2000u, 4000u}) {
    const auto coarse = discrete_eigenvalues(assemble(cap, m, base), upper);
    const auto medium = discrete_eigenvalues(assemble(cap, m, 2 * base), upper);
    const auto fine = discrete_eigenvalues(assemble(cap, m, 4 * base), upper);
    const std::size_t count =
        std::min({coarse.size(), medium.size(), fine.size()});

    std::vector<ModeEigenvalue> result;
    bool certified = true;
    for (std::size_t j = 0; j < count; ++j) {
      const double extrap_cm = (4.0 * medium[j] - coarse[j]) / 3.0;
      const double extrap_mf = (4.0 * fine[j] - medium[j]) / 3.0;
      double value = extrap_mf;
      const double err =
          std::max(std::abs(extrap_cm - extrap_mf), 1e-11 * std::max(1.0, value));
      if (err > certification_tolerance(value)) {
        certified = false;
        break;
      }
      // The Neumann zero mode is exact in the discretization up to
      // bisection noise; any genuine nonzero eigenvalue is O(1) or
      // larger for every aperture, so a 1e-6 snap window is safe.
      if (std::abs(value) <= std::max(err, 1e-6)) value = 0.0;
      if (value <= lambda_max) result.push_back({value, err});
    }
    if (certified) return result;
  }
  throw std::runtime_error("cap solver failed to certify mode m = " +
                           std::to_string(m) + " within the refinement budget");
}

namespace {

// Cheap single-mesh probe for the mode cutoff: the m^2/sin^2 potential
// is increasing in m, so the first mode whose lowest discrete eigenvalue
// clears lambda_max ends the scan.
int mode_cutoff(const CapSpec& cap, double lambda_max) {
  const double upper = lambda_max * (1.0 + 1e-2) + 1.0;
  for (int m = 0;; ++m) {
    const auto pencil = assemble(cap, m, 800);
    if (count_below(pencil, upper) == 0) return m;
  }
}

CapSpectrum merge_modes(std::vector<std::vector<ModeEigenvalue>> per_mode) {
  CapSpectrum spectrum;
  for (int m = 0; m < static_cast<int>(per_mode.size()); ++m) {
    int radial = 0;
    for (const auto& ev : per_mode[m]) {
      ++radial;
      spectrum.entries.push_back({ev.value, m, radial, ev.error_bound});
      if (m >= 1) {
        spectrum.entries.push_back({ev.value, m, radial, ev.error_bound});
      }
    }
  }
  std::stable_sort(spectrum.entries.begin(), spectrum.entries.end(),
                   [](const CapSpectrumEntry& a, const CapSpectrumEntry& b) {
                     if (a.eigenvalue != b.eigenvalue)
                       return a.eigenvalue < b.eigenvalue;
                     return a.m < b.m;
                   });
  return spectrum;
}

CapSpectrum solve_spectrum(const CapSpec& cap, double lambda_max,
                           bool parallel) {
  const int cutoff = mode_cutoff(cap, lambda_max);
  std::vector<std::vector<ModeEigenvalue>> per_mode(
      static_cast<std::size_t>(cutoff) + 1);
  std::string failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int m = 0; m <= cutoff; ++m) {
    try {
      per_mode[m] = mode_eigenvalues(cap, m, lambda_max);
    } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
      failure = e.what();
    }
  }
  if (!failure.empty()) throw std::runtime_error(failure);
  while (!per_mode.empty() && per_mode.back().empty()) per_mode.pop_back();
  return merge_modes(std::move(per_mode));
}

}  // namespace

CapSpectrum cap_spectrum(const CapSpec& cap, double lambda_max, bool parallel) {
  return solve_spectrum(cap, lambda_max, parallel);
}

CapSpectrum cap_spectrum_serial(const CapSpec& cap, double lambda_max) {
  return solve_spectrum(cap, lambda_max, false);
}

CapSpectrum hemisphere_reference(BoundaryCondition bc, double lambda_max) {
  std::vector<std::vector<ModeEigenvalue>> per_mode;
  const int parity = bc == BoundaryCondition::dirichlet ? 1 : 0;
  for (int n = 0;; ++n) {
    const double lambda = static_cast<double>(n) * (n + 1);
    if (lambda > lambda_max) break;
    // Mode m keeps levels n with n - m of the right parity.
    for (int m = ((n - parity) % 2 + 2) % 2; m <= n; m += 2) {
      if ((n - m) % 2 != parity) continue;
      if (per_mode.size() <= static_cast<std::size_t>(m)) {
        per_mode.resize(static_cast<std::size_t>(m) + 1);
      }
      per_mode[m].push_back({lambda, 0.0});
    }
  }
  return merge_modes(std::move(per_mode));
}

std::vector<double> CapSpectrum::values() const {
  std::vector<double> v;
  v.reserve(entries.size());
  for (const auto& e : entries) v.push_back(e.eigenvalue);
  return v;
}

void CapSpectrum::write_csv(std::ostream& out) const {
  out << "index,eigenvalue,m,radial_index,error_bound\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    out << i + 1 << ',' << format_double(e.eigenvalue) << ',' << e.m << ','
        << e.radial_index << ',' << format_double(e.error_bound) << '\n';
  }
}

std::string CapSpectrum::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    j.push_back({{"index", i + 1},
                 {"eigenvalue", e.eigenvalue},
                 {"m", e.m},
                 {"radial_index", e.radial_index},
                 {"error_bound", e.error_bound}});
  }
  return j.dump(2);
}

}  // namespace sphspec
