#include "sphspec/bounds.hpp"

#include "sphspec/io_format.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sphspec {

namespace {

struct FamilyInfo {
  BoundFamily family;
  std::string_view tag;
  bool upper;
  bool per_eigenvalue;
  bool s2_only;
};

constexpr std::array<FamilyInfo, 8> kFamilies = {{
    {BoundFamily::neumann_sum_upper_S2, "neumann-sum-upper-S2", true, false, true},
    {BoundFamily::neumann_sum_upper_general, "neumann-sum-upper-general", true, false, false},
    {BoundFamily::dirichlet_sum_lower_S2, "dirichlet-sum-lower-S2", false, false, true},
    {BoundFamily::dirichlet_eigenvalue_lower, "dirichlet-eigenvalue-lower", false, true, true},
    {BoundFamily::dirichlet_lambda1_lower, "dirichlet-lambda1-lower", false, true, true},
    {BoundFamily::neumann_eigenvalue_upper, "neumann-eigenvalue-upper", true, true, false},
    {BoundFamily::vector_dirichlet_sum_lower, "vector-dirichlet-sum-lower", false, false, true},
    {BoundFamily::stokes_sum_lower, "stokes-sum-lower", false, false, true},
}};

const FamilyInfo& info(BoundFamily family) {
  for (const auto& fi : kFamilies) {
    if (fi.family == family) return fi;
  }
  throw std::logic_error("unknown bound family");
}

void check_dimension(BoundFamily family, const DomainSpec& domain) {
  if (info(family).s2_only && domain.d != 3) {
    throw std::domain_error(std::string(family_tag(family)) +
                            " requires d = 3 (a domain on S^2)");
  }
}

}  // namespace

std::string_view family_tag(BoundFamily family) { return info(family).tag; }

BoundFamily parse_family(std::string_view tag) {
  for (const auto& fi : kFamilies) {
    if (fi.tag == tag) return fi.family;
  }
  throw std::invalid_argument("unknown bound family tag: " + std::string(tag));
}

std::vector<BoundFamily> all_families() {
  std::vector<BoundFamily> out;
  for (const auto& fi : kFamilies) out.push_back(fi.family);
  return out;
}

bool family_is_upper(BoundFamily family) { return info(family).upper; }

bool family_is_per_eigenvalue(BoundFamily family) {
  return info(family).per_eigenvalue;
}

double bound_value(BoundFamily family, const DomainSpec& domain, int n) {
  if (n < 1) {
    throw std::domain_error("eigenvalue index n must be >= 1");
  }
  check_dimension(family, domain);
  const double area = domain.area;
  const int d = domain.d;
  switch (family) {
    case BoundFamily::neumann_sum_upper_S2:
      return 2.0 * M_PI / area * n * n;
    case BoundFamily::neumann_sum_upper_general: {
      const double base = std::pow(2.0 * M_PI, d - 1) /
                          (ball_volume(d - 1) * area);
      return (d - 1.0) / (d + 1.0) * std::pow(base, 2.0 / (d - 1)) *
             std::pow(n, 1.0 + 2.0 / (d - 1));
    }
    case BoundFamily::dirichlet_sum_lower_S2:
      return 2.0 * M_PI / area * n * (n - area / (4.0 * M_PI));
    case BoundFamily::dirichlet_eigenvalue_lower:
      return 2.0 * M_PI / area * (n - area / (4.0 * M_PI));
    case BoundFamily::dirichlet_lambda1_lower:
      if (n != 1) {
        throw std::domain_error("dirichlet-lambda1-lower is the n = 1 bound");
      }
      return 2.0 * M_PI / area * (1.0 - area / (4.0 * M_PI));
    case BoundFamily::neumann_eigenvalue_upper: {
      const int k = n - 1;
      const double base = std::pow(2.0 * M_PI, d - 1) /
                          (ball_volume(d - 1) * area);
      return std::pow((d + 1.0) / 2.0, 2.0 / (d - 1)) *
             std::pow(base, 2.0 / (d - 1)) * std::pow(k, 2.0 / (d - 1));
    }
    case BoundFamily::vector_dirichlet_sum_lower:
      return M_PI / area * n * n;
    case BoundFamily::stokes_sum_lower:
      return 2.0 * M_PI / area * n * n;
  }
  throw std::logic_error("unreachable");
}

double vector_riesz_upper(const DomainSpec& domain, double lambda) {
  check_dimension(BoundFamily::vector_dirichlet_sum_lower, domain);
  return 2.0 * classical_constant(1.0, 2) * domain.area * lambda * lambda;
}

bool BoundReport::all_satisfied() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const BoundRow& r) { return r.satisfied; });
}

void BoundReport::write_csv(std::ostream& out) const {
  out << "family,n,lhs,rhs,margin,satisfied\n";
  for (const auto& row : rows) {
    out << family_tag(family) << ',' << row.n << ',' << format_double(row.lhs)
        << ',' << format_double(row.rhs) << ',' << format_double(row.margin)
        << ',' << (row.satisfied ? 1 : 0) << '\n';
  }
}

std::string BoundReport::to_json() const {
  nlohmann::ordered_json j;
  j["family"] = family_tag(family);
  j["domain"] = {{"d", domain.d}, {"area", domain.area}};
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    j["rows"].push_back({{"n", row.n},
                         {"lhs", row.lhs},
                         {"rhs", row.rhs},
                         {"margin", row.margin},
                         {"satisfied", row.satisfied}});
  }
  return j.dump(2);
}

BoundReport verify_spectrum(BoundFamily family, const DomainSpec& domain,
                            std::span<const double> spectrum,
                            double tolerance) {
  check_dimension(family, domain);
  if (!std::is_sorted(spectrum.begin(), spectrum.end())) {
    throw std::invalid_argument("spectrum must be sorted non-decreasing");
  }
  BoundReport report{family, domain, {}};
  const bool upper = family_is_upper(family);
  const bool per_eig = family_is_per_eigenvalue(family);
  const int n_max =
      family == BoundFamily::dirichlet_lambda1_lower
          ? std::min<int>(1, static_cast<int>(spectrum.size()))
          : static_cast<int>(spectrum.size());
  double partial_sum = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    partial_sum += spectrum[n - 1];
    const double lhs = per_eig ? spectrum[n - 1] : partial_sum;
    const double rhs = bound_value(family, domain, n);
    const double margin = lhs - rhs;
    const double slack =
        tolerance * std::max({std::abs(lhs), std::abs(rhs), 1.0});
    const bool ok = upper ? margin <= slack : margin >= -slack;
    report.rows.push_back({n, lhs, rhs, margin, ok});
  }
  return report;
}

}  // namespace sphspec
