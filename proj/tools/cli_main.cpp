// Command-line surface over the sphere-spectral-bounds library.
//
// Subcommands: ladder | curves | cap | verify | identities | constants.
// Every command is deterministic given its flags; CSV/JSON reruns are
// byte-identical.  Exit codes: 0 success / all bounds satisfied,
// 1 bound violation, 2 usage error, 3 numerical failure.

#include "sphspec/bounds.hpp"
#include "sphspec/cap_solver.hpp"
#include "sphspec/harmonics.hpp"
#include "sphspec/io_format.hpp"
#include "sphspec/legendre_transform.hpp"
#include "sphspec/riesz_means.hpp"
#include "sphspec/spectrum_core.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using sphspec::format_double;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct OutputOptions {
  std::string format = "csv";
  std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions* opts,
                      bool allow_svg = false) {
  std::vector<std::string> formats = {"csv", "json"};
  if (allow_svg) formats.push_back("svg");
  cmd->add_option("--format", opts->format, "output format")
      ->check(CLI::IsMember(formats));
  cmd->add_option("--out", opts->out_path, "output path (default: stdout)");
}

void emit(const OutputOptions& opts, const std::string& content) {
  if (opts.out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open output file: " + opts.out_path);
  }
  file << content;
}

// ---------------------------------------------------------------- ladder

int run_ladder(int d, int n_max, const OutputOptions& opts) {
  const auto rows = sphspec::ladder(d, n_max);
  if (opts.format == "json") {
    Json out = Json::array();
    for (const auto& row : rows) {
      Json j;
      j["n"] = row.n;
      j["lambda"] = row.lambda.str();
      j["multiplicity"] = row.mult.str();
      j["cumulative"] = sphspec::multiplicity_partial_sum(d, row.n).str();
      j["f_closed"] = sphspec::f_closed(d, row.n).str();
      j["f_oracle"] = sphspec::f_oracle(d, row.n).str();
      out.push_back(std::move(j));
    }
    emit(opts, out.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream csv;
  csv << "n,lambda,multiplicity,cumulative,f_closed,f_oracle\n";
  for (const auto& row : rows) {
    csv << row.n << ',' << row.lambda.str() << ',' << row.mult.str() << ','
        << sphspec::multiplicity_partial_sum(d, row.n).str() << ','
        << sphspec::f_closed(d, row.n).str() << ','
        << sphspec::f_oracle(d, row.n).str() << '\n';
  }
  emit(opts, csv.str());
  return kExitOk;
}

// ---------------------------------------------------------------- curves

struct CurveData {
  // Panel 1: the Riesz mean against the semiclassical parabola.
  std::vector<double> lambda, F, parabola, gap, F_prime;
  std::vector<std::pair<double, double>> breakpoints;
  // Panel 2: the conjugate against its parabola.
  std::vector<double> p, F_conj, parabola_conj;
  std::vector<std::pair<double, double>> tangency;
  bool has_F_prime = false;
};

std::vector<double> merged_grid(double lo, double hi, int samples,
                                const std::vector<double>& extra) {
  std::set<double> grid(extra.begin(), extra.end());
  for (int i = 0; i <= samples; ++i) {
    grid.insert(lo + (hi - lo) * i / samples);
  }
  std::vector<double> result;
  for (double x : grid) {
    if (x >= lo && x <= hi) result.push_back(x);
  }
  return result;
}

double parabola_conjugate(int d, double area, double p) {
  // sup_l (p l - c l^s) with c = L^cl_{1,d-1}|Omega|, s = (d+1)/2.
  if (p <= 0.0) return 0.0;
  const double c = sphspec::classical_constant(1.0, d - 1) * area;
  const double s = (d + 1) / 2.0;
  const double l_star = std::pow(p / (c * s), 1.0 / (s - 1.0));
  return p * l_star - c * std::pow(l_star, s);
}

CurveData compute_curves(int d, double area, double lambda_max, int samples) {
  const sphspec::DomainSpec domain(d, area);
  const auto F = sphspec::build_F_piecewise(domain, lambda_max);
  CurveData data;
  data.has_F_prime = (d == 3);
  const double alpha = area / (8.0 * M_PI);
  const double c = sphspec::classical_constant(1.0, d - 1) * area;

  std::vector<double> knots;
  for (const auto& [x, y] : F.breakpoints()) {
    if (x <= lambda_max) {
      knots.push_back(x);
      data.breakpoints.emplace_back(x, y);
    }
  }
  for (double lam : merged_grid(0.0, lambda_max, samples, knots)) {
    const double f = F.eval(lam);
    const double par = c * std::pow(lam, (d + 1) / 2.0);
    data.lambda.push_back(lam);
    data.F.push_back(f);
    data.parabola.push_back(par);
    data.gap.push_back(f - par);
    if (data.has_F_prime) {
      data.F_prime.push_back(sphspec::F_prime_S2(alpha, lam));
    }
  }

  const auto conj = sphspec::build_conjugate_polyline(F);
  const double p_max = F.max_slope();
  std::vector<double> p_knots;
  for (const auto& [p, y] : conj.breakpoints()) {
    if (p <= p_max) p_knots.push_back(p);
  }
  for (double p : merged_grid(0.0, p_max, samples, p_knots)) {
    data.p.push_back(p);
    data.F_conj.push_back(sphspec::conjugate_piecewise(F, p));
    data.parabola_conj.push_back(parabola_conjugate(d, area, p));
  }
  if (d == 3) {
    for (int N = 1;; ++N) {
      const double level = static_cast<double>(N) * (N + 1);
      const double p_t = 2.0 * alpha * level;
      if (p_t > p_max) break;
      data.tangency.emplace_back(p_t, p_t * p_t / (4.0 * alpha));
    }
  }
  return data;
}

std::string curves_csv(const CurveData& data) {
  std::ostringstream csv;
  csv << "lambda,F,parabola,gap";
  if (data.has_F_prime) csv << ",F_prime";
  csv << '\n';
  for (std::size_t i = 0; i < data.lambda.size(); ++i) {
    csv << format_double(data.lambda[i]) << ',' << format_double(data.F[i])
        << ',' << format_double(data.parabola[i]) << ','
        << format_double(data.gap[i]);
    if (data.has_F_prime) csv << ',' << format_double(data.F_prime[i]);
    csv << '\n';
  }
  csv << "\np,F_conj,parabola_conj\n";
  for (std::size_t i = 0; i < data.p.size(); ++i) {
    csv << format_double(data.p[i]) << ',' << format_double(data.F_conj[i])
        << ',' << format_double(data.parabola_conj[i]) << '\n';
  }
  return csv.str();
}

std::string curves_json(const CurveData& data) {
  Json out;
  out["curve"] = Json::array();
  for (std::size_t i = 0; i < data.lambda.size(); ++i) {
    Json row;
    row["lambda"] = format_double(data.lambda[i]);
    row["F"] = format_double(data.F[i]);
    row["parabola"] = format_double(data.parabola[i]);
    row["gap"] = format_double(data.gap[i]);
    if (data.has_F_prime) row["F_prime"] = format_double(data.F_prime[i]);
    out["curve"].push_back(std::move(row));
  }
  out["conjugate"] = Json::array();
  for (std::size_t i = 0; i < data.p.size(); ++i) {
    Json row;
    row["p"] = format_double(data.p[i]);
    row["F_conj"] = format_double(data.F_conj[i]);
    row["parabola_conj"] = format_double(data.parabola_conj[i]);
    out["conjugate"].push_back(std::move(row));
  }
  out["tangency"] = Json::array();
  for (const auto& [p, v] : data.tangency) {
    out["tangency"].push_back(
        Json{{"p", format_double(p)}, {"value", format_double(v)}});
  }
  return out.dump(2) + "\n";
}

// One 800x600 panel: axes, up to three series, marker circles, and the
// panel's CSV embedded verbatim in a <desc> so the SVG carries the same
// numeric content as a CSV run.
class SvgPanel {
 public:
  SvgPanel(double x_max, double y_max) : x_max_(x_max), y_max_(y_max) {}

  double px(double x) const { return 70.0 + 700.0 * x / x_max_; }
  double py(double y) const { return 550.0 - 500.0 * y / y_max_; }

  void polyline(const std::vector<double>& xs, const std::vector<double>& ys,
                const std::string& stroke) {
    body_ << "<polyline fill=\"none\" stroke=\"" << stroke
          << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      body_ << format_double(px(xs[i])) << ',' << format_double(py(ys[i]))
            << ' ';
    }
    body_ << "\"/>\n";
  }

  void marker(double x, double y, const std::string& fill) {
    body_ << "<circle cx=\"" << format_double(px(x)) << "\" cy=\""
          << format_double(py(y)) << "\" r=\"3\" fill=\"" << fill << "\"/>\n";
  }

  void tick(double x, const std::string& label) {
    body_ << "<line x1=\"" << format_double(px(x)) << "\" y1=\"550\" x2=\""
          << format_double(px(x))
          << "\" y2=\"556\" stroke=\"black\" stroke-width=\"1\"/>\n"
          << "<text x=\"" << format_double(px(x))
          << "\" y=\"572\" font-size=\"11\" text-anchor=\"middle\">" << label
          << "</text>\n";
  }

  void desc(const std::string& text) { desc_ = text; }

  std::string render(double x_offset) const {
    std::ostringstream svg;
    svg << "<g transform=\"translate(" << format_double(x_offset)
        << ",0)\">\n";
    if (!desc_.empty()) {
      std::string escaped = desc_;
      // '<', '>' and '&' never occur in the numeric CSV, but escape '&'
      // defensively so the document stays valid XML.
      std::size_t pos = 0;
      while ((pos = escaped.find('&', pos)) != std::string::npos) {
        escaped.replace(pos, 1, "&amp;");
        pos += 5;
      }
      svg << "<desc>" << escaped << "</desc>\n";
    }
    svg << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\" "
           "stroke=\"none\"/>\n"
        << "<line x1=\"70\" y1=\"550\" x2=\"770\" y2=\"550\" stroke=\"black\" "
           "stroke-width=\"1\"/>\n"
        << "<line x1=\"70\" y1=\"50\" x2=\"70\" y2=\"550\" stroke=\"black\" "
           "stroke-width=\"1\"/>\n"
        << body_.str() << "</g>\n";
    return svg.str();
  }

 private:
  double x_max_;
  double y_max_;
  std::ostringstream body_;
  std::string desc_;
};

std::string curves_svg(const CurveData& data) {
  const std::string csv = curves_csv(data);
  const std::size_t split = csv.find("\n\n");
  const std::string csv1 = csv.substr(0, split + 1);
  const std::string csv2 = csv.substr(split + 2);

  const double x1 = std::max(data.lambda.back(), 1e-300);
  const double y1 = std::max({data.F.back(), data.parabola.back(), 1e-300});
  SvgPanel panel1(x1, 1.05 * y1);
  panel1.desc(csv1);
  panel1.polyline(data.lambda, data.F, "#1f5fa8");
  panel1.polyline(data.lambda, data.parabola, "#c23b22");
  if (data.has_F_prime) panel1.polyline(data.lambda, data.F_prime, "#3a8f3a");
  for (const auto& [x, y] : data.breakpoints) {
    panel1.marker(x, y, "#1f5fa8");
    panel1.tick(x, format_double(x));
  }

  const double x2 = std::max(data.p.back(), 1e-300);
  const double y2 =
      std::max({data.F_conj.back(), data.parabola_conj.back(), 1e-300});
  SvgPanel panel2(x2, 1.05 * y2);
  panel2.desc(csv2);
  panel2.polyline(data.p, data.F_conj, "#1f5fa8");
  panel2.polyline(data.p, data.parabola_conj, "#c23b22");
  for (const auto& [p, v] : data.tangency) {
    panel2.marker(p, v, "#c23b22");
  }

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1600\" "
         "height=\"600\" viewBox=\"0 0 1600 600\">\n"
      << panel1.render(0.0) << panel2.render(800.0) << "</svg>\n";
  return svg.str();
}

int run_curves(int d, double area, double lambda_max, int samples,
               const OutputOptions& opts) {
  if (!(lambda_max > 0.0)) {
    throw std::domain_error("--lambda-max must be positive");
  }
  const CurveData data = compute_curves(d, area, lambda_max, samples);
  if (opts.format == "json") {
    emit(opts, curves_json(data));
  } else if (opts.format == "svg") {
    emit(opts, curves_svg(data));
  } else {
    emit(opts, curves_csv(data));
  }
  return kExitOk;
}

// ------------------------------------------------------------------- cap

int run_cap(double theta0, const std::string& bc_tag, double lambda_max,
            bool serial, const OutputOptions& opts) {
  const sphspec::CapSpec cap(theta0, sphspec::parse_bc(bc_tag));
  const auto spectrum = serial ? sphspec::cap_spectrum_serial(cap, lambda_max)
                               : sphspec::cap_spectrum(cap, lambda_max);
  if (opts.format == "json") {
    emit(opts, spectrum.to_json() + "\n");
  } else {
    std::ostringstream csv;
    spectrum.write_csv(csv);
    emit(opts, csv.str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

std::vector<double> cap_spectrum_with_count(const sphspec::CapSpec& cap,
                                            int n_max, double* error_sum) {
  // Weyl-guided guess, grown until enough eigenvalues are available.
  double lambda_max =
      std::max(20.0, 1.6 * 4.0 * M_PI * n_max / cap.area() + 10.0);
  for (int attempt = 0; attempt < 12; ++attempt) {
    const auto spectrum = sphspec::cap_spectrum(cap, lambda_max);
    if (static_cast<int>(spectrum.entries.size()) >= n_max) {
      std::vector<double> values;
      *error_sum = 0.0;
      for (int i = 0; i < n_max; ++i) {
        values.push_back(spectrum.entries[i].eigenvalue);
        *error_sum += spectrum.entries[i].error_bound;
      }
      return values;
    }
    lambda_max *= 1.6;
  }
  throw std::runtime_error("cap spectrum did not reach the requested count");
}

std::vector<sphspec::BoundFamily> default_families(bool whole_sphere,
                                                   sphspec::BoundaryCondition bc) {
  using sphspec::BoundFamily;
  if (whole_sphere || bc == sphspec::BoundaryCondition::dirichlet) {
    return {BoundFamily::dirichlet_sum_lower_S2,
            BoundFamily::dirichlet_eigenvalue_lower,
            BoundFamily::dirichlet_lambda1_lower};
  }
  return {BoundFamily::neumann_sum_upper_S2,
          BoundFamily::neumann_sum_upper_general,
          BoundFamily::neumann_eigenvalue_upper};
}

int run_verify(bool whole_sphere, int d, double theta0,
               const std::string& bc_tag,
               const std::vector<std::string>& family_tags, int n_max,
               double tolerance, const OutputOptions& opts) {
  if (!whole_sphere && theta0 <= 0.0) {
    throw std::domain_error("either --whole-sphere or --theta0 is required");
  }

  std::vector<double> spectrum;
  double error_sum = 0.0;
  sphspec::BoundaryCondition bc = sphspec::BoundaryCondition::dirichlet;
  double area = 0.0;
  if (whole_sphere) {
    spectrum = sphspec::ladder_spectrum(d, n_max);
    spectrum.resize(n_max);
    area = sphspec::sphere_area(d);
  } else {
    bc = sphspec::parse_bc(bc_tag);
    const sphspec::CapSpec cap(theta0, bc);
    spectrum = cap_spectrum_with_count(cap, n_max, &error_sum);
    area = cap.area();
    d = 3;
  }
  const sphspec::DomainSpec domain(d, area);

  std::vector<sphspec::BoundFamily> families;
  if (family_tags.empty()) {
    families = default_families(whole_sphere, bc);
  } else {
    for (const auto& tag : family_tags) {
      families.push_back(sphspec::parse_family(tag));
    }
  }

  // Certified slack: solver error bounds can shift a partial sum by at
  // most their total; widen the tolerance accordingly.
  const double used_tolerance = std::max(tolerance, 2.0 * error_sum);

  bool all_ok = true;
  std::ostringstream csv;
  Json json_reports = Json::array();
  bool first = true;
  for (auto family : families) {
    const auto report =
        sphspec::verify_spectrum(family, domain, spectrum, used_tolerance);
    all_ok = all_ok && report.all_satisfied();
    std::ostringstream one;
    report.write_csv(one);
    std::string text = one.str();
    if (!first) {
      text.erase(0, text.find('\n') + 1);  // keep a single header line
    }
    csv << text;
    json_reports.push_back(Json::parse(report.to_json()));
    first = false;
  }

  if (opts.format == "json") {
    emit(opts, json_reports.dump(2) + "\n");
  } else {
    emit(opts, csv.str());
  }
  return all_ok ? kExitOk : kExitViolation;
}

// ------------------------------------------------------------ identities

int run_identities(int n_max, int samples, std::uint64_t seed,
                   const OutputOptions& opts) {
  if (samples < 1) throw std::domain_error("--samples must be >= 1");
  const auto points = sphspec::random_sphere_points(samples, seed);
  std::ostringstream csv;
  Json out = Json::array();
  csv << "n,scalar,gradient,addition\n";
  for (int n = 0; n <= n_max; ++n) {
    const auto r = sphspec::identity_residuals(n, points);
    csv << n << ',' << format_double(r.scalar) << ','
        << format_double(r.gradient) << ',' << format_double(r.addition)
        << '\n';
    out.push_back(Json{{"n", n},
                       {"scalar", format_double(r.scalar)},
                       {"gradient", format_double(r.gradient)},
                       {"addition", format_double(r.addition)}});
  }
  emit(opts, opts.format == "json" ? out.dump(2) + "\n" : csv.str());
  return kExitOk;
}

// ------------------------------------------------------------- constants

int run_constants(int d_max, double sigma, const OutputOptions& opts) {
  if (d_max < 3) throw std::domain_error("--d-max must be >= 3");
  std::ostringstream csv;
  Json out = Json::array();
  csv << "d,sphere_area,ball_volume,classical_constant\n";
  for (int d = 3; d <= d_max; ++d) {
    const double area = sphspec::sphere_area(d);
    const double vol = sphspec::ball_volume(d);
    const double lcl = sphspec::classical_constant(sigma, d);
    csv << d << ',' << format_double(area) << ',' << format_double(vol) << ','
        << format_double(lcl) << '\n';
    out.push_back(Json{{"d", d},
                       {"sphere_area", format_double(area)},
                       {"ball_volume", format_double(vol)},
                       {"classical_constant", format_double(lcl)}});
  }
  emit(opts, opts.format == "json" ? out.dump(2) + "\n" : csv.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral bounds for the Laplace-Beltrami operator on sphere "
               "domains: exact ladder combinatorics, Riesz-mean curves, cap "
               "eigenvalues, and bound verification"};
  app.require_subcommand(1);

  // ladder
  int ladder_d = 3, ladder_n_max = 10;
  OutputOptions ladder_out;
  auto* ladder = app.add_subcommand("ladder", "exact eigenvalue ladder");
  ladder->add_option("--d", ladder_d, "ambient dimension (sphere S^{d-1})")
      ->check(CLI::Range(3, 1000));
  ladder->add_option("--n-max", ladder_n_max, "highest level")
      ->check(CLI::Range(0, 100000));
  add_output_flags(ladder, &ladder_out);

  // curves
  int curves_d = 3, curves_samples = 400;
  double curves_area = 0.0, curves_lambda_max = 0.0;
  OutputOptions curves_out;
  auto* curves =
      app.add_subcommand("curves", "Riesz mean, parabola, and conjugate");
  curves->add_option("--d", curves_d, "ambient dimension")
      ->check(CLI::Range(3, 100));
  curves->add_option("--area", curves_area, "domain surface measure")
      ->required();
  curves->add_option("--lambda-max", curves_lambda_max, "curve extent")
      ->required();
  curves->add_option("--samples", curves_samples, "grid points per panel")
      ->check(CLI::Range(2, 1000000));
  add_output_flags(curves, &curves_out, /*allow_svg=*/true);

  // cap
  double cap_theta0 = 0.0, cap_lambda_max = 0.0;
  std::string cap_bc;
  bool cap_serial = false;
  OutputOptions cap_out;
  auto* cap = app.add_subcommand("cap", "geodesic cap eigenvalues");
  cap->add_option("--theta0", cap_theta0, "cap aperture in (0, pi)")
      ->required();
  cap->add_option("--bc", cap_bc, "dirichlet | neumann")->required();
  cap->add_option("--lambda-max", cap_lambda_max, "spectral cutoff")
      ->required();
  cap->add_flag("--serial", cap_serial, "disable the parallel solver path");
  add_output_flags(cap, &cap_out);

  // verify
  bool verify_whole_sphere = false;
  int verify_d = 3, verify_n_max = 40;
  double verify_theta0 = 0.0, verify_tolerance = 1e-9;
  std::string verify_bc;
  std::vector<std::string> verify_families;
  OutputOptions verify_out;
  auto* verify =
      app.add_subcommand("verify", "check bound families against a spectrum");
  verify->add_flag("--whole-sphere", verify_whole_sphere,
                   "use the exact sphere ladder as the spectrum");
  verify->add_option("--d", verify_d, "ambient dimension (whole sphere only)")
      ->check(CLI::Range(3, 100));
  verify->add_option("--theta0", verify_theta0, "cap aperture in (0, pi)");
  verify->add_option("--bc", verify_bc, "dirichlet | neumann");
  verify->add_option("--family", verify_families,
                     "bound family tag (repeatable; default by bc)");
  verify->add_option("--n-max", verify_n_max, "eigenvalue count")
      ->check(CLI::Range(1, 100000));
  verify->add_option("--tolerance", verify_tolerance, "satisfaction slack");
  add_output_flags(verify, &verify_out);

  // identities
  int id_n_max = 30, id_samples = 200;
  std::uint64_t id_seed = 0;
  OutputOptions id_out;
  auto* identities =
      app.add_subcommand("identities", "spherical harmonic identity residuals");
  identities->add_option("--n-max", id_n_max, "highest level")
      ->check(CLI::Range(0, 60));
  identities->add_option("--samples", id_samples, "random sample size");
  identities->add_option("--seed", id_seed, "sampling seed");
  add_output_flags(identities, &id_out);

  // constants
  int const_d_max = 10;
  double const_sigma = 1.0;
  OutputOptions const_out;
  auto* constants =
      app.add_subcommand("constants", "dimensional and semiclassical constants");
  constants->add_option("--d-max", const_d_max, "largest dimension");
  constants->add_option("--sigma", const_sigma, "Riesz order for L^cl");
  add_output_flags(constants, &const_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*ladder) return run_ladder(ladder_d, ladder_n_max, ladder_out);
    if (*curves) {
      return run_curves(curves_d, curves_area, curves_lambda_max,
                        curves_samples, curves_out);
    }
    if (*cap) {
      return run_cap(cap_theta0, cap_bc, cap_lambda_max, cap_serial, cap_out);
    }
    if (*verify) {
      return run_verify(verify_whole_sphere, verify_d, verify_theta0,
                        verify_bc, verify_families, verify_n_max,
                        verify_tolerance, verify_out);
    }
    if (*identities) {
      return run_identities(id_n_max, id_samples, id_seed, id_out);
    }
    if (*constants) return run_constants(const_d_max, const_sigma, const_out);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
