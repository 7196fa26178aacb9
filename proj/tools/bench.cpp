// Timing comparison between the serial reference implementations and
// their OpenMP counterparts for the two parallel kernels: the cap
// eigenvalue sweep over azimuthal modes and the harmonic identity
// residual scan.

#include "sphspec/cap_solver.hpp"
#include "sphspec/harmonics.hpp"

#include <chrono>
#include <cstdio>

namespace {

template <typename F>
double seconds(F&& work) {
  const auto start = std::chrono::steady_clock::now();
  work();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main() {
  std::printf("kernel,serial_s,parallel_s,speedup\n");

  {
    const sphspec::CapSpec cap(1.2, sphspec::BoundaryCondition::dirichlet);
    const double lambda_max = 400.0;
    double checksum = 0.0;
    const double t_serial = seconds([&] {
      checksum += sphspec::cap_spectrum_serial(cap, lambda_max)
                      .entries.front().eigenvalue;
    });
    const double t_parallel = seconds([&] {
      checksum -= sphspec::cap_spectrum(cap, lambda_max, true)
                      .entries.front().eigenvalue;
    });
    std::printf("cap_spectrum,%.3f,%.3f,%.2f\n", t_serial, t_parallel,
                t_serial / t_parallel);
    if (checksum != 0.0) {
      std::printf("# WARNING: serial and parallel results differ\n");
      return 1;
    }
  }

  {
    const auto sample = sphspec::random_sphere_points(20000, 7);
    const int n = 40;
    sphspec::IdentityResiduals serial{}, parallel{};
    const double t_serial = seconds([&] {
      serial = sphspec::identity_residuals_serial(n, sample);
    });
    const double t_parallel = seconds([&] {
      parallel = sphspec::identity_residuals(n, sample, true);
    });
    std::printf("identity_residuals,%.3f,%.3f,%.2f\n", t_serial, t_parallel,
                t_serial / t_parallel);
    if (serial.scalar != parallel.scalar ||
        serial.gradient != parallel.gradient ||
        serial.addition != parallel.addition) {
      std::printf("# WARNING: serial and parallel results differ\n");
      return 1;
    }
  }
  return 0;
}
