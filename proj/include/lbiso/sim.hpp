#pragma once

#include <array>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lbiso/scheme.hpp"

namespace lbiso {

/// Non-conserved moments of the initial field: at equilibrium (Y = E W) or zero.
enum class InitMode { equilibrium, zero };

std::string to_string(InitMode mode);
/// "equilibrium" or "zero"; ConfigError otherwise.
InitMode parse_init_mode(std::string_view text);

struct SimConfig {
  int grid = 100;       ///< nodes per side
  double dx = 0.02;
  double lambda = 1.0;  ///< dt = dx / lambda
  int steps = 12;
  InitMode init = InitMode::equilibrium;
};

/// Populations on a periodic grid, stored population-major: data[j * n * n + y * n + x].
/// Node (x, y) sits at ((x - n/2) dx, (y - n/2) dx).
struct Field {
  int n = 0;
  std::size_t q = 0;
  std::vector<double> data;

  double& at(std::size_t j, int x, int y) { return data[(j * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)) * static_cast<std::size_t>(n) + static_cast<std::size_t>(x)]; }
  double at(std::size_t j, int x, int y) const { return data[(j * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)) * static_cast<std::size_t>(n) + static_cast<std::size_t>(x)]; }
  /// Density sum_j f_j at a node.
  double density(int x, int y) const;
};

/// Collision operator M^-1 J M in double precision plus the velocity set.
class Stepper {
 public:
  explicit Stepper(const Scheme& scheme);
  /// Collide then stream; throws DivergenceError tagged with step_index on non-finite values.
  void step(Field& field, int step_index = 0) const;
  std::size_t q() const { return velocities_.size(); }

 private:
  std::vector<double> collision_;  // q x q row-major
  std::vector<Velocity> velocities_;
};

/// rho = exp(-10 x^2 - 10 y^2), q = 0, f = M^-1 (rho, 0, 0, Y) with Y = E (rho, 0, 0)
/// or Y = 0 depending on config.init.
Field init_gaussian(const Scheme& scheme, const SimConfig& config);

/// Sums of rho, qx, qy over the grid.
std::array<double, 3> conserved_totals(const Field& field, const Scheme& scheme);

struct RadialProfile {
  int p = 1;
  int q = 0;
  std::vector<double> r;
  std::vector<double> rho;
};

/// Exact node reads along the ray k (p, q) from the centre, k = 0, 1, ... while k max(|p|,|q|) <= n/2 - 1.
RadialProfile extract_profile(const Field& field, int p, int q, double dx);

/// Sliding six-point Lagrange interpolation; PreconditionError with fewer than
/// six samples, DomainError for radii outside the sampled range.
std::vector<double> quintic_interpolate(const RadialProfile& profile, const std::vector<double>& r_grid);

struct AnisotropyMetrics {
  std::vector<double> r;
  std::vector<double> rho_0, rho_pi2, rho_pi4, rho_atan12;
  double max_pi4 = 0;     ///< max |rho_0 - rho_pi/4|
  double max_atan12 = 0;  ///< max |rho_0 - rho_atan(1/2)|
  double max_pi2 = 0;     ///< max |rho_0 - rho_pi/2|
};

/// Profiles along (1,0), (0,1), (1,1), (2,1) interpolated onto r = 0, 0.005, ..., 0.5.
AnisotropyMetrics anisotropy_error(const Field& field, double dx);

struct SimResult {
  Field field;
  AnisotropyMetrics metrics;
  std::array<double, 3> initial_totals{};
  std::array<double, 3> final_totals{};
};

/// Gaussian pulse benchmark: init, config.steps steps, metrics.
SimResult run_gaussian_pulse(const Scheme& scheme, const SimConfig& config);

/// CSV with header r,rho_0,rho_pi2,rho_pi4,rho_atan12 and 17 significant digits.
void write_profile_csv(std::ostream& os, const AnisotropyMetrics& metrics);

}  // namespace lbiso
