#include "lbiso/sim.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>

#include "lbiso/errors.hpp"

namespace lbiso {

std::string to_string(InitMode mode) { return mode == InitMode::equilibrium ? "equilibrium" : "zero"; }

InitMode parse_init_mode(std::string_view text) {
  if (text == "equilibrium") return InitMode::equilibrium;
  if (text == "zero") return InitMode::zero;
  throw ConfigError("unknown init mode '" + std::string(text) + "' (expected equilibrium or zero)");
}

double Field::density(int x, int y) const {
  double rho = 0;
  for (std::size_t j = 0; j < q; ++j) rho += at(j, x, y);
  return rho;
}

Stepper::Stepper(const Scheme& scheme) : velocities_(scheme.velocities().velocities) {
  const RationalMatrix k = scheme_step_matrix(scheme);
  collision_.resize(k.rows() * k.cols());
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) collision_[i * k.cols() + j] = k(i, j).to_double();
}

void Stepper::step(Field& field, int step_index) const {
  const std::size_t q = velocities_.size();
  const int n = field.n;
  if (field.q != q) throw ShapeError("field has " + std::to_string(field.q) + " populations, scheme has " + std::to_string(q));
  Field next{n, q, std::vector<double>(field.data.size())};
  std::vector<double> f(q), post(q);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      for (std::size_t j = 0; j < q; ++j) f[j] = field.at(j, x, y);
      for (std::size_t i = 0; i < q; ++i) {
        double acc = 0;
        for (std::size_t j = 0; j < q; ++j) acc += collision_[i * q + j] * f[j];
        post[i] = acc;
      }
      for (std::size_t j = 0; j < q; ++j) {
        const int tx = ((x + velocities_[j].x) % n + n) % n;
        const int ty = ((y + velocities_[j].y) % n + n) % n;
        next.at(j, tx, ty) = post[j];
      }
    }
  if (!std::all_of(next.data.begin(), next.data.end(), [](double v) { return std::isfinite(v); })) {
    throw DivergenceError("non-finite population after step " + std::to_string(step_index), step_index);
  }
  field = std::move(next);
}

Field init_gaussian(const Scheme& scheme, const SimConfig& config) {
  if (config.grid < 2 || config.dx <= 0 || config.lambda <= 0 || config.steps < 0) {
    throw ConfigError("simulation needs grid >= 2, dx > 0, lambda > 0 and steps >= 0");
  }
  const RationalMatrix& minv = moment_basis_inverse(scheme.id());
  const std::size_t q = scheme.q();
  // Population j per unit density: column rho of M^-1 plus the equilibrium moments.
  std::vector<double> unit(q);
  for (std::size_t j = 0; j < q; ++j) {
    Rational acc = minv(j, 0);
    if (config.init == InitMode::equilibrium) {
      for (std::size_t k = 0; k + kConserved < q; ++k) acc += minv(j, kConserved + k) * scheme.equilibrium()(k, 0);
    }
    unit[j] = acc.to_double();
  }
  const int n = config.grid;
  Field field{n, q, std::vector<double>(q * static_cast<std::size_t>(n) * static_cast<std::size_t>(n))};
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      const double px = (x - n / 2) * config.dx;
      const double py = (y - n / 2) * config.dx;
      const double rho = std::exp(-10.0 * px * px - 10.0 * py * py);
      for (std::size_t j = 0; j < q; ++j) field.at(j, x, y) = unit[j] * rho;
    }
  return field;
}

std::array<double, 3> conserved_totals(const Field& field, const Scheme& scheme) {
  std::array<double, 3> totals{0, 0, 0};
  const auto& vs = scheme.velocities().velocities;
  for (std::size_t j = 0; j < field.q; ++j)
    for (int y = 0; y < field.n; ++y)
      for (int x = 0; x < field.n; ++x) {
        const double f = field.at(j, x, y);
        totals[0] += f;
        totals[1] += vs[j].x * f;
        totals[2] += vs[j].y * f;
      }
  return totals;
}

RadialProfile extract_profile(const Field& field, int p, int q, double dx) {
  const int reach = std::max(std::abs(p), std::abs(q));
  if (reach == 0) throw DomainError("profile direction must be non-zero");
  RadialProfile profile{p, q, {}, {}};
  const int c = field.n / 2;
  const double step = dx * std::sqrt(static_cast<double>(p * p + q * q));
  for (int k = 0; k * reach <= field.n / 2 - 1; ++k) {
    profile.r.push_back(k * step);
    profile.rho.push_back(field.density(c + k * p, c + k * q));
  }
  return profile;
}

std::vector<double> quintic_interpolate(const RadialProfile& profile, const std::vector<double>& r_grid) {
  const std::size_t m = profile.r.size();
  if (m < 6) throw PreconditionError("quintic interpolation needs at least 6 samples, got " + std::to_string(m));
  std::vector<double> out;
  out.reserve(r_grid.size());
  const double eps = 1e-12 * profile.r.back();
  for (double r : r_grid) {
    if (r < -eps || r > profile.r.back() + eps) {
      throw DomainError("radius " + std::to_string(r) + " lies outside the sampled profile");
    }
    const auto it = std::upper_bound(profile.r.begin(), profile.r.end(), r);
    const std::size_t i = it == profile.r.begin() ? 0 : static_cast<std::size_t>(it - profile.r.begin()) - 1;
    const std::size_t start = std::min(i >= 2 ? i - 2 : 0, m - 6);
    double value = 0;
    for (std::size_t a = start; a < start + 6; ++a) {
      double w = 1;
      for (std::size_t b = start; b < start + 6; ++b)
        if (b != a) w *= (r - profile.r[b]) / (profile.r[a] - profile.r[b]);
      value += w * profile.rho[a];
    }
    out.push_back(value);
  }
  return out;
}

AnisotropyMetrics anisotropy_error(const Field& field, double dx) {
  AnisotropyMetrics m;
  for (int i = 0; i <= 100; ++i) m.r.push_back(0.005 * i);
  m.rho_0 = quintic_interpolate(extract_profile(field, 1, 0, dx), m.r);
  m.rho_pi2 = quintic_interpolate(extract_profile(field, 0, 1, dx), m.r);
  m.rho_pi4 = quintic_interpolate(extract_profile(field, 1, 1, dx), m.r);
  m.rho_atan12 = quintic_interpolate(extract_profile(field, 2, 1, dx), m.r);
  for (std::size_t i = 0; i < m.r.size(); ++i) {
    m.max_pi4 = std::max(m.max_pi4, std::abs(m.rho_0[i] - m.rho_pi4[i]));
    m.max_atan12 = std::max(m.max_atan12, std::abs(m.rho_0[i] - m.rho_atan12[i]));
    m.max_pi2 = std::max(m.max_pi2, std::abs(m.rho_0[i] - m.rho_pi2[i]));
  }
  return m;
}

SimResult run_gaussian_pulse(const Scheme& scheme, const SimConfig& config) {
  SimResult result;
  result.field = init_gaussian(scheme, config);
  result.initial_totals = conserved_totals(result.field, scheme);
  const Stepper stepper(scheme);
  for (int s = 1; s <= config.steps; ++s) stepper.step(result.field, s);
  result.final_totals = conserved_totals(result.field, scheme);
  result.metrics = anisotropy_error(result.field, config.dx);
  return result;
}

void write_profile_csv(std::ostream& os, const AnisotropyMetrics& m) {
  os << "r,rho_0,rho_pi2,rho_pi4,rho_atan12\n";
  os << std::setprecision(17);
  for (std::size_t i = 0; i < m.r.size(); ++i) {
    os << m.r[i] << ',' << m.rho_0[i] << ',' << m.rho_pi2[i] << ',' << m.rho_pi4[i] << ',' << m.rho_atan12[i] << '\n';
  }
}

}  // namespace lbiso
