#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lbiso/rational.hpp"
#include "lbiso/rational_matrix.hpp"

namespace lbiso {

enum class SchemeId { d2q9, d2q13 };

std::string to_string(SchemeId id);
/// Accepts "d2q9" / "d2q13" (case-insensitive); throws ConfigError otherwise.
SchemeId parse_scheme_id(std::string_view text);

/// Number of conserved moments (rho, qx, qy).
inline constexpr std::size_t kConserved = 3;
inline const std::array<std::string, 3> kConservedNames = {"rho", "qx", "qy"};

struct Velocity {
  int x = 0;
  int y = 0;
  friend bool operator==(const Velocity&, const Velocity&) = default;
};

struct VelocitySet {
  SchemeId id = SchemeId::d2q9;
  std::vector<Velocity> velocities;
  std::size_t q() const { return velocities.size(); }
};

const VelocitySet& velocity_set(SchemeId id);

/// Names of the non-conserved moments, in equilibrium-matrix row order:
/// d2q9:  e, eps2, phix, phiy, pxx, pxy
/// d2q13: e, pxx, pxy, phix, phiy, xeps2, yeps2, eps2, eps3, pxxe
const std::vector<std::string>& nonconserved_names(SchemeId id);
/// Index of a non-conserved moment name within the row order; ConfigError if unknown.
std::size_t nonconserved_index(SchemeId id, std::string_view name);
/// Index of "rho", "qx" or "qy"; ConfigError otherwise.
std::size_t conserved_index(std::string_view name);

struct MomentBasis {
  RationalMatrix matrix;            ///< q x q, rows are moments
  std::vector<std::string> labels;  ///< rho, qx, qy, then nonconserved_names
};

/// Gram-Schmidt on the raw moment polynomials in label order, each row
/// rescaled to a primitive integer vector (positive leading coefficient).
MomentBasis build_moment_basis(SchemeId id);
/// Cached copy of build_moment_basis.
const MomentBasis& moment_basis(SchemeId id);
/// Cached inverse of the moment matrix.
const RationalMatrix& moment_basis_inverse(SchemeId id);

/// sigma = 1/s - 1/2; DomainError unless 0 < s < 2.
Rational sigma_of_s(const Rational& s);
/// s = 1/(sigma + 1/2); DomainError unless sigma > 0.
Rational s_of_sigma(const Rational& sigma);

/// J = [[Id, 0], [S E, Id - S]] in moment space.
RationalMatrix relaxation_step_matrix(const RationalMatrix& equilibrium, const std::vector<Rational>& relaxation);

/// Density coefficient of the energy equilibrium for a given c0^2:
/// 6 c0^2 - 4 (d2q9) or 26 c0^2 - 28 (d2q13).
Rational energy_equilibrium_from_c0(SchemeId id, const Rational& c0_squared);
/// Inverse of energy_equilibrium_from_c0.
Rational c0_squared_from_energy(SchemeId id, const Rational& e_rho);

/// Linear MRT scheme: velocities, moment basis, equilibrium E and rates s.
class Scheme {
 public:
  /// Checks shapes only; see validate_relaxation for the (0,2) range.
  Scheme(SchemeId id, RationalMatrix equilibrium, std::vector<Rational> relaxation);
  /// All-zero equilibrium, all rates 1.
  explicit Scheme(SchemeId id);

  SchemeId id() const { return id_; }
  std::size_t q() const { return velocity_set(id_).q(); }
  const VelocitySet& velocities() const { return velocity_set(id_); }
  const MomentBasis& basis() const { return moment_basis(id_); }
  const RationalMatrix& equilibrium() const { return equilibrium_; }
  const std::vector<Rational>& relaxation() const { return relaxation_; }

  const Rational& E(std::string_view row, std::string_view col) const;
  Rational& E(std::string_view row, std::string_view col);
  const Rational& s(std::string_view row) const;
  Rational& s(std::string_view row);
  Rational sigma(std::string_view row) const { return sigma_of_s(s(row)); }
  /// c0^2 implied by E(e, rho).
  Rational c0_squared() const { return c0_squared_from_energy(id_, E("e", "rho")); }

  /// Throws DomainError naming the first rate outside (0,2).
  void validate_relaxation() const;

  friend bool operator==(const Scheme&, const Scheme&) = default;

 private:
  SchemeId id_;
  RationalMatrix equilibrium_;
  std::vector<Rational> relaxation_;
};

/// One full time step in population space: M^-1 J M.
RationalMatrix scheme_step_matrix(const Scheme& scheme);

struct Viscosities {
  Rational mu;    ///< shear: sigma_pxx / 3
  Rational zeta;  ///< bulk: sigma_e (5/9 - c0^2)
};

/// Viscosities for lambda = dx = 1; d2q9 only (UnsupportedError otherwise).
Viscosities viscosities(const Scheme& scheme, const Rational& c0_squared);

}  // namespace lbiso
