#include "lbiso/scheme.hpp"

#include <algorithm>
#include <cctype>

#include "lbiso/errors.hpp"

namespace lbiso {

namespace {

const std::vector<std::string> kD2q9Rows = {"e", "eps2", "phix", "phiy", "pxx", "pxy"};
const std::vector<std::string> kD2q13Rows = {"e",     "pxx",   "pxy",  "phix", "phiy",
                                             "xeps2", "yeps2", "eps2", "eps3", "pxxe"};

// Raw moment polynomial evaluated at one velocity.
Rational raw_moment(const std::string& name, const Velocity& v) {
  const Rational vx = v.x;
  const Rational vy = v.y;
  const Rational half_sq = Rational(v.x * v.x + v.y * v.y, 2);
  if (name == "rho") return 1;
  if (name == "qx") return vx;
  if (name == "qy") return vy;
  if (name == "e") return half_sq;
  if (name == "eps2") return half_sq * half_sq;
  if (name == "eps3") return half_sq * half_sq * half_sq;
  if (name == "phix") return half_sq * vx;
  if (name == "phiy") return half_sq * vy;
  if (name == "xeps2") return vx * half_sq * half_sq;
  if (name == "yeps2") return vy * half_sq * half_sq;
  if (name == "pxx") return vx * vx - vy * vy;
  if (name == "pxy") return vx * vy;
  if (name == "pxxe") return half_sq * (vx * vx - vy * vy);
  throw Error("unknown moment " + name);
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// Smallest positive factor turning the row into integers with content 1.
void make_primitive(std::vector<Rational>& row) {
  mpz_class lcm_den = 1;
  for (const auto& v : row) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.denominator().get_mpz_t());
  mpz_class content = 0;
  for (const auto& v : row) {
    const mpz_class scaled = v.numerator() * (lcm_den / v.denominator());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
  }
  const Rational factor(mpq_class(lcm_den, content));
  for (auto& v : row) v *= factor;
}

}  // namespace

std::string to_string(SchemeId id) { return id == SchemeId::d2q9 ? "d2q9" : "d2q13"; }

SchemeId parse_scheme_id(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "d2q9") return SchemeId::d2q9;
  if (lower == "d2q13") return SchemeId::d2q13;
  throw ConfigError("unknown scheme '" + std::string(text) + "' (expected d2q9 or d2q13)");
}

const VelocitySet& velocity_set(SchemeId id) {
  static const VelocitySet d2q9{SchemeId::d2q9,
                                {{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, 1}, {-1, -1}, {1, -1}}};
  static const VelocitySet d2q13{SchemeId::d2q13,
                                 {{0, 0},
                                  {1, 0},
                                  {0, 1},
                                  {-1, 0},
                                  {0, -1},
                                  {1, 1},
                                  {-1, 1},
                                  {-1, -1},
                                  {1, -1},
                                  {2, 0},
                                  {0, 2},
                                  {-2, 0},
                                  {0, -2}}};
  return id == SchemeId::d2q9 ? d2q9 : d2q13;
}

const std::vector<std::string>& nonconserved_names(SchemeId id) {
  return id == SchemeId::d2q9 ? kD2q9Rows : kD2q13Rows;
}

std::size_t nonconserved_index(SchemeId id, std::string_view name) {
  const auto& names = nonconserved_names(id);
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) {
    throw ConfigError("unknown moment '" + std::string(name) + "' for " + to_string(id));
  }
  return static_cast<std::size_t>(it - names.begin());
}

std::size_t conserved_index(std::string_view name) {
  for (std::size_t i = 0; i < kConservedNames.size(); ++i)
    if (kConservedNames[i] == name) return i;
  throw ConfigError("unknown conserved moment '" + std::string(name) + "' (expected rho, qx or qy)");
}

MomentBasis build_moment_basis(SchemeId id) {
  const auto& vs = velocity_set(id);
  MomentBasis basis;
  basis.labels.assign(kConservedNames.begin(), kConservedNames.end());
  for (const auto& n : nonconserved_names(id)) basis.labels.push_back(n);

  const std::size_t q = vs.q();
  std::vector<std::vector<Rational>> rows;
  for (const auto& label : basis.labels) {
    std::vector<Rational> raw(q);
    for (std::size_t j = 0; j < q; ++j) raw[j] = raw_moment(label, vs.velocities[j]);
    std::vector<Rational> u = raw;
    for (const auto& prev : rows) {
      const Rational coef = dot(raw, prev) / dot(prev, prev);
      if (coef.is_zero()) continue;
      for (std::size_t j = 0; j < q; ++j) u[j] -= coef * prev[j];
    }
    if (std::all_of(u.begin(), u.end(), [](const Rational& r) { return r.is_zero(); })) {
      throw Error("moment " + label + " is linearly dependent on the previous ones");
    }
    make_primitive(u);
    rows.push_back(std::move(u));
  }
  basis.matrix = RationalMatrix(q, q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) basis.matrix(i, j) = rows[i][j];
  return basis;
}

const MomentBasis& moment_basis(SchemeId id) {
  static const MomentBasis d2q9 = build_moment_basis(SchemeId::d2q9);
  static const MomentBasis d2q13 = build_moment_basis(SchemeId::d2q13);
  return id == SchemeId::d2q9 ? d2q9 : d2q13;
}

const RationalMatrix& moment_basis_inverse(SchemeId id) {
  static const RationalMatrix d2q9 = moment_basis(SchemeId::d2q9).matrix.inverse();
  static const RationalMatrix d2q13 = moment_basis(SchemeId::d2q13).matrix.inverse();
  return id == SchemeId::d2q9 ? d2q9 : d2q13;
}

Rational sigma_of_s(const Rational& s) {
  if (s <= Rational(0) || s >= Rational(2)) {
    throw DomainError("relaxation rate " + s.str() + " is outside (0,2)");
  }
  return s.inverse() - Rational(1, 2);
}

Rational s_of_sigma(const Rational& sigma) {
  if (sigma <= Rational(0)) throw DomainError("sigma " + sigma.str() + " must be positive");
  return (sigma + Rational(1, 2)).inverse();
}

RationalMatrix relaxation_step_matrix(const RationalMatrix& equilibrium, const std::vector<Rational>& relaxation) {
  const std::size_t nc = equilibrium.rows();
  if (equilibrium.cols() != kConserved || relaxation.size() != nc) {
    throw ShapeError("equilibrium/relaxation shapes are inconsistent");
  }
  const std::size_t q = nc + kConserved;
  RationalMatrix j(q, q);
  for (std::size_t i = 0; i < kConserved; ++i) j(i, i) = 1;
  for (std::size_t k = 0; k < nc; ++k) {
    for (std::size_t c = 0; c < kConserved; ++c) j(kConserved + k, c) = relaxation[k] * equilibrium(k, c);
    j(kConserved + k, kConserved + k) = Rational(1) - relaxation[k];
  }
  return j;
}

Rational energy_equilibrium_from_c0(SchemeId id, const Rational& c0_squared) {
  if (c0_squared <= Rational(0)) throw DomainError("c0_squared must be positive, got " + c0_squared.str());
  return id == SchemeId::d2q9 ? Rational(6) * c0_squared - 4 : Rational(26) * c0_squared - 28;
}

Rational c0_squared_from_energy(SchemeId id, const Rational& e_rho) {
  return id == SchemeId::d2q9 ? (e_rho + 4) / 6 : (e_rho + 28) / 26;
}

Scheme::Scheme(SchemeId id, RationalMatrix equilibrium, std::vector<Rational> relaxation)
    : id_(id), equilibrium_(std::move(equilibrium)), relaxation_(std::move(relaxation)) {
  const std::size_t nc = nonconserved_names(id).size();
  if (equilibrium_.rows() != nc || equilibrium_.cols() != kConserved) {
    throw ShapeError("equilibrium matrix must be " + std::to_string(nc) + "x3 for " + to_string(id));
  }
  if (relaxation_.size() != nc) {
    throw ShapeError("relaxation vector must have " + std::to_string(nc) + " entries for " + to_string(id));
  }
}

Scheme::Scheme(SchemeId id)
    : Scheme(id, RationalMatrix(nonconserved_names(id).size(), kConserved),
             std::vector<Rational>(nonconserved_names(id).size(), Rational(1))) {}

const Rational& Scheme::E(std::string_view row, std::string_view col) const {
  return equilibrium_(nonconserved_index(id_, row), conserved_index(col));
}

Rational& Scheme::E(std::string_view row, std::string_view col) {
  return equilibrium_(nonconserved_index(id_, row), conserved_index(col));
}

const Rational& Scheme::s(std::string_view row) const { return relaxation_[nonconserved_index(id_, row)]; }

Rational& Scheme::s(std::string_view row) { return relaxation_[nonconserved_index(id_, row)]; }

void Scheme::validate_relaxation() const {
  const auto& names = nonconserved_names(id_);
  for (std::size_t k = 0; k < relaxation_.size(); ++k) {
    if (relaxation_[k] <= Rational(0) || relaxation_[k] >= Rational(2)) {
      throw DomainError("s_" + names[k] + " = " + relaxation_[k].str() + " is outside (0,2)");
    }
  }
}

RationalMatrix scheme_step_matrix(const Scheme& scheme) {
  const auto& m = moment_basis(scheme.id()).matrix;
  const auto& minv = moment_basis_inverse(scheme.id());
  return minv * relaxation_step_matrix(scheme.equilibrium(), scheme.relaxation()) * m;
}

Viscosities viscosities(const Scheme& scheme, const Rational& c0_squared) {
  if (scheme.id() != SchemeId::d2q9) throw UnsupportedError("viscosity relations are only defined for d2q9");
  return {scheme.sigma("pxx") / 3, scheme.sigma("e") * (Rational(5, 9) - c0_squared)};
}

}  // namespace lbiso
