#include <doctest.h>

#include "lbiso/errors.hpp"
#include "lbiso/scheme.hpp"
#include "support.hpp"

using namespace lbiso;

namespace {

std::vector<Rational> row_of(const RationalMatrix& m, std::size_t i) {
  std::vector<Rational> out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) out[j] = m(i, j);
  return out;
}

}  // namespace

TEST_CASE("d2q9 moment basis") {
  const auto& basis = moment_basis(SchemeId::d2q9);
  const auto e = row_of(basis.matrix, 3);
  CHECK(e == std::vector<Rational>{-4, -1, -1, -1, -1, 2, 2, 2, 2});
  const auto& v = velocity_set(SchemeId::d2q9).velocities;
  for (std::size_t j = 0; j < v.size(); ++j) CHECK(e[j] == Rational(3 * (v[j].x * v[j].x + v[j].y * v[j].y) - 4));
  // pxx vanishes on the diagonal velocity (1,1)
  CHECK(basis.matrix(7, 5) == Rational(0));
  CHECK(row_of(basis.matrix, 5) == std::vector<Rational>{0, -2, 0, 2, 0, 1, -1, -1, 1});
}

TEST_CASE("moment rows are orthogonal") {
  for (auto id : {SchemeId::d2q9, SchemeId::d2q13}) {
    const auto& m = moment_basis(id).matrix;
    const RationalMatrix gram = m * m.transpose();
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.rows(); ++j)
        if (i != j) CHECK(gram(i, j) == Rational(0));
    CHECK(m.rank() == m.rows());
  }
}

TEST_CASE("sigma") {
  CHECK(sigma_of_s(1) == Rational(1, 2));
  CHECK(sigma_of_s(Rational(4, 3)) == Rational(1, 4));
  CHECK_THROWS_AS(sigma_of_s(2), DomainError);
  CHECK_THROWS_AS(sigma_of_s(0), DomainError);
  CHECK(s_of_sigma(Rational(1, 4)) == Rational(4, 3));
}

TEST_CASE("relaxation step matrix") {
  testing::Rng rng(5);
  const Scheme random = testing::random_scheme(rng, SchemeId::d2q9);

  std::vector<Rational> ones(6, Rational(1));
  const RationalMatrix full = relaxation_step_matrix(random.equilibrium(), ones);
  CHECK(full.block(3, 3, 6, 6).is_zero());

  const RationalMatrix zero_e = relaxation_step_matrix(RationalMatrix(6, 3), random.relaxation());
  CHECK(zero_e.block(3, 0, 6, 3).is_zero());
  CHECK(zero_e.block(0, 0, 3, 3) == RationalMatrix::identity(3));
  for (std::size_t k = 0; k < 6; ++k) CHECK(zero_e(3 + k, 3 + k) == Rational(1) - random.relaxation()[k]);

  const RationalMatrix j = relaxation_step_matrix(random.equilibrium(), random.relaxation());
  std::vector<Rational> m(9);
  for (auto& x : m) x = testing::random_value(rng);
  const auto jm = j * m;
  for (std::size_t i = 0; i < 3; ++i) CHECK(jm[i] == m[i]);

  CHECK_THROWS_AS(relaxation_step_matrix(RationalMatrix(5, 3), random.relaxation()), ShapeError);
}

TEST_CASE("energy equilibrium from c0") {
  CHECK(energy_equilibrium_from_c0(SchemeId::d2q9, Rational(1, 3)) == Rational(-2));
  CHECK(energy_equilibrium_from_c0(SchemeId::d2q9, Rational(5, 9)) == Rational(-2, 3));
  CHECK(energy_equilibrium_from_c0(SchemeId::d2q13, Rational(14, 13)) == Rational(0));
  CHECK_THROWS_AS(energy_equilibrium_from_c0(SchemeId::d2q9, 0), DomainError);
  CHECK(c0_squared_from_energy(SchemeId::d2q9, -2) == Rational(1, 3));
}

TEST_CASE("viscosities") {
  Scheme s(SchemeId::d2q9);
  CHECK(viscosities(s, Rational(1, 3)).mu == Rational(1, 6));
  CHECK(viscosities(s, Rational(1, 3)).zeta == Rational(1, 9));
  s.s("e") = Rational(2, 3);
  CHECK(viscosities(s, Rational(5, 9)).zeta == Rational(0));
  CHECK_THROWS_AS(viscosities(Scheme(SchemeId::d2q13), Rational(1, 3)), UnsupportedError);
}

TEST_CASE("scheme step matrix") {
  testing::Rng rng(8);
  for (auto id : {SchemeId::d2q9, SchemeId::d2q13}) {
    const Scheme s = testing::random_scheme(rng, id);
    const RationalMatrix step = scheme_step_matrix(s);
    // column sums reproduce mass: sum_i (G f)_i = sum_j f_j
    for (std::size_t j = 0; j < s.q(); ++j) {
      Rational sum = 0;
      for (std::size_t i = 0; i < s.q(); ++i) sum += step(i, j);
      CHECK(sum == Rational(1));
    }
  }

  // uniform populations are fixed once the equilibria match their moments
  Scheme s(SchemeId::d2q9);
  const auto& m = moment_basis(SchemeId::d2q9).matrix;
  std::vector<Rational> f(9, Rational(1, 9));
  const auto moments = m * f;
  for (std::size_t k = 0; k < 6; ++k) s.E(nonconserved_names(SchemeId::d2q9)[k], "rho") = moments[3 + k] / moments[0];
  s.s("e") = Rational(3, 2);
  s.s("phix") = Rational(1, 3);
  CHECK(scheme_step_matrix(s) * f == f);
}

TEST_CASE("scheme shape and rate validation") {
  CHECK_THROWS_AS(Scheme(SchemeId::d2q9, RationalMatrix(6, 2), std::vector<Rational>(6, 1)), ShapeError);
  CHECK_THROWS_AS(Scheme(SchemeId::d2q9, RationalMatrix(6, 3), std::vector<Rational>(5, 1)), ShapeError);
  Scheme s(SchemeId::d2q13);
  s.s("eps3") = 2;
  CHECK_THROWS_WITH_AS(s.validate_relaxation(), doctest::Contains("s_eps3"), DomainError);
  CHECK_THROWS_AS(s.E("bogus", "rho"), ConfigError);
  CHECK_THROWS_AS(parse_scheme_id("d3q19"), ConfigError);
  CHECK(parse_scheme_id("D2Q13") == SchemeId::d2q13);
}
