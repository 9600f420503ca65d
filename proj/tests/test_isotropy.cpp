#include <doctest.h>

#include <set>

#include "lbiso/errors.hpp"
#include "lbiso/expansion.hpp"
#include "lbiso/families.hpp"
#include "lbiso/io.hpp"
#include "lbiso/isotropy.hpp"
#include "support.hpp"

using namespace lbiso;

namespace {

Scheme config(int k) { return load_scheme(std::string(LBISO_CONFIG_DIR) + "/benchmark_order" + std::to_string(k) + ".json"); }

SymTensor divergence_tensor() {
  SymTensor t(1, 3);
  t.at(0, 1, "x") = 1;
  t.at(0, 2, "y") = 1;
  return t;
}

}  // namespace

TEST_CASE("rational rotations") {
  CHECK(rational_rotations(1).front() == Rotation::identity());
  const auto sample = rational_rotations(40);
  CHECK(sample.size() == 40);
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& r : sample) {
    CHECK(r.c() * r.c() + r.s() * r.s() == Rational(1));
    seen.insert({r.c().str(), r.s().str()});
  }
  CHECK(seen.size() == sample.size());
  const Rotation r(Rational(3, 5), Rational(4, 5));
  CHECK(r.compose(r) == Rotation(Rational(-7, 25), Rational(24, 25)));
  CHECK_THROWS_AS(Rotation(Rational(1, 2), Rational(1, 2)), DomainError);
}

TEST_CASE("phi action examples") {
  testing::Rng rng(31);
  const SymTensor a = testing::random_tensor(rng, 3);
  CHECK(apply_phi(Rotation::identity(), a) == a);
  for (const auto& r : rational_rotations(12)) CHECK(apply_phi(r, divergence_tensor()) == divergence_tensor());

  SymTensor single(1, 3);
  single.at(1, 0, "x") = 1;
  SymTensor expected(1, 3);
  expected.at(2, 0, "y") = 1;
  CHECK(apply_phi(Rotation::quarter_turn(), single) == expected);
  CHECK_THROWS_AS(apply_phi(Rotation::identity(), SymTensor(1, 2)), ShapeError);
}

TEST_CASE("phi is a group action") {
  testing::Rng rng(32);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < 5; ++k) {
      const SymTensor a = testing::random_tensor(rng, n);
      const Rotation r1 = testing::random_rotation(rng);
      const Rotation r2 = testing::random_rotation(rng);
      CHECK(apply_phi(r1.compose(r2), a) == apply_phi(r1, apply_phi(r2, a)));
    }
}

TEST_CASE("phi is linear") {
  testing::Rng rng(34);
  for (int n = 1; n <= 4; ++n) {
    const SymTensor a = testing::random_tensor(rng, n);
    const SymTensor b = testing::random_tensor(rng, n);
    const Rotation r = testing::random_rotation(rng);
    CHECK(apply_phi(r, a + b) == apply_phi(r, a) + apply_phi(r, b));
  }
}

TEST_CASE("d2q9 tensors are invariant under the quarter turn") {
  testing::Rng rng(35);
  for (int draw = 0; draw < 5; ++draw) {
    // equilibria and rates that commute with the quarter turn
    Scheme s(SchemeId::d2q9);
    s.E("e", "rho") = energy_equilibrium_from_c0(SchemeId::d2q9, testing::random_c0_squared(rng));
    s.E("eps2", "rho") = testing::random_value(rng);
    s.E("phix", "qx") = s.E("phiy", "qy") = testing::random_value(rng);
    s.E("phix", "qy") = testing::random_value(rng);
    s.E("phiy", "qx") = -s.E("phix", "qy");
    for (const auto& row : {"e", "eps2", "phix", "pxx", "pxy"}) s.s(row) = testing::random_rate(rng);
    s.s("phiy") = s.s("phix");
    const auto tensors = equivalent_tensors(s, 4);
    for (const auto& t : tensors) CHECK(apply_phi(Rotation::quarter_turn(), t) == t);
    // a generic equilibrium breaks it
    s.E("phiy", "qy") += 1;
    const SymTensor a2 = equivalent_tensors(s, 2)[1];
    CHECK_FALSE(apply_phi(Rotation::quarter_turn(), a2) == a2);
  }
}

TEST_CASE("fixed points") {
  const auto sample = rational_rotations(required_sample_size(2));
  CHECK(is_fixed_point(divergence_tensor(), rational_rotations(required_sample_size(1))));
  SymTensor lap(2, 3);
  lap.at(0, 0, "xx") = 1;
  lap.at(0, 0, "yy") = 1;
  CHECK(is_fixed_point(lap, sample));
  SymTensor xx(2, 3);
  xx.at(0, 0, "xx") = 1;
  CHECK_FALSE(is_fixed_point(xx, sample));
  CHECK_THROWS_AS(is_fixed_point(xx, rational_rotations(3)), PreconditionError);

  const auto report = isotropy_report({SymTensor(1, 3), xx});
  CHECK(report.order_achieved == 1);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->rotation == Rotation(Rational(3, 5), Rational(4, 5)));
  CHECK(report.witness->order == 2);
}

TEST_CASE("lack of isotropy") {
  const Rotation r(Rational(3, 5), Rational(4, 5));
  SymTensor lap(2, 3);
  lap.at(1, 1, "xx") = 1;
  lap.at(1, 1, "yy") = 1;
  lap.at(2, 2, "xx") = 1;
  lap.at(2, 2, "yy") = 1;
  for (const auto& d : lack_of_isotropy({divergence_tensor(), lap}, r)) CHECK(d.is_zero());

  const auto tensors = equivalent_tensors(config(1), 3);
  const auto defect = lack_of_isotropy(tensors, r);
  CHECK(defect[0].is_zero());
  CHECK_FALSE(defect[1].is_zero());

  const auto back = lack_of_isotropy(tensors, r.inverse());
  for (std::size_t n = 0; n < tensors.size(); ++n) CHECK(back[n] == -apply_phi(r.inverse(), defect[n]));
}

TEST_CASE("isotropy order of the four benchmark configs") {
  CHECK(isotropy_order(config(1), 5).order_achieved == 1);
  CHECK(isotropy_order(config(2), 5).order_achieved == 2);
  CHECK(isotropy_order(config(3), 5).order_achieved == 3);
  const auto fourth = isotropy_order(config(4), 5);
  CHECK(fourth.order_achieved == 4);
  CHECK_FALSE(fourth.residuals.back().max_abs.is_zero());
}

TEST_CASE("d2q9 closed-form conditions") {
  Scheme s(SchemeId::d2q9);
  s.E("e", "rho") = -2;
  s.E("phix", "qx") = -1;
  s.E("phiy", "qy") = -1;
  s.s("pxx") = s.s("pxy") = Rational(3, 2);
  CHECK(check_d2q9(s, 1));
  CHECK(check_d2q9(s, 2));
  s.E("phix", "qy") = Rational(1, 3);
  CHECK_FALSE(check_d2q9(s, 2));

  testing::Rng rng(33);
  const Scheme fixed = build_family(testing::random_family_spec(rng, SchemeId::d2q9, 4, FamilyCase::sound_fixed));
  CHECK(fixed.E("e", "rho") == Rational(-2, 3));
  CHECK(check_d2q9(fixed, 4));
  CHECK_FALSE(check_d2q9(fixed, 5));
  CHECK_THROWS_AS(check_d2q9(Scheme(SchemeId::d2q13), 1), UnsupportedError);
}

TEST_CASE("d2q13 rotation-dilatation coefficients") {
  for (const Rational& sigma : {Rational(1, 3), Rational(7, 2), Rational(1, 100)}) {
    CHECK(d2q13_defab(-3, 0, sigma, sigma).a == Rational(31, 6));
    CHECK(d2q13_defab(-3, 0, sigma, sigma).b == Rational(0));
    CHECK(d2q13_defab(-1, 0, sigma, sigma).a == Rational(-1, 12));
  }
  for (const auto& s : annex_d2q13_matrices()) {
    CHECK(check_d2q13(s, 2));
    CHECK(check_d2q13(s, 3));
  }
  CHECK_THROWS_AS(check_d2q13(Scheme(SchemeId::d2q13), 4), UnsupportedError);
}
