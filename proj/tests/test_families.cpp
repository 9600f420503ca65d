#include <doctest.h>

#include "lbiso/errors.hpp"
#include "lbiso/families.hpp"
#include "lbiso/isotropy.hpp"
#include "support.hpp"

using namespace lbiso;

TEST_CASE("fourth-order even-equal member") {
  const Rational se = Rational::parse("1.9977944349438221");
  const Scheme s = build_family({SchemeId::d2q9, 4, FamilyCase::even_equal, {{"s_pxx", se}}});
  CHECK(s.E("e", "rho") == Rational(-2));
  CHECK(s.E("eps2", "rho") == Rational(1));
  CHECK(s.E("phix", "qx") == Rational(-1));
  CHECK(s.E("phiy", "qy") == Rational(-1));
  CHECK(s.s("phix") == flux_rate_fourth_order(se));
  CHECK(s.s("phix") == Rational(6) * (Rational(2) - se) / (Rational(6) - se));
  CHECK(s.s("eps2") == se);
  // 0.0022055650561781941 is the same formula evaluated at the shear rate 1.9985290825952098
  CHECK(flux_rate_fourth_order(Rational::parse("1.9985290825952098")).to_double() ==
        doctest::Approx(0.0022055650561781941).epsilon(1e-12));
  CHECK(s.s("phix").to_double() == doctest::Approx(0.0033065).epsilon(1e-4));
  CHECK(isotropy_order(s, 5).order_achieved == 4);
}

TEST_CASE("third-order P6 member") {
  const Scheme s = build_family({SchemeId::d2q9, 3, FamilyCase::p6, {{"e_rho", -2}}});
  CHECK(s.E("eps2", "rho") == Rational(1));
  CHECK(s.s("pxy") == s.s("pxx"));
}

TEST_CASE("d2q13 second-order member") {
  const Scheme s = build_family({SchemeId::d2q13, 2, FamilyCase::generic, {{"phix_qx", -3}, {"phix_qy", 0}}});
  CHECK(s.E("xeps2", "qx") == Rational(31, 6));
  CHECK(s.E("yeps2", "qy") == Rational(31, 6));
  CHECK(s.E("xeps2", "qy").is_zero());
  CHECK(isotropy_order(s, 3).order_achieved >= 2);
}

TEST_CASE("first annex example") {
  const Scheme s =
      build_family({SchemeId::d2q13, 3, FamilyCase::annex_example_1, {{"e_rho", -2}, {"eps2_rho", 0}}});
  CHECK(s.E("eps3", "rho") == Rational(274, 39) + Rational(274, 3003));
  CHECK(isotropy_order(s, 4).order_achieved == 3);
  CHECK(match_annex_family(s) == FamilyCase::annex_example_1);
}

TEST_CASE("family parameter errors") {
  CHECK_THROWS_AS(build_family({SchemeId::d2q9, 3, FamilyCase::p7, {{"s_phix", Rational(1, 2)}}}), ConfigError);
  CHECK_THROWS_AS(build_family({SchemeId::d2q9, 2, FamilyCase::generic, {{"s_e", 2}}}), DomainError);
  CHECK_THROWS_AS(build_family({SchemeId::d2q9, 2, FamilyCase::generic, {{"c0_squared", Rational(1, 3)}, {"e_rho", 0}}}),
                  ConfigError);
  CHECK_THROWS_AS(build_family({SchemeId::d2q9, 3, FamilyCase::annex_example_1, {}}), ConfigError);
  CHECK_THROWS_AS(parse_family_case("p9"), ConfigError);
  CHECK(parse_family_case("even-equal") == FamilyCase::even_equal);
  CHECK(canonical_parameter_key("s_xx") == "s_pxx");
  CHECK(canonical_parameter_key("e3_rho") == "eps3_rho");
  CHECK(default_family_case(SchemeId::d2q9, 3) == FamilyCase::p6);
  CHECK_FALSE(acoustic_preferred({SchemeId::d2q9, 3, FamilyCase::p8, {}}));
}

TEST_CASE("derived heat-flux rates stay admissible") {
  for (const auto& s : {Rational(1, 1000), Rational(1), Rational(1999, 1000)}) {
    CHECK(flux_rate_third_order(s) > Rational(0));
    CHECK(flux_rate_third_order(s) < Rational(2));
    CHECK(flux_rate_fourth_order(s) > Rational(0));
    CHECK(flux_rate_fourth_order(s) < Rational(2));
  }
}

TEST_CASE("families classify to their order") {
  testing::Rng rng(41);
  for (auto id : {SchemeId::d2q9, SchemeId::d2q13})
    for (const auto& [order, c] : testing::all_families(id)) {
      const Scheme s = build_family(testing::random_family_spec(rng, id, order, c));
      CAPTURE(to_string(c));
      CAPTURE(order);
      const int achieved = isotropy_order(s, std::min(order + 1, 5)).order_achieved;
      if (id == SchemeId::d2q9) {
        CHECK(achieved == order);
      } else {
        CHECK(achieved >= order);
      }
    }
}
