#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lbiso/scheme.hpp"

namespace lbiso {

enum class FamilyCase {
  generic,          ///< orders 1-2, no branching
  p6,               ///< d2q9 order 3: energy square tied to energy
  p7,               ///< d2q9 order 3: heat-flux rates tied to shear rate
  p8,               ///< d2q9 order 3: heat-flux rates tied, bulk rate = shear rate
  even_equal,       ///< d2q9 order 4: s_eps2 = s_e
  sound_fixed,      ///< d2q9 order 4: c0^2 = 5/9
  annex_example_1,  ///< d2q13 order 3 examples
  annex_example_2,
  annex_remark,
};

std::string to_string(FamilyCase c);
/// "generic", "p6", "even-equal", "annex-example-1", ...; ConfigError otherwise.
FamilyCase parse_family_case(std::string_view text);

/// Free parameter keys: "c0_squared", "e_rho", "<row>_<col>" for E entries and
/// "s_<row>" for rates. Values not supplied default to c0^2 = 1/3, s = 1, E = 0.
struct FamilySpec {
  SchemeId scheme = SchemeId::d2q9;
  int order = 1;
  FamilyCase family_case = FamilyCase::generic;
  std::map<std::string, Rational> free;
};

/// Maps aliases (s_xx, s_xy, e3, ...) to canonical keys.
std::string canonical_parameter_key(std::string_view key);

/// Case used when none is given: p6 at d2q9 order 3, even-equal at order 4,
/// annex-example-1 at d2q13 order 3, generic otherwise.
FamilyCase default_family_case(SchemeId scheme, int order);

/// Keys accepted in FamilySpec::free for this family.
std::vector<std::string> free_parameters(const FamilySpec& spec);

/// False for the d2q9 P8 branch, which ties bulk and shear viscosities.
bool acoustic_preferred(const FamilySpec& spec);

/// Builds the family member. ConfigError for unknown or constrained keys,
/// DomainError for supplied rates outside (0,2), InfeasibleFamilyError when a
/// derived rate leaves (0,2).
Scheme build_family(const FamilySpec& spec);

/// The three tabulated d2q13 third-order matrices for the given free parameters.
std::vector<Scheme> annex_d2q13_matrices(const std::map<std::string, Rational>& free = {});

/// Which tabulated d2q13 example family, if any, contains the scheme.
std::optional<FamilyCase> match_annex_family(const Scheme& scheme);

/// s = 3(2 - s_xx)/(3 - s_xx), i.e. sigma = 1/(12 sigma_xx).
Rational flux_rate_third_order(const Rational& s_xx);
/// s = 6(2 - s_xx)/(6 - s_xx), i.e. sigma = 1/(6 sigma_xx).
Rational flux_rate_fourth_order(const Rational& s_xx);

}  // namespace lbiso
