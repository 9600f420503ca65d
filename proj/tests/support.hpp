#pragma once

#include <random>
#include <string>
#include <vector>

#include "lbiso/families.hpp"
#include "lbiso/rotation.hpp"
#include "lbiso/scheme.hpp"
#include "lbiso/sym_tensor.hpp"

namespace lbiso::testing {

using Rng = std::mt19937_64;

/// p/q strictly inside (0,2), small denominators.
Rational random_rate(Rng& rng);
/// p/q in [-bound, bound].
Rational random_value(Rng& rng, int bound = 5);
/// Positive sound speed squared in [1/10, 1].
Rational random_c0_squared(Rng& rng);

/// Draws every free parameter of the family (c0^2 rather than e_rho).
FamilySpec random_family_spec(Rng& rng, SchemeId id, int order, FamilyCase c);

/// Every E entry and rate random, e_rho tied to a random c0^2.
Scheme random_scheme(Rng& rng, SchemeId id);
/// Adds a random offset to one E entry or replaces one rate.
Scheme perturb(Rng& rng, Scheme scheme);

/// Mixture of fully random schemes, random family members and perturbed members.
Scheme random_mixed_scheme(Rng& rng, SchemeId id);

/// Every family of the scheme as (order, case).
std::vector<std::pair<int, FamilyCase>> all_families(SchemeId id);

SymTensor random_tensor(Rng& rng, int order, std::size_t size = 3);
/// Euclid-formula Pythagorean point with random signs.
Rotation random_rotation(Rng& rng);

}  // namespace lbiso::testing
