#include "support.hpp"

#include <numeric>

namespace lbiso::testing {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Rational random_rate(Rng& rng) {
  const int q = uniform(rng, 2, 40);
  return Rational(uniform(rng, 1, 2 * q - 1), q);
}

Rational random_value(Rng& rng, int bound) {
  const int q = uniform(rng, 1, 12);
  return Rational(uniform(rng, -bound * q, bound * q), q);
}

Rational random_c0_squared(Rng& rng) {
  const int q = uniform(rng, 2, 30);
  return Rational(uniform(rng, std::max(1, q / 10), q), q);
}

FamilySpec random_family_spec(Rng& rng, SchemeId id, int order, FamilyCase c) {
  FamilySpec spec{id, order, c, {}};
  for (const auto& key : free_parameters(spec)) {
    if (key == "e_rho") continue;
    if (key == "c0_squared") {
      spec.free[key] = random_c0_squared(rng);
    } else if (key.rfind("s_", 0) == 0) {
      spec.free[key] = random_rate(rng);
    } else {
      spec.free[key] = random_value(rng);
    }
  }
  return spec;
}

Scheme random_scheme(Rng& rng, SchemeId id) {
  Scheme s(id);
  for (const auto& row : nonconserved_names(id)) {
    for (const auto& col : kConservedNames) s.E(row, col) = random_value(rng);
    s.s(row) = random_rate(rng);
  }
  s.E("e", "rho") = energy_equilibrium_from_c0(id, random_c0_squared(rng));
  return s;
}

Scheme perturb(Rng& rng, Scheme scheme) {
  const auto& rows = nonconserved_names(scheme.id());
  const auto& row = rows[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(rows.size()) - 1))];
  if (uniform(rng, 0, 2) == 0) {
    scheme.s(row) = random_rate(rng);
  } else {
    const auto& col = kConservedNames[static_cast<std::size_t>(uniform(rng, 0, 2))];
    scheme.E(row, col) += Rational(uniform(rng, 1, 5), uniform(rng, 1, 7));
  }
  return scheme;
}

std::vector<std::pair<int, FamilyCase>> all_families(SchemeId id) {
  if (id == SchemeId::d2q9) {
    return {{1, FamilyCase::generic}, {2, FamilyCase::generic}, {3, FamilyCase::p6},        {3, FamilyCase::p7},
            {3, FamilyCase::p8},      {4, FamilyCase::even_equal}, {4, FamilyCase::sound_fixed}};
  }
  return {{1, FamilyCase::generic},
          {2, FamilyCase::generic},
          {3, FamilyCase::annex_example_1},
          {3, FamilyCase::annex_example_2},
          {3, FamilyCase::annex_remark}};
}

Scheme random_mixed_scheme(Rng& rng, SchemeId id) {
  const int kind = uniform(rng, 0, 2);
  if (kind == 0) return random_scheme(rng, id);
  const auto families = all_families(id);
  const auto& [order, c] = families[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(families.size()) - 1))];
  Scheme member = build_family(random_family_spec(rng, id, order, c));
  return kind == 1 ? member : perturb(rng, member);
}

SymTensor random_tensor(Rng& rng, int order, std::size_t size) {
  SymTensor t(order, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      for (int x = 0; x <= order; ++x) t.at(i, j, x) = random_value(rng, 3);
  return t;
}

Rotation random_rotation(Rng& rng) {
  int m = uniform(rng, 2, 9);
  int n = uniform(rng, 1, m - 1);
  const int g = std::gcd(m, n);
  m /= g;
  n /= g;
  const int h = m * m + n * n;
  Rational c(m * m - n * n, h);
  Rational s(2 * m * n, h);
  if (uniform(rng, 0, 1)) std::swap(c, s);
  if (uniform(rng, 0, 1)) c = -c;
  if (uniform(rng, 0, 1)) s = -s;
  return {c, s};
}

}  // namespace lbiso::testing
