#include "lbiso/families.hpp"

#include <algorithm>
#include <functional>

#include "lbiso/errors.hpp"
#include "lbiso/isotropy.hpp"

namespace lbiso {

namespace {

struct FamilyDef {
  std::vector<std::string> free_keys;
  bool fixed_sound = false;  // c0^2 = 5/9
  std::function<void(Scheme&)> constrain;
};

std::vector<std::string> e_keys(SchemeId id, std::initializer_list<const char*> rows) {
  std::vector<std::string> out;
  for (const char* row : rows) {
    nonconserved_index(id, row);
    for (const auto& col : kConservedNames) out.push_back(std::string(row) + "_" + col);
  }
  return out;
}

std::vector<std::string> s_keys(SchemeId id, std::initializer_list<const char*> rows) {
  std::vector<std::string> out;
  for (const char* row : rows) {
    nonconserved_index(id, row);
    out.push_back(std::string("s_") + row);
  }
  return out;
}

std::vector<std::string> all_s_keys(SchemeId id) {
  std::vector<std::string> out;
  for (const auto& row : nonconserved_names(id)) out.push_back("s_" + row);
  return out;
}

std::vector<std::string> concat(std::initializer_list<std::vector<std::string>> parts) {
  std::vector<std::string> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

const std::vector<std::string> kSoundKeys = {"c0_squared", "e_rho"};

// Entries not in the first-order zero set (energy row: only e_rho).
std::vector<std::string> first_order_free_e(SchemeId id) {
  std::vector<std::string> out;
  for (const auto& row : nonconserved_names(id)) {
    if (row == "e" || row == "pxx" || row == "pxy") continue;
    for (const auto& col : kConservedNames) out.push_back(row + "_" + col);
  }
  return out;
}

Rational sigma_raw(const Scheme& s, std::string_view row) { return s.s(row).inverse() - Rational(1, 2); }

void set_flux(Scheme& s, const Rational& value) {
  s.E("phix", "qx") = value;
  s.E("phiy", "qy") = value;
}

void set_order_five_moments(Scheme& s, const Rational& value) {
  s.E("xeps2", "qx") = value;
  s.E("yeps2", "qy") = value;
}

Rational energy_link(const Scheme& s) { return (Rational(-4) - Rational(3) * s.E("e", "rho")) / 2; }

void annex_energy_rows(Scheme& s) {
  const Rational e_rho = s.E("e", "rho");
  s.E("eps2", "rho") = Rational(-3234, 13) - Rational(361, 26) * e_rho;
  s.E("eps3", "rho") = Rational(1681, 39) + Rational(307, 156) * e_rho;
}

FamilyDef d2q9_definition(int order, FamilyCase c) {
  const SchemeId id = SchemeId::d2q9;
  if (order == 1 && c == FamilyCase::generic) {
    return {concat({kSoundKeys, first_order_free_e(id), all_s_keys(id)}), false, [](Scheme&) {}};
  }
  if (order == 2 && c == FamilyCase::generic) {
    return {concat({kSoundKeys, e_keys(id, {"eps2"}), all_s_keys(id)}), false, [](Scheme& s) {
              const Rational sxx = sigma_raw(s, "pxx");
              const Rational sxy = sigma_raw(s, "pxy");
              set_flux(s, (sxx - Rational(4) * sxy) / (Rational(2) * sxy + sxx));
            }};
  }
  const auto third_base = [](Scheme& s) {
    s.s("pxy") = s.s("pxx");
    set_flux(s, -1);
  };
  if (order == 3 && c == FamilyCase::p6) {
    return {concat({kSoundKeys, s_keys(id, {"e", "eps2", "phix", "phiy", "pxx"})}), false, [=](Scheme& s) {
              third_base(s);
              s.E("eps2", "rho") = energy_link(s);
            }};
  }
  if (order == 3 && c == FamilyCase::p7) {
    return {concat({kSoundKeys, {"eps2_rho"}, s_keys(id, {"e", "eps2", "pxx"})}), false, [=](Scheme& s) {
              third_base(s);
              s.s("phix") = s.s("phiy") = flux_rate_third_order(s.s("pxx"));
            }};
  }
  if (order == 3 && c == FamilyCase::p8) {
    return {concat({kSoundKeys, e_keys(id, {"eps2"}), s_keys(id, {"eps2", "pxx"})}), false, [=](Scheme& s) {
              third_base(s);
              s.s("phix") = s.s("phiy") = flux_rate_third_order(s.s("pxx"));
              s.s("e") = s.s("pxx");
            }};
  }
  const auto fourth_base = [](Scheme& s) {
    set_flux(s, -1);
    s.E("eps2", "rho") = energy_link(s);
    s.s("e") = s.s("pxy") = s.s("pxx");
    s.s("phix") = s.s("phiy") = flux_rate_fourth_order(s.s("pxx"));
  };
  if (order == 4 && c == FamilyCase::even_equal) {
    return {concat({kSoundKeys, s_keys(id, {"pxx"})}), false, [=](Scheme& s) {
              fourth_base(s);
              s.s("eps2") = s.s("pxx");
            }};
  }
  if (order == 4 && c == FamilyCase::sound_fixed) {
    return {s_keys(id, {"eps2", "pxx"}), true, fourth_base};
  }
  throw ConfigError("no d2q9 family of order " + std::to_string(order) + " with case " + to_string(c));
}

FamilyDef d2q13_definition(int order, FamilyCase c) {
  const SchemeId id = SchemeId::d2q13;
  if (order == 1 && c == FamilyCase::generic) {
    return {concat({kSoundKeys, first_order_free_e(id), all_s_keys(id)}), false, [](Scheme&) {}};
  }
  if (order == 2 && c == FamilyCase::generic) {
    return {concat({kSoundKeys, {"phix_qx", "phix_qy"}, e_keys(id, {"eps2", "eps3", "pxxe"}), all_s_keys(id)}), false,
            [](Scheme& s) {
              s.E("phiy", "qy") = s.E("phix", "qx");
              s.E("phiy", "qx") = -s.E("phix", "qy");
              const auto [a, b] =
                  d2q13_defab(s.E("phix", "qx"), s.E("phiy", "qx"), sigma_raw(s, "pxx"), sigma_raw(s, "pxy"));
              set_order_five_moments(s, a);
              s.E("xeps2", "qy") = b;
              s.E("yeps2", "qx") = -b;
            }};
  }
  if (order == 3 && c == FamilyCase::annex_example_1) {
    return {concat({kSoundKeys, e_keys(id, {"eps2", "pxxe"}), s_keys(id, {"pxx", "pxy", "eps2", "eps3", "pxxe"})}),
            false, [](Scheme& s) {
              set_flux(s, -3);
              set_order_five_moments(s, Rational(31, 6));
              s.E("eps3", "rho") = Rational(274, 39) - Rational(67, 462) * s.E("eps2", "rho") -
                                   Rational(137, 3003) * s.E("e", "rho");
              s.E("eps3", "qx") = -Rational(67, 462) * s.E("eps2", "qx");
              s.E("eps3", "qy") = -Rational(67, 462) * s.E("eps2", "qy");
              s.s("e") = s.s("pxx");
              const Rational sf = flux_rate_third_order(s.s("pxx"));
              s.s("phix") = s.s("phiy") = s.s("xeps2") = s.s("yeps2") = sf;
            }};
  }
  if (order == 3 && c == FamilyCase::annex_example_2) {
    return {concat({kSoundKeys, s_keys(id, {"e", "pxx", "pxy", "phiy", "eps2", "eps3", "pxxe"})}), false,
            [](Scheme& s) {
              set_flux(s, -3);
              set_order_five_moments(s, Rational(31, 6));
              annex_energy_rows(s);
              const Rational& se = s.s("e");
              const Rational& sxx = s.s("pxx");
              s.s("phix") = Rational(2) * (Rational(7) * se + Rational(5) * sxx - Rational(6) * sxx * se) /
                            (Rational(7) * se + Rational(5) * sxx - Rational(4) * sxx * se);
              s.s("xeps2") = s.s("yeps2") = flux_rate_third_order(sxx);
            }};
  }
  if (order == 3 && c == FamilyCase::annex_remark) {
    return {concat({kSoundKeys, s_keys(id, {"pxx", "eps2", "eps3", "pxxe"})}), false, [](Scheme& s) {
              set_flux(s, -1);
              set_order_five_moments(s, Rational(-1, 12));
              annex_energy_rows(s);
              s.s("e") = s.s("pxy") = s.s("pxx");
              const Rational sf = flux_rate_third_order(s.s("pxx"));
              s.s("phix") = s.s("phiy") = s.s("xeps2") = s.s("yeps2") = sf;
            }};
  }
  throw ConfigError("no d2q13 family of order " + std::to_string(order) + " with case " + to_string(c));
}

FamilyDef definition(const FamilySpec& spec) {
  return spec.scheme == SchemeId::d2q9 ? d2q9_definition(spec.order, spec.family_case)
                                       : d2q13_definition(spec.order, spec.family_case);
}

}  // namespace

std::string to_string(FamilyCase c) {
  switch (c) {
    case FamilyCase::generic: return "generic";
    case FamilyCase::p6: return "p6";
    case FamilyCase::p7: return "p7";
    case FamilyCase::p8: return "p8";
    case FamilyCase::even_equal: return "even-equal";
    case FamilyCase::sound_fixed: return "sound-fixed";
    case FamilyCase::annex_example_1: return "annex-example-1";
    case FamilyCase::annex_example_2: return "annex-example-2";
    case FamilyCase::annex_remark: return "annex-remark";
  }
  return "generic";
}

FamilyCase parse_family_case(std::string_view text) {
  for (auto c : {FamilyCase::generic, FamilyCase::p6, FamilyCase::p7, FamilyCase::p8, FamilyCase::even_equal,
                 FamilyCase::sound_fixed, FamilyCase::annex_example_1, FamilyCase::annex_example_2,
                 FamilyCase::annex_remark}) {
    if (to_string(c) == text) return c;
  }
  throw ConfigError("unknown family case '" + std::string(text) + "'");
}

std::string canonical_parameter_key(std::string_view key) {
  std::string k(key);
  if (k == "s_xx") return "s_pxx";
  if (k == "s_xy") return "s_pxy";
  if (k == "s_e3") return "s_eps3";
  if (k.rfind("e3_", 0) == 0) return "eps3_" + k.substr(3);
  if (k.rfind("xx_", 0) == 0) return "pxx_" + k.substr(3);
  if (k.rfind("xy_", 0) == 0) return "pxy_" + k.substr(3);
  return k;
}

FamilyCase default_family_case(SchemeId scheme, int order) {
  if (scheme == SchemeId::d2q9 && order == 3) return FamilyCase::p6;
  if (scheme == SchemeId::d2q9 && order == 4) return FamilyCase::even_equal;
  if (scheme == SchemeId::d2q13 && order == 3) return FamilyCase::annex_example_1;
  return FamilyCase::generic;
}

std::vector<std::string> free_parameters(const FamilySpec& spec) { return definition(spec).free_keys; }

bool acoustic_preferred(const FamilySpec& spec) {
  return !(spec.scheme == SchemeId::d2q9 && spec.family_case == FamilyCase::p8);
}

Rational flux_rate_third_order(const Rational& s_xx) {
  return Rational(3) * (Rational(2) - s_xx) / (Rational(3) - s_xx);
}

Rational flux_rate_fourth_order(const Rational& s_xx) {
  return Rational(6) * (Rational(2) - s_xx) / (Rational(6) - s_xx);
}

Scheme build_family(const FamilySpec& spec) {
  const FamilyDef def = definition(spec);
  std::map<std::string, Rational> params;
  for (const auto& [key, value] : spec.free) {
    const std::string k = canonical_parameter_key(key);
    if (std::find(def.free_keys.begin(), def.free_keys.end(), k) == def.free_keys.end()) {
      throw ConfigError("parameter '" + key + "' is not free in the " + to_string(spec.scheme) + " order-" +
                        std::to_string(spec.order) + " " + to_string(spec.family_case) + " family");
    }
    params[k] = value;
  }

  Scheme scheme(spec.scheme);
  if (def.fixed_sound) {
    scheme.E("e", "rho") = energy_equilibrium_from_c0(spec.scheme, Rational(5, 9));
  } else {
    const auto c0 = params.find("c0_squared");
    const auto er = params.find("e_rho");
    if (er != params.end()) {
      const Rational implied = c0_squared_from_energy(spec.scheme, er->second);
      if (implied <= Rational(0)) throw DomainError("e_rho = " + er->second.str() + " implies a non-positive c0_squared");
      if (c0 != params.end() && c0->second != implied) {
        throw ConfigError("c0_squared = " + c0->second.str() + " is inconsistent with e_rho = " + er->second.str());
      }
      scheme.E("e", "rho") = er->second;
    } else {
      scheme.E("e", "rho") =
          energy_equilibrium_from_c0(spec.scheme, c0 != params.end() ? c0->second : Rational(1, 3));
    }
  }

  for (const auto& [key, value] : params) {
    if (key == "c0_squared" || key == "e_rho") continue;
    if (key.rfind("s_", 0) == 0) {
      if (value <= Rational(0) || value >= Rational(2)) {
        throw DomainError(key + " = " + value.str() + " is outside (0,2)");
      }
      scheme.s(key.substr(2)) = value;
    } else {
      const auto cut = key.rfind('_');
      scheme.E(key.substr(0, cut), key.substr(cut + 1)) = value;
    }
  }

  def.constrain(scheme);
  try {
    scheme.validate_relaxation();
  } catch (const DomainError& e) {
    throw InfeasibleFamilyError(std::string("derived rate infeasible: ") + e.what());
  }
  return scheme;
}

std::vector<Scheme> annex_d2q13_matrices(const std::map<std::string, Rational>& free) {
  std::vector<Scheme> out;
  for (auto c : {FamilyCase::annex_example_1, FamilyCase::annex_example_2, FamilyCase::annex_remark}) {
    FamilySpec spec{SchemeId::d2q13, 3, c, {}};
    const auto keys = free_parameters(spec);
    for (const auto& [k, v] : free) {
      if (std::find(keys.begin(), keys.end(), canonical_parameter_key(k)) != keys.end()) spec.free[k] = v;
    }
    out.push_back(build_family(spec));
  }
  return out;
}

std::optional<FamilyCase> match_annex_family(const Scheme& scheme) {
  if (scheme.id() != SchemeId::d2q13) return std::nullopt;
  for (auto c : {FamilyCase::annex_example_1, FamilyCase::annex_example_2, FamilyCase::annex_remark}) {
    FamilySpec spec{SchemeId::d2q13, 3, c, {}};
    for (const auto& key : free_parameters(spec)) {
      if (key == "c0_squared") continue;
      if (key.rfind("s_", 0) == 0) {
        spec.free[key] = scheme.s(key.substr(2));
      } else {
        const auto cut = key.rfind('_');
        spec.free[key] = scheme.E(key.substr(0, cut), key.substr(cut + 1));
      }
    }
    try {
      if (build_family(spec) == scheme) return c;
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

}  // namespace lbiso
