#include "lbiso/io.hpp"

#include <cmath>
#include <fstream>

#include "lbiso/errors.hpp"
#include "lbiso/families.hpp"

namespace lbiso {

namespace {

using nlohmann::json;

std::string row_alias(const std::string& row) {
  if (row == "e3") return "eps3";
  if (row == "xx") return "pxx";
  if (row == "xy") return "pxy";
  return row;
}

// Splits "row_col" into canonical parts; ConfigError if malformed or unknown.
std::pair<std::string, std::string> split_entry_key(SchemeId id, const std::string& key) {
  const auto cut = key.rfind('_');
  if (cut == std::string::npos) throw ConfigError("equilibrium key '" + key + "' must look like row_col, e.g. phix_qx");
  std::string row = row_alias(key.substr(0, cut));
  std::string col = key.substr(cut + 1);
  nonconserved_index(id, row);
  conserved_index(col);
  return {row, col};
}

// DOM builder that keeps float literals as their source text, so decimals
// beyond double precision stay exact.
class ExactNumberSax : public nlohmann::detail::json_sax_dom_parser<json> {
 public:
  using nlohmann::detail::json_sax_dom_parser<json>::json_sax_dom_parser;
  bool number_float(json::number_float_t, const json::string_t& text) {
    json::string_t copy = text;
    return string(copy);
  }
};

struct RawConfig {
  SchemeId id = SchemeId::d2q9;
  std::optional<Rational> c0_squared;
  std::map<std::pair<std::string, std::string>, Rational> entries;
  std::map<std::string, Rational> rates;
};

}  // namespace

std::pair<std::string, std::string> parse_override(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("override '" + text + "' must look like key=value");
  return {text.substr(0, eq), text.substr(eq + 1)};
}

Rational json_rational(const json& value, const std::string& key) {
  try {
    if (value.is_string()) return Rational::parse(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long>());
    if (value.is_number_float()) {
      if (!std::isfinite(value.get<double>())) throw ConfigError("non-finite");
      return Rational::parse(value.dump());
    }
  } catch (const ConfigError& e) {
    throw ConfigError("malformed rational for '" + key + "': " + e.what());
  }
  throw ConfigError("value of '" + key + "' must be a string or a number");
}

Scheme scheme_from_json(const json& config, const Overrides& overrides) {
  if (!config.is_object()) throw ConfigError("scheme config must be a JSON object");
  for (const auto& [key, _] : config.items()) {
    if (key != "scheme" && key != "c0_squared" && key != "E" && key != "s" && key != "family") {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  if (!config.contains("scheme") || !config["scheme"].is_string()) throw ConfigError("config is missing 'scheme'");
  RawConfig raw;
  raw.id = parse_scheme_id(config["scheme"].get<std::string>());
  if (config.contains("c0_squared")) raw.c0_squared = json_rational(config["c0_squared"], "c0_squared");
  if (config.contains("E")) {
    if (!config["E"].is_object()) throw ConfigError("'E' must be an object");
    for (const auto& [key, value] : config["E"].items()) raw.entries[split_entry_key(raw.id, key)] = json_rational(value, "E." + key);
  }
  if (config.contains("s")) {
    if (!config["s"].is_object()) throw ConfigError("'s' must be an object");
    for (const auto& [key, value] : config["s"].items()) {
      const std::string row = row_alias(key);
      nonconserved_index(raw.id, row);
      raw.rates[row] = json_rational(value, "s." + key);
    }
  }

  const std::pair<std::string, std::string> energy{"e", "rho"};
  for (const auto& [key_in, text] : overrides) {
    const std::string key = canonical_parameter_key(key_in);
    Rational value;
    try {
      value = Rational::parse(text);
    } catch (const ConfigError& e) {
      throw ConfigError("malformed rational for '" + key_in + "': " + e.what());
    }
    if (key == "c0_squared") {
      raw.c0_squared = value;
      raw.entries.erase(energy);
    } else if (key.rfind("s_", 0) == 0) {
      const std::string row = row_alias(key.substr(2));
      nonconserved_index(raw.id, row);
      raw.rates[row] = value;
    } else {
      const auto entry = split_entry_key(raw.id, key);
      raw.entries[entry] = value;
      if (entry == energy) raw.c0_squared.reset();
    }
  }

  Scheme scheme(raw.id);
  const auto e_it = raw.entries.find(energy);
  if (e_it != raw.entries.end()) {
    if (raw.c0_squared && energy_equilibrium_from_c0(raw.id, *raw.c0_squared) != e_it->second) {
      throw ConfigError("E.e_rho = " + e_it->second.str() + " is inconsistent with c0_squared = " + raw.c0_squared->str());
    }
  } else if (raw.c0_squared) {
    raw.entries[energy] = energy_equilibrium_from_c0(raw.id, *raw.c0_squared);
  } else {
    throw ConfigError("config needs 'c0_squared' or E.e_rho");
  }
  for (const auto& [entry, value] : raw.entries) scheme.E(entry.first, entry.second) = value;
  for (const auto& row : nonconserved_names(raw.id)) {
    const auto it = raw.rates.find(row);
    if (it == raw.rates.end()) throw ConfigError("missing relaxation rate 's." + row + "'");
    if (it->second <= Rational(0) || it->second >= Rational(2)) {
      throw DomainError("s." + row + " = " + it->second.str() + " is outside (0,2)");
    }
    scheme.s(row) = it->second;
  }
  return scheme;
}

json parse_config(std::istream& in) {
  json out;
  ExactNumberSax sax(out);
  json::sax_parse(in, &sax);
  return out;
}

Scheme load_scheme(const std::filesystem::path& path, const Overrides& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  try {
    return scheme_from_json(parse_config(in), overrides);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path.string() + "' is not valid JSON: " + e.what());
  }
}

json scheme_to_json(const Scheme& scheme) {
  json out;
  out["scheme"] = to_string(scheme.id());
  out["c0_squared"] = scheme.c0_squared().str();
  json e = json::object();
  const auto& rows = nonconserved_names(scheme.id());
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t c = 0; c < kConserved; ++c) {
      const Rational& v = scheme.equilibrium()(k, c);
      const bool energy = rows[k] == "e" && c == 0;
      if (energy || !v.is_zero()) e[rows[k] + "_" + kConservedNames[c]] = v.str();
    }
  out["E"] = e;
  json s = json::object();
  for (std::size_t k = 0; k < rows.size(); ++k) s[rows[k]] = scheme.relaxation()[k].str();
  out["s"] = s;
  return out;
}

json tensor_to_json(const SymTensor& tensor) {
  json entries = json::array();
  for (std::size_t i = 0; i < tensor.size(); ++i)
    for (std::size_t j = 0; j < tensor.size(); ++j)
      for (int x = tensor.order(); x >= 0; --x) {
        const Rational& v = tensor.at(i, j, x);
        if (v.is_zero()) continue;
        entries.push_back({{"i", kConservedNames[i]},
                           {"j", kConservedNames[j]},
                           {"derivs", derivative_string(tensor.order(), x)},
                           {"value", v.str()}});
      }
  return {{"order", tensor.order()}, {"entries", entries}};
}

json tensors_to_json(const Scheme& scheme, const std::vector<SymTensor>& tensors) {
  json list = json::array();
  for (const auto& t : tensors) list.push_back(tensor_to_json(t));
  return {{"scheme", to_string(scheme.id())}, {"max_order", tensors.size()}, {"tensors", list}};
}

json isotropy_to_json(const Scheme& scheme, const IsotropyReport& report, int max_order) {
  json out;
  out["scheme"] = to_string(scheme.id());
  out["max_order"] = max_order;
  out["order_achieved"] = report.order_achieved;
  json residuals = json::array();
  for (const auto& r : report.residuals) residuals.push_back({{"order", r.order}, {"max_abs", r.max_abs.str()}});
  out["residuals"] = residuals;
  if (report.witness) {
    const auto& w = *report.witness;
    out["witness"] = {{"order", w.order},
                      {"i", kConservedNames[w.i]},
                      {"j", kConservedNames[w.j]},
                      {"derivs", w.derivs},
                      {"rotation", {{"c", w.rotation.c().str()}, {"s", w.rotation.s().str()}}},
                      {"defect", w.defect.str()}};
  } else {
    out["witness"] = nullptr;
  }
  json closed = json::object();
  const int top = scheme.id() == SchemeId::d2q9 ? max_order : std::min(max_order, 3);
  for (int k = 1; k <= top; ++k) closed["order_" + std::to_string(k)] = check_closed_form(scheme, k);
  out["closed_form"] = closed;
  return out;
}

json dispersion_to_json(const DispersionReport& report) {
  json samples = json::array();
  for (const auto& s : report.samples) {
    samples.push_back({{"k", s.k}, {"error", s.skipped ? json(nullptr) : json(s.error)}, {"skipped", s.skipped}});
  }
  return {{"order", report.order},
          {"slope", std::isfinite(report.slope) ? json(report.slope) : json(nullptr)},
          {"expected_min_slope", report.order + 1 - 0.2},
          {"samples", samples}};
}

json sim_summary_to_json(const Scheme& scheme, const SimConfig& config, const SimResult& result) {
  const auto drift = [&](std::size_t k) {
    const double scale = std::max(std::abs(result.initial_totals[0]), 1.0);
    return std::abs(result.final_totals[k] - result.initial_totals[k]) / scale;
  };
  return {{"scheme", scheme_to_json(scheme)},
          {"grid", config.grid},
          {"dx", config.dx},
          {"lambda", config.lambda},
          {"steps", config.steps},
          {"init", to_string(config.init)},
          {"max_abs_rho0_minus_rho_pi4", result.metrics.max_pi4},
          {"max_abs_rho0_minus_rho_atan12", result.metrics.max_atan12},
          {"max_abs_rho0_minus_rho_pi2", result.metrics.max_pi2},
          {"relative_drift", {{"rho", drift(0)}, {"qx", drift(1)}, {"qy", drift(2)}}}};
}

}  // namespace lbiso
