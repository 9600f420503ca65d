#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <json.hpp>
#include <string>
#include <vector>

#include "lbiso/dispersion.hpp"
#include "lbiso/isotropy.hpp"
#include "lbiso/scheme.hpp"
#include "lbiso/sim.hpp"
#include "lbiso/sym_tensor.hpp"

namespace lbiso {

using Overrides = std::vector<std::pair<std::string, std::string>>;

/// Parses "key=value"; ConfigError if there is no '='.
std::pair<std::string, std::string> parse_override(const std::string& text);

/// Reads a rational from a JSON string ("p/q" or decimal) or number; ConfigError names the key.
Rational json_rational(const nlohmann::json& value, const std::string& key);

/// Parses JSON keeping float literals as strings of their source text.
nlohmann::json parse_config(std::istream& in);

/// Scheme config: {"scheme", "c0_squared", "E": {"row_col": v}, "s": {row: v}}.
/// Overrides ("c0_squared", "e_rho", "row_col", "s_row") are applied before
/// validation. Missing rates and unknown keys are ConfigErrors; rates outside
/// (0,2) are DomainErrors naming the key.
Scheme scheme_from_json(const nlohmann::json& config, const Overrides& overrides = {});
Scheme load_scheme(const std::filesystem::path& path, const Overrides& overrides = {});

/// Inverse of scheme_from_json; E lists e_rho and every non-zero entry.
nlohmann::json scheme_to_json(const Scheme& scheme);

nlohmann::json tensor_to_json(const SymTensor& tensor);
nlohmann::json tensors_to_json(const Scheme& scheme, const std::vector<SymTensor>& tensors);

/// Classifier report plus {"closed_form": {"order_k": bool}} for the orders the checkers cover.
nlohmann::json isotropy_to_json(const Scheme& scheme, const IsotropyReport& report, int max_order);

nlohmann::json dispersion_to_json(const DispersionReport& report);

nlohmann::json sim_summary_to_json(const Scheme& scheme, const SimConfig& config, const SimResult& result);

}  // namespace lbiso
