#pragma once

#include "gqchar/catalog.hpp"
#include "gqchar/weight_character.hpp"

#include <optional>
#include <string>

namespace gqchar {

/*
 * JSON config files come in two shapes:
 *   {"family": "pibar2.iv", "m": 2, "n": 1}           catalog entry
 *   {"matrix": [["q^2","q^-2"],["1","q^2"]],
 *    "ell": 2, "ext_rank": 0}                          explicit bicharacter
 * plus an optional "cyclotomic_order" (default 6).  Monomial strings follow
 * the scalar grammar.
 */
struct LoadedConfig {
    Bicharacter bichar;
    std::optional<CatalogConfig> catalog;
};

LoadedConfig load_config_file(const std::string& path);
LoadedConfig load_config_text(const std::string& json_text);

/*
 * Weight files give Lambda either per basis vector,
 *   {"k": ["q^3", "1"], "l": ["1", "1"]}   or   {"lambda": ["q^-3", "q"]},
 * or, for catalog runs, as lambda_beta values on Pi_0 and alpha_0,
 *   {"lambda_pi0": {"alpha0": "q^-2", "(1,0)": "1", ...}}.
 * The Pi_0 form can be underdetermined; the canonical solution with the
 * smallest nonnegative exponents is chosen and reported.
 */
WeightCharacter load_weight_file(const std::string& path, const LoadedConfig& cfg);
WeightCharacter load_weight_text(const std::string& json_text, const LoadedConfig& cfg);

} // namespace gqchar
