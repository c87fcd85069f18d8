#pragma once

#include "gqchar/catalog.hpp"
#include "gqchar/rootsystem.hpp"
#include "gqchar/weight_character.hpp"

#include <map>
#include <optional>
#include <string>

namespace gqchar {

// Largest h with F_i^h v_Lambda != 0, i.e. max m with
// (m)_{q_ii}! (m; q_ii^{-1}, lambda_i)! != 0; nullopt when unbounded.
std::optional<long long> fimv_height(const Monomial& q_ii, const Monomial& lambda_i);

// tau_{i,Lambda} through the object's i-th simple root; the zero map O is a
// regular return value (F_i^m v never vanishing).
WeightCharacter tau_shift(const Bicharacter& B, const GroupoidObject& obj,
                          const WeightCharacter& lam, int i);

// dim L(Lambda) < infinity, decided by breadth-first search over
// (object, character) states expanding by tau_shift in every direction.
bool is_finite_dim(const Bicharacter& B, const WeightCharacter& lam, long state_cap = 100000);

// Lambda(P-hat) != 0 jointly with dim L < infinity is typicality; this is
// the P-hat nonvanishing part: for every null positive beta and every
// t in [1, c_beta - 1], (hrho(beta) lambda_beta)^{±1} != q_beta^t.
// False whenever some null beta has q_beta = 1 (then P-hat = 0).
bool phat_nonzero(const Bicharacter& B, const RootSystemData& rs, const WeightCharacter& lam);

bool is_typical(const Bicharacter& B, const RootSystemData& rs, const WeightCharacter& lam);

// Exact decision of the Shapovalov genericity hypothesis: q_beta != 1 and
// hrho(beta) lambda_beta != q_beta^t for all beta in R+ and t >= 1 with
// q_beta^t != 1.  In that regime dim L = dim M everywhere.
bool shapo_generic(const Bicharacter& B, const RootSystemData& rs, const WeightCharacter& lam);

struct ClassifyVerdict {
    bool passes_integrality = false;           // the lambda_beta = q_beta^{t_beta} condition
    std::map<std::string, long long> t_values; // keyed by printable root, "alpha0" for alpha_0
    long long t_alpha0 = 0;
    bool finite = false;
    std::string matched_condition; // "t0>=c", "C1".."C11", "rank-one", or "" when infinite
};

// Closed-form classification on a catalog object: integrality of the
// lambda_beta exponents on Pi_0 and alpha_0, the t_alpha0 >= c threshold,
// and the named sub-threshold conditions C1..C11.  Condition C10 only
// constrains the third simple root by default; the flag switches to the
// stricter reading that also constrains the fourth.
ClassifyVerdict classify_pibar(const CatalogConfig& cfg, const WeightCharacter& lam,
                               bool c10_include_fourth = false);

} // namespace gqchar
