#pragma once

#include "gqchar/rootsystem.hpp"
#include "gqchar/weight_character.hpp"

#include <vector>

namespace gqchar {

/*
 * Element of the Weyl group of real roots, as an integer automorphism of
 * the full lattice together with its sign and one shortest generator word
 * (indices into the positive real root list).
 */
struct WeylElement {
    std::vector<std::vector<int>> matrix; // ellp x ellp, column = image of basis vector
    int sign = 1;
    std::vector<int> word;

    Weight apply(const Weight& w) const;
    bool is_identity() const;
};

// s_beta(lam) = lam - k beta with chi(beta,lam)chi(lam,beta) = q_beta^k,
// computed columnwise on the basis.  Throws no_discrete_log_error when some
// basis vector admits no k.
WeylElement reflection(const Bicharacter& B, const RootSystemData& rs, const Weight& beta);

// Closure of the real-root reflections under composition.  Elements carry
// sign = parity of the stored word, asserted against the determinant of the
// pi-block restriction.
std::vector<WeylElement> generate_weyl_group(const Bicharacter& B, const RootSystemData& rs,
                                             long size_cap = 20000);

// The integer m with hrho(beta) = q_beta^m, computed combinatorially:
// m beta = sum of (1 - c_a) a over R(beta) = { a in R+ : s_beta(a) in -R+ }.
// Cross-validated against the discrete log; disagreement is an internal
// error.
long long r_beta(const Bicharacter& B, const RootSystemData& rs, const Weight& beta);

// n^Lambda_beta with Lambda(K_beta L_{-beta}) = q_beta^n (beta real).
long long n_beta(const Bicharacter& B, const RootSystemData& rs, const WeightCharacter& lam,
                 const Weight& beta);

// Dot action on the pi-block: s_beta . v = s_beta(v) - (r_beta + n_beta) beta.
Weight dot_apply(const Bicharacter& B, const RootSystemData& rs, const WeightCharacter& lam,
                 const Weight& beta, const Weight& v);

// w . 0, left-folding the dot action along the stored generator word.
Weight dot_zero(const Bicharacter& B, const RootSystemData& rs, const WeightCharacter& lam,
                const WeylElement& w);

struct OrbitPoint {
    WeylElement element;
    int sign = 1;
    Weight dot0; // pi-block point (length ellp, eps coords 0)
};

// Full orbit { w . 0 } with signs; asserts pairwise distinctness.
std::vector<OrbitPoint> dot_zero_orbit(const Bicharacter& B, const RootSystemData& rs,
                                       const WeightCharacter& lam,
                                       const std::vector<WeylElement>& group);

// X_f: positive real roots on which f > 0 that are not sums of >= 2 such
// roots; default f = coordinate sum.  Throws degenerate-functional errors
// via invalid_input_error when f vanishes on a real root.
std::vector<Weight> simple_real_system(const RootSystemData& rs,
                                       const std::vector<long>* f = nullptr);

// hat-delta = sum of all positive real roots; s_a(hat-delta) = hat-delta - 2a
// for a in X_f.
Weight hatdelta(const RootSystemData& rs);

} // namespace gqchar
