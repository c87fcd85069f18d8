#pragma once

#include "gqchar/field_element.hpp"
#include "gqchar/weight_character.hpp"

#include <vector>

namespace gqchar {

// Index sequence over I; the weight is the multiset sum of simple roots.
using FreeWord = std::vector<int>;

Weight word_weight(const FreeWord& w, int ellp);

// All words of a given pi-block weight, lexicographically; throws
// cap_exceeded_error when there would be more than word_cap of them.
std::vector<FreeWord> words_of_weight(const Weight& lam, int ell, long word_cap = 200000);

/*
 * Drinfeld pairing of an E-word against an F-word.  Peeling the leading
 * F-letter against each matching E-position accumulates the chi factors of
 * the K-legs commuted through the letters on its left:
 *
 *   theta(E_w, F_j Y) = sum_{t: w_t = j} (prod_{s<t} chi(a_{w_s}, a_j))
 *                       theta(E_{w without t}, Y),
 *
 * with theta(1,1) = 1 and 0 across different weights.
 */
QPoly pairing_theta_poly(const Bicharacter& B, const FreeWord& e_word, const FreeWord& f_word);
FieldElement pairing_theta(const Bicharacter& B, const FreeWord& e_word, const FreeWord& f_word);

// dim U^+_lambda as the rank of [theta(w, w')] over all words of weight
// lambda; the radical of the pairing cuts the free span down to the Nichols
// algebra.
long nichols_dim(const Bicharacter& B, const Weight& lam, long word_cap = 200000);

struct GramMatrix {
    std::vector<FreeWord> words; // row i / column j spans F_{words} v
    std::vector<std::vector<FieldElement>> entries;
};

/*
 * Contravariant-form matrix on the Verma weight space: entry (w, w') is the
 * coefficient of v in E_{rev(w)} F_{w'} v.  Each E-letter commuted through
 * the F-word contributes -chi(a_i, mu)^{-1} Lambda(K_{a_i}) +
 * chi(mu, a_i) Lambda(L_{a_i}), mu the weight of the letters right of the
 * match.
 */
GramMatrix gram_matrix(const Bicharacter& B, const WeightCharacter& lam, const Weight& weight,
                       long word_cap = 200000);

// dim L(Lambda)_{-lambda} = rank of the Gram matrix.
long irreducible_dim(const Bicharacter& B, const WeightCharacter& lam, const Weight& weight,
                     long word_cap = 200000);

} // namespace gqchar
