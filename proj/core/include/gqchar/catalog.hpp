#pragma once

#include "gqchar/bicharacter.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gqchar {

/*
 * One fully populated configuration from the built-in family catalog:
 * the bicharacter, the bilinear form ( | ), the fundamental weights, and
 * the classification data (alpha_0, Pi_0, c) used by classify_pibar.
 *
 * Family tags: pibar0, pibar1, pibar2.i .. pibar2.vii, pibar3.i, pibar3.ii,
 * pibar4, pibar5.
 */
struct CatalogParams {
    long m = 0, n = 0;      // pibar2.i/.ii/.iv
    long a = 0;             // pibar2.vii (D(2,1;a)), a integer, not 0 or -1
    std::string cartan;     // pibar1: "A2", "B3", ..., "G2"
    std::string x, y;       // pibar0 (x), pibar3 (x and y), monomial strings
};

struct CatalogConfig {
    std::string family;
    CatalogParams params;
    Bicharacter bichar;
    std::vector<std::vector<mpq_class>> form; // ellp x ellp, ( basis_i | basis_j )
    std::vector<Weight> fundamental;          // varpi_i, i in I
    Weight alpha0;                            // pi-block point, zero when absent
    std::vector<Weight> pi0;
    int c_pibar = 0;
    Monomial x_param, y_param;                // parsed pibar0/pibar3 scalars

    mpq_class pair(const Weight& lam, const Weight& mu) const; // ( lam | mu )
};

CatalogConfig build_catalog(const std::string& family, const CatalogParams& params = {});

// Cartan matrix data behind pibar1; exposed for tests.
// Returns the symmetrized matrix (alpha_i|alpha_j) with (alpha_i|alpha_i) in N.
std::vector<std::vector<long>> symmetrized_cartan(const std::string& type);

} // namespace gqchar
