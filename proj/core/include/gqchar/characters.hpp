#pragma once

#include "gqchar/rootsystem.hpp"
#include "gqchar/weight_character.hpp"
#include "gqchar/weyl.hpp"

#include <map>
#include <vector>

namespace gqchar {

// Finite truncation window: pi-block points nu >= 0 with height(nu) <= bound
// (and optional per-coordinate caps).
struct Region {
    long height_bound = 0;
    std::vector<int> coord_bounds; // empty = none

    bool contains(const Weight& nu, int ell) const;
    std::vector<Weight> points(int ell, int ellp) const; // height-then-lex order
};

/*
 * A character restricted to a region: nu >= 0 stores the dimension at
 * weight -nu.  Entry at 0 is 1 for Verma and irreducible tables.
 */
class DimTable {
  public:
    long long at(const Weight& nu) const; // 0 when absent
    void set(const Weight& nu, long long v);
    const std::map<Weight, long long>& entries() const { return d_; }

  private:
    std::map<Weight, long long> d_;
};

// dim U^-_{-nu} by truncated Kostant partition counting: maps f: R+ -> Z>=0
// with sum f(beta) beta = nu and f(beta) < c_beta whenever c_beta >= 2.
DimTable verma_dims(const RootSystemData& rs, const Region& region);

// dim L(Lambda)_{-nu} = sum_w sgn(w) dim U^-_{-nu - w.0}; requires Lambda
// finite-dimensional and typical.  Reducible (chi,pi) is split into
// connected components and the component tables are multiplied.
DimTable typical_character(const Bicharacter& B, const RootSystemData& rs,
                           const WeightCharacter& lam, const Region& region);

// Coefficientwise check of the key identity
//   prod_{beta real} (e_0 - e_{-beta}) . [[nu]]
//     = prod_{alpha null} (e_0 + e_{-alpha} + ... + e_{-(c_alpha-1)alpha}) . e_nu
// on the region (with an internal margin absorbing the truncation).  Null
// roots with q_beta = 1 have unbounded exponents; their geometric series is
// absorbed by moving the matching difference factor to the left side.
bool check_key_identity(const Bicharacter& B, const RootSystemData& rs, const WeightCharacter& lam,
                        const Region& region);

// Full orbit (w, sgn(w), w.0) with pairwise-distinct dot images.
std::vector<OrbitPoint> weyl_orbit_report(const Bicharacter& B, const RootSystemData& rs,
                                          const WeightCharacter& lam);

// Connected components of { i -- j : q_ij q_ji != 1 } on the pi-block.
std::vector<std::vector<int>> connected_components(const Bicharacter& B);

} // namespace gqchar
