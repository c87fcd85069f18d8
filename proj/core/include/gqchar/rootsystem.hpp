#pragma once

#include "gqchar/bicharacter.hpp"

#include <optional>
#include <vector>

namespace gqchar {

/*
 * One object of the Weyl groupoid: an ordered Z-basis of A_pi, written in
 * the fixed coordinates.  Reflecting twice at the same index returns the
 * same object.
 */
struct GroupoidObject {
    std::vector<Weight> simples; // ell weights of length ell' (eps coords 0)
    int parent = -1;             // provenance in the BFS, -1 for the start
    int reflect_index = -1;
};

struct RootRecord {
    Weight beta;
    Monomial q_beta;
    int c_beta = 0;
    bool is_real = false; // q_beta of infinite order
};

struct RootSystemData {
    Bicharacter bichar;
    std::vector<RootRecord> positive; // sorted height-then-lex
    std::vector<GroupoidObject> objects;

    const RootRecord& record(const Weight& beta) const; // throws if not a root
    const RootRecord* find(const Weight& beta) const;
    std::vector<const RootRecord*> real_positive() const;
    std::vector<const RootRecord*> null_positive() const;
    long max_root_height() const;
};

// N_ij = max{ m >= 0 : (m)_{q_ii}! (m; q_ii, q_ij q_ji)! != 0 } through the
// object's simples; nullopt means no finite maximum (infinite root system).
std::optional<long long> cartan_n(const Bicharacter& B, const GroupoidObject& obj, int i, int j);

// tau_i: i -> -alpha_i, j -> alpha_j + N_ij alpha_i.
// Throws infinite_type_error when some N_ij is infinite.
GroupoidObject reflect_object(const Bicharacter& B, const GroupoidObject& obj, int i);

GroupoidObject initial_object(const Bicharacter& B);

// Breadth-first closure over reflect_object; R+ is the set of simples of
// all visited objects that lie in the positive cone.
RootSystemData compute_roots(const Bicharacter& B, long object_cap = 10000);

// The identity chi(a_i,l)^{c_i-1} chi(l,a_i)^{c_i-1} = hrho'(l)/hrho(l),
// where hrho' is evaluated in the coordinates of the reflected object.
bool check_rcrho(const Bicharacter& B, const GroupoidObject& obj, int i, const Weight& lam);

} // namespace gqchar
