#pragma once

#include <stdexcept>
#include <string>

namespace gqchar {

// Bad user input: malformed monomial strings, invalid family parameters,
// mismatched vector lengths, weights outside the positive cone.
struct invalid_input_error : std::runtime_error {
    explicit invalid_input_error(const std::string& what) : std::runtime_error(what) {}
};

// The root system (or the Weyl group / BFS state set) is provably infinite.
struct infinite_type_error : std::runtime_error {
    explicit infinite_type_error(const std::string& what) : std::runtime_error(what) {}
};

// A search exceeded its configured budget without a verdict.  Distinct from
// infinite_type_error: the object may still be finite, the budget was not.
struct cap_exceeded_error : std::runtime_error {
    explicit cap_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

// chi(beta,.)chi(.,beta) is not a power of q_beta on some lattice vector.
struct no_discrete_log_error : std::runtime_error {
    explicit no_discrete_log_error(const std::string& what) : std::runtime_error(what) {}
};

// Lambda(K_beta L_{-beta}) is not an integer power of q_beta.
struct no_integer_exponent_error : std::runtime_error {
    explicit no_integer_exponent_error(const std::string& what) : std::runtime_error(what) {}
};

struct not_typical_error : std::runtime_error {
    explicit not_typical_error(const std::string& what) : std::runtime_error(what) {}
};

struct not_finite_dim_error : std::runtime_error {
    explicit not_finite_dim_error(const std::string& what) : std::runtime_error(what) {}
};

// Two routes that must agree disagreed; always a bug, never user error.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace gqchar
