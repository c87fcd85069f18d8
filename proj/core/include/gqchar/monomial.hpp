#pragma once

#include <optional>
#include <string>

namespace gqchar {

/*
 * A monomial scalar z^a q^b in the subgroup <zeta_N> . q^Z of K^x, where
 * z is a fixed primitive N-th root of unity and q is generic.  a is kept
 * reduced mod N, so comparison is componentwise.  These carry every value
 * of a bicharacter and of a weight character.
 *
 * String grammar: `[-] [z^<int>] [*] [q^<int>]`, whitespace-insensitive;
 * `1`, `-1`, `q`, `-q^3`, `z^2*q^-1` are all legal.  A leading `-` needs
 * N even (it stands for z^{N/2}).
 */
class Monomial {
  public:
    Monomial() : root_exp_(0), q_exp_(0) {} // the unit
    Monomial(long root_exp, long long q_exp);

    static Monomial one() { return Monomial(); }
    static Monomial minus_one(); // needs N even
    static Monomial q(long long e = 1) { return Monomial(0, e); }
    static Monomial zeta(long e = 1) { return Monomial(e, 0); }

    int root_exp() const { return root_exp_; }
    long long q_exp() const { return q_exp_; }
    bool is_one() const { return root_exp_ == 0 && q_exp_ == 0; }
    // member of K^x_infty, i.e. no positive power equals 1
    bool has_infinite_order() const { return q_exp_ != 0; }

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    Monomial operator/(const Monomial& o) const { return *this * o.inverse(); }
    Monomial pow(long long k) const;

    bool operator==(const Monomial& o) const {
        return root_exp_ == o.root_exp_ && q_exp_ == o.q_exp_;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    bool operator<(const Monomial& o) const; // arbitrary total order for maps

    std::string str() const;
    static Monomial parse(const std::string& text); // throws invalid_input_error

  private:
    int root_exp_;      // in [0, N)
    long long q_exp_;
};

// Least r >= 2 with (r)_x! = 0, or 0 if none.  In characteristic zero this
// is the multiplicative order of x when x is a root of unity != 1, else 0.
int qchar_of(const Monomial& x);

// (n)_x! != 0, i.e. n < qchar(x) whenever qchar(x) >= 2.
bool qfactorial_nonzero(const Monomial& x, long n);

// k with base^k == value.  Unique when base has q_exp != 0; for a pure root
// of unity the least nonnegative solution is returned.  nullopt when no
// solution exists; base == 1 violates the precondition and throws.
std::optional<long long> discrete_log(const Monomial& base, const Monomial& value);

// Max m >= 0 with (m)_x! (m; x, y)! != 0, nullopt when unbounded.
// This is the N_ij of the reflection maps, taken at x = q_ii, y = q_ij q_ji.
std::optional<long long> max_nonvanishing(const Monomial& x, const Monomial& y);

} // namespace gqchar
