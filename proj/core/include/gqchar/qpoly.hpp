#pragma once

#include "gqchar/cyclotomic.hpp"
#include "gqchar/monomial.hpp"

#include <map>
#include <optional>
#include <string>

namespace gqchar {

/*
 * Sparse Laurent polynomial in q with coefficients in Q(zeta_N).
 * Zero coefficients are never stored, so is_zero() is emptiness.
 */
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(long constant);
    explicit QPoly(const CycloRational& constant);
    explicit QPoly(const Monomial& m); // embeds z^a q^b

    static QPoly one() { return QPoly(1); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long long, CycloRational>& terms() const { return terms_; }
    void set_term(long long q_exp, const CycloRational& coeff);

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    bool operator==(const QPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    // Quotient when the division is exact, nullopt otherwise.
    std::optional<QPoly> divide_exact(const QPoly& divisor) const;

    long long min_exp() const; // lowest stored exponent; 0 for the zero poly

    std::string str() const;

  private:
    std::map<long long, CycloRational> terms_;
    void trim(long long key);
};

} // namespace gqchar
