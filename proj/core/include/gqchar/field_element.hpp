#pragma once

#include "gqchar/qpoly.hpp"

#include <vector>

namespace gqchar {

/*
 * Element of K = Q(zeta_N)(q) as an unreduced fraction of Laurent
 * polynomials.  Fractions are only compared by cross-multiplication;
 * nothing reduces them behind the caller's back.
 */
class FieldElement {
  public:
    FieldElement() : num_(), den_(QPoly::one()) {}
    explicit FieldElement(long v) : num_(v), den_(QPoly::one()) {}
    explicit FieldElement(const QPoly& numerator) : num_(numerator), den_(QPoly::one()) {}
    FieldElement(const QPoly& numerator, const QPoly& denominator);
    explicit FieldElement(const Monomial& m) : num_(QPoly(m)), den_(QPoly::one()) {}

    static FieldElement one() { return FieldElement(1); }

    bool is_zero() const { return num_.is_zero(); }
    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const; // throws on zero divisor
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string str() const;

  private:
    QPoly num_, den_;
};

enum class PivotOrder { FirstNonzero, LastNonzero };

// Rank over the fraction field by fraction-free (Bareiss) elimination on the
// denominator-cleared matrix; all intermediate values stay exact.
long matrix_rank(const std::vector<std::vector<FieldElement>>& m,
                 PivotOrder order = PivotOrder::FirstNonzero);
long matrix_rank(const std::vector<std::vector<QPoly>>& m,
                 PivotOrder order = PivotOrder::FirstNonzero);

} // namespace gqchar
