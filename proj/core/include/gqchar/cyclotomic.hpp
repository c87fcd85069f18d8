#pragma once

#include <gmpxx.h>

#include <vector>

namespace gqchar {

// The cyclotomic order N is fixed once per run (before any computation) and
// shared by every scalar in the process.  Supported orders keep phi(N) <= 4.
int cyclotomic_order();
void set_cyclotomic_order(int n); // n in {1,2,3,4,6,12}
int cyclotomic_degree();          // phi(N)

/*
 * An element of Q(zeta_N), stored on the power basis 1, z, ..., z^{phi-1}
 * modulo the N-th cyclotomic polynomial.  The representation is canonical,
 * so equality and zero tests are coefficient comparisons.
 */
class CycloRational {
  public:
    CycloRational();                         // 0
    explicit CycloRational(long value);
    explicit CycloRational(const mpq_class& value);
    static CycloRational zeta_power(long k); // z^k reduced mod Phi_N

    bool is_zero() const;
    bool operator==(const CycloRational& o) const { return c_ == o.c_; }
    bool operator!=(const CycloRational& o) const { return !(*this == o); }

    CycloRational operator-() const;
    CycloRational& operator+=(const CycloRational& o);
    CycloRational& operator-=(const CycloRational& o);
    CycloRational operator+(const CycloRational& o) const;
    CycloRational operator-(const CycloRational& o) const;
    CycloRational operator*(const CycloRational& o) const;
    CycloRational inverse() const;           // throws invalid_input_error on 0

    const std::vector<mpq_class>& coeffs() const { return c_; }
    std::string str() const;                 // debug form, e.g. "1/2 - 3 z"

  private:
    std::vector<mpq_class> c_; // size phi(N)
};

} // namespace gqchar
