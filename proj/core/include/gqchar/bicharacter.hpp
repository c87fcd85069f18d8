#pragma once

#include "gqchar/lattice.hpp"
#include "gqchar/monomial.hpp"

#include <vector>

namespace gqchar {

/*
 * The bicharacter chi: A x A -> K^x, determined by its values on the fixed
 * basis.  Entry (i,j) is chi(basis_i, basis_j); evaluation multiplies the
 * entries raised to coordinate products, which makes both biadditivity laws
 * hold by construction.  Indices 0..ell-1 are the pi-block.
 */
class Bicharacter {
  public:
    Bicharacter() : ell_(1), ext_(0), m_{{Monomial::one()}} {} // trivial rank 1
    Bicharacter(int ell, int ext_rank, std::vector<std::vector<Monomial>> matrix);

    int ell() const { return ell_; }
    int ext_rank() const { return ext_; }
    int ellp() const { return ell_ + ext_; }

    const Monomial& entry(int i, int j) const;
    Monomial chi(const Weight& lam, const Weight& mu) const; // throws on length mismatch

    // q_lambda := chi(lambda,lambda) and c_lambda := ch(q_lambda)
    Monomial q_of(const Weight& lam) const { return chi(lam, lam); }
    int c_of(const Weight& lam) const;

    // h_rho(alpha_j) = q_jj on the pi-block, 1 on the eps-block
    Monomial hrho(const Weight& lam) const;

    // connectivity of { i -- j : q_ij q_ji != 1 } on the pi-block
    bool irreducible() const;

    bool operator==(const Bicharacter& o) const {
        return ell_ == o.ell_ && ext_ == o.ext_ && m_ == o.m_;
    }

  private:
    int ell_, ext_;
    std::vector<std::vector<Monomial>> m_; // ellp x ellp
};

} // namespace gqchar
