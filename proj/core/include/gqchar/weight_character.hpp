#pragma once

#include "gqchar/bicharacter.hpp"

#include <vector>

namespace gqchar {

/*
 * An algebra homomorphism Lambda: U^0 -> K with monomial values, given by
 * its values on K_{basis_i} and L_{basis_i}, plus the distinguished zero
 * map O (the value tau_i produces when F_i^m v never vanishes).
 */
class WeightCharacter {
  public:
    WeightCharacter() = default;
    WeightCharacter(std::vector<Monomial> k_values, std::vector<Monomial> l_values);

    static WeightCharacter trivial(int ellp);
    static WeightCharacter zero_map(int ellp); // O
    // Lambda with K-values lam_i on the basis and L-values 1; every
    // observable here depends on Lambda only through K/L ratios.
    static WeightCharacter from_lambda_values(std::vector<Monomial> lam);

    bool is_zero_map() const { return zero_map_; }
    int ellp() const { return static_cast<int>(k_.size()); }

    const std::vector<Monomial>& k_values() const { return k_; }
    const std::vector<Monomial>& l_values() const { return l_; }

    Monomial K(const Weight& lam) const;
    Monomial L(const Weight& mu) const;
    Monomial eval(const Weight& lam, const Weight& mu) const { return K(lam) * L(mu); }
    // lambda_beta := Lambda(K_beta L_{-beta})
    Monomial lambda(const Weight& beta) const { return K(beta) / L(beta); }

    bool operator==(const WeightCharacter& o) const {
        return zero_map_ == o.zero_map_ && k_ == o.k_ && l_ == o.l_;
    }
    bool operator<(const WeightCharacter& o) const; // map key order

  private:
    bool zero_map_ = false;
    std::vector<Monomial> k_, l_;
};

// Lambda^{+nu}: K-leg multiplied by chi(., nu), L-leg by chi(nu, .)^{-1}.
WeightCharacter shift(const Bicharacter& B, const WeightCharacter& lam, const Weight& nu);

} // namespace gqchar
