#include "gqchar/weight_character.hpp"

#include "gqchar/errors.hpp"

namespace gqchar {

WeightCharacter::WeightCharacter(std::vector<Monomial> k_values, std::vector<Monomial> l_values)
    : k_(std::move(k_values)), l_(std::move(l_values)) {
    if (k_.size() != l_.size() || k_.empty())
        throw invalid_input_error("weight character needs matching k/l value lists");
}

WeightCharacter WeightCharacter::trivial(int ellp) {
    return WeightCharacter(std::vector<Monomial>(static_cast<size_t>(ellp)),
                           std::vector<Monomial>(static_cast<size_t>(ellp)));
}

WeightCharacter WeightCharacter::zero_map(int ellp) {
    WeightCharacter out = trivial(ellp);
    out.zero_map_ = true;
    return out;
}

WeightCharacter WeightCharacter::from_lambda_values(std::vector<Monomial> lam) {
    const size_t n = lam.size();
    return WeightCharacter(std::move(lam), std::vector<Monomial>(n));
}

Monomial WeightCharacter::K(const Weight& lam) const {
    if (lam.size() != k_.size()) throw invalid_input_error("K: weight length mismatch");
    Monomial out = Monomial::one();
    for (size_t i = 0; i < k_.size(); ++i)
        if (lam[i] != 0) out = out * k_[i].pow(lam[i]);
    return out;
}

Monomial WeightCharacter::L(const Weight& mu) const {
    if (mu.size() != l_.size()) throw invalid_input_error("L: weight length mismatch");
    Monomial out = Monomial::one();
    for (size_t i = 0; i < l_.size(); ++i)
        if (mu[i] != 0) out = out * l_[i].pow(mu[i]);
    return out;
}

bool WeightCharacter::operator<(const WeightCharacter& o) const {
    if (zero_map_ != o.zero_map_) return zero_map_ < o.zero_map_;
    if (k_ != o.k_) return std::lexicographical_compare(k_.begin(), k_.end(), o.k_.begin(), o.k_.end());
    return std::lexicographical_compare(l_.begin(), l_.end(), o.l_.begin(), o.l_.end());
}

WeightCharacter shift(const Bicharacter& B, const WeightCharacter& lam, const Weight& nu) {
    if (lam.is_zero_map()) return lam;
    std::vector<Monomial> k = lam.k_values();
    std::vector<Monomial> l = lam.l_values();
    for (int i = 0; i < B.ellp(); ++i) {
        const Weight e = unit_weight(B.ellp(), i);
        k[static_cast<size_t>(i)] = k[static_cast<size_t>(i)] * B.chi(e, nu);
        l[static_cast<size_t>(i)] = l[static_cast<size_t>(i)] / B.chi(nu, e);
    }
    return WeightCharacter(std::move(k), std::move(l));
}

} // namespace gqchar
