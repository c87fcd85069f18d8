#include "gqchar/oracle.hpp"

#include "gqchar/errors.hpp"

#include <algorithm>
#include <map>

namespace gqchar {

Weight word_weight(const FreeWord& w, int ellp) {
    Weight out = zero_weight(ellp);
    for (int i : w) out[static_cast<size_t>(i)] += 1;
    return out;
}

std::vector<FreeWord> words_of_weight(const Weight& lam, int ell, long word_cap) {
    if (!is_nonnegative(lam)) throw invalid_input_error("words_of_weight: weight not in A_pi^+");
    for (size_t i = static_cast<size_t>(ell); i < lam.size(); ++i)
        if (lam[i] != 0) throw invalid_input_error("words_of_weight: weight touches the eps block");

    // multinomial count with an early cap
    long total = 0;
    for (int i = 0; i < ell; ++i) total += lam[static_cast<size_t>(i)];
    long double estimate = 1;
    {
        long placed = 0;
        for (int i = 0; i < ell; ++i) {
            for (int k = 1; k <= lam[static_cast<size_t>(i)]; ++k) {
                ++placed;
                estimate = estimate * placed / k;
                if (estimate > static_cast<long double>(word_cap) * 2) break;
            }
        }
    }
    if (estimate > static_cast<long double>(word_cap))
        throw cap_exceeded_error("word count for weight " + weight_str(lam) + " exceeds cap " +
                                 std::to_string(word_cap));

    FreeWord sorted;
    for (int i = 0; i < ell; ++i)
        sorted.insert(sorted.end(), static_cast<size_t>(lam[static_cast<size_t>(i)]), i);
    std::vector<FreeWord> out;
    if (sorted.empty()) {
        out.push_back({});
        return out;
    }
    do out.push_back(sorted);
    while (std::next_permutation(sorted.begin(), sorted.end()));
    return out;
}

namespace {

int next_depth(unsigned mask, int len) { return len - __builtin_popcount(mask); }

QPoly theta_rec(const Bicharacter& B, const FreeWord& u, const FreeWord& w, unsigned mask,
                std::map<unsigned, QPoly>& memo) {
    if (mask == 0) return QPoly::one();
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int len = static_cast<int>(u.size());
    const int j = w[static_cast<size_t>(next_depth(mask, len))];
    QPoly sum;
    for (int t = 0; t < len; ++t) {
        if (!(mask & (1u << t)) || u[static_cast<size_t>(t)] != j) continue;
        Monomial factor = Monomial::one();
        for (int s = 0; s < t; ++s)
            if (mask & (1u << s)) factor = factor * B.entry(u[static_cast<size_t>(s)], j);
        sum += QPoly(factor) * theta_rec(B, u, w, mask & ~(1u << t), memo);
    }
    memo.emplace(mask, sum);
    return sum;
}

QPoly gram_rec(const Bicharacter& B, const WeightCharacter& lam, const FreeWord& e_word,
               const FreeWord& f_word, unsigned mask, std::map<unsigned, QPoly>& memo) {
    if (mask == 0) return QPoly::one();
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int len = static_cast<int>(f_word.size());
    const int i = e_word[static_cast<size_t>(next_depth(mask, len))];
    const Monomial ki = lam.k_values()[static_cast<size_t>(i)];
    const Monomial li = lam.l_values()[static_cast<size_t>(i)];
    QPoly sum;
    for (int t = 0; t < len; ++t) {
        if (!(mask & (1u << t)) || f_word[static_cast<size_t>(t)] != i) continue;
        // K_{a_i} and L_{a_i} transported through the letters right of t
        Monomial chi_i_mu = Monomial::one(); // chi(a_i, mu)
        Monomial chi_mu_i = Monomial::one(); // chi(mu, a_i)
        for (int s = t + 1; s < len; ++s) {
            if (!(mask & (1u << s))) continue;
            chi_i_mu = chi_i_mu * B.entry(i, f_word[static_cast<size_t>(s)]);
            chi_mu_i = chi_mu_i * B.entry(f_word[static_cast<size_t>(s)], i);
        }
        QPoly coeff = QPoly(chi_mu_i * li) - QPoly(chi_i_mu.inverse() * ki);
        sum += coeff * gram_rec(B, lam, e_word, f_word, mask & ~(1u << t), memo);
    }
    memo.emplace(mask, sum);
    return sum;
}

} // namespace

QPoly pairing_theta_poly(const Bicharacter& B, const FreeWord& e_word, const FreeWord& f_word) {
    if (word_weight(e_word, B.ellp()) != word_weight(f_word, B.ellp())) return QPoly();
    if (e_word.size() > 20) throw cap_exceeded_error("pairing word too long");
    std::map<unsigned, QPoly> memo;
    const unsigned full = e_word.empty() ? 0u : ((1u << e_word.size()) - 1u);
    return theta_rec(B, e_word, f_word, full, memo);
}

FieldElement pairing_theta(const Bicharacter& B, const FreeWord& e_word, const FreeWord& f_word) {
    return FieldElement(pairing_theta_poly(B, e_word, f_word));
}

long nichols_dim(const Bicharacter& B, const Weight& lam, long word_cap) {
    const auto words = words_of_weight(lam, B.ell(), word_cap);
    std::vector<std::vector<QPoly>> m(words.size(), std::vector<QPoly>(words.size()));
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = 0; j < words.size(); ++j)
            m[i][j] = pairing_theta_poly(B, words[i], words[j]);
    return matrix_rank(m);
}

GramMatrix gram_matrix(const Bicharacter& B, const WeightCharacter& lam, const Weight& weight,
                       long word_cap) {
    if (lam.is_zero_map()) throw invalid_input_error("gram_matrix: Lambda is the zero map");
    if (height(weight, B.ell()) > 25)
        throw cap_exceeded_error("gram words longer than 25 letters are not supported");
    GramMatrix g;
    g.words = words_of_weight(weight, B.ell(), word_cap);
    g.entries.assign(g.words.size(), std::vector<FieldElement>(g.words.size()));
    for (size_t i = 0; i < g.words.size(); ++i) {
        for (size_t j = 0; j < g.words.size(); ++j) {
            const unsigned full = g.words[j].empty() ? 0u : ((1u << g.words[j].size()) - 1u);
            std::map<unsigned, QPoly> memo;
            g.entries[i][j] = FieldElement(gram_rec(B, lam, g.words[i], g.words[j], full, memo));
        }
    }
    return g;
}

long irreducible_dim(const Bicharacter& B, const WeightCharacter& lam, const Weight& weight,
                     long word_cap) {
    if (lam.is_zero_map()) throw invalid_input_error("irreducible_dim: Lambda is the zero map");
    if (height(weight, B.ell()) > 25)
        throw cap_exceeded_error("gram words longer than 25 letters are not supported");
    const auto words = words_of_weight(weight, B.ell(), word_cap);
    std::vector<std::vector<QPoly>> m(words.size(), std::vector<QPoly>(words.size()));
    for (size_t i = 0; i < words.size(); ++i) {
        for (size_t j = 0; j < words.size(); ++j) {
            const unsigned full = words[j].empty() ? 0u : ((1u << words[j].size()) - 1u);
            std::map<unsigned, QPoly> memo;
            m[i][j] = gram_rec(B, lam, words[i], words[j], full, memo);
        }
    }
    return matrix_rank(m);
}

} // namespace gqchar
