#include "gqchar/bicharacter.hpp"

#include "gqchar/cyclotomic.hpp"
#include "gqchar/errors.hpp"

#include <sstream>

namespace gqchar {

std::string weight_str(const Weight& w) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << ")";
    return os.str();
}

Bicharacter::Bicharacter(int ell, int ext_rank, std::vector<std::vector<Monomial>> matrix)
    : ell_(ell), ext_(ext_rank), m_(std::move(matrix)) {
    if (ell_ < 1 || ext_ < 0) throw invalid_input_error("bicharacter needs ell >= 1, ext_rank >= 0");
    const size_t n = static_cast<size_t>(ellp());
    if (m_.size() != n) throw invalid_input_error("bicharacter matrix has wrong row count");
    for (const auto& row : m_)
        if (row.size() != n) throw invalid_input_error("bicharacter matrix is not square");
}

const Monomial& Bicharacter::entry(int i, int j) const {
    return m_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

Monomial Bicharacter::chi(const Weight& lam, const Weight& mu) const {
    const size_t n = static_cast<size_t>(ellp());
    if (lam.size() != n || mu.size() != n)
        throw invalid_input_error("chi: weight length != ell' = " + std::to_string(n));
    const long long ord = cyclotomic_order();
    long long r = 0, e = 0;
    for (size_t i = 0; i < n; ++i) {
        if (lam[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (mu[j] == 0) continue;
            const long long c = static_cast<long long>(lam[i]) * mu[j];
            r = (r + c % ord * m_[i][j].root_exp()) % ord;
            e += c * m_[i][j].q_exp();
        }
    }
    return Monomial(static_cast<long>(r), e);
}

int Bicharacter::c_of(const Weight& lam) const { return qchar_of(q_of(lam)); }

Monomial Bicharacter::hrho(const Weight& lam) const {
    Monomial out = Monomial::one();
    for (int j = 0; j < ell_; ++j) {
        const int c = lam[static_cast<size_t>(j)];
        if (c != 0) out = out * entry(j, j).pow(c);
    }
    return out;
}

bool Bicharacter::irreducible() const {
    std::vector<int> comp(static_cast<size_t>(ell_), -1);
    std::vector<int> stack = {0};
    comp[0] = 0;
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < ell_; ++j) {
            if (j == i || comp[static_cast<size_t>(j)] == 0) continue;
            if (!(entry(i, j) * entry(j, i)).is_one()) {
                comp[static_cast<size_t>(j)] = 0;
                stack.push_back(j);
            }
        }
    }
    for (int j = 0; j < ell_; ++j)
        if (comp[static_cast<size_t>(j)] != 0) return false;
    return true;
}

} // namespace gqchar
