#include "gqchar/qpoly.hpp"

#include "gqchar/errors.hpp"

#include <sstream>

namespace gqchar {

QPoly::QPoly(long constant) {
    if (constant != 0) terms_[0] = CycloRational(constant);
}

QPoly::QPoly(const CycloRational& constant) {
    if (!constant.is_zero()) terms_[0] = constant;
}

QPoly::QPoly(const Monomial& m) { terms_[m.q_exp()] = CycloRational::zeta_power(m.root_exp()); }

void QPoly::trim(long long key) {
    auto it = terms_.find(key);
    if (it != terms_.end() && it->second.is_zero()) terms_.erase(it);
}

void QPoly::set_term(long long q_exp, const CycloRational& coeff) {
    if (coeff.is_zero())
        terms_.erase(q_exp);
    else
        terms_[q_exp] = coeff;
}

QPoly QPoly::operator-() const {
    QPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        terms_[e] += c;
        trim(e);
    }
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        terms_[e] -= c;
        trim(e);
    }
    return *this;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly out(*this);
    out += o;
    return out;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly out(*this);
    out -= o;
    return out;
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            const long long e = e1 + e2;
            out.terms_[e] += c1 * c2;
        }
    for (auto it = out.terms_.begin(); it != out.terms_.end();)
        it = it->second.is_zero() ? out.terms_.erase(it) : std::next(it);
    return out;
}

std::optional<QPoly> QPoly::divide_exact(const QPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return QPoly();
    // the exact quotient, if any, has exponents >= low(this) - low(divisor)
    const long long low_bound = terms_.begin()->first - divisor.terms_.begin()->first;
    QPoly rem(*this);
    QPoly quot;
    const auto lead = std::prev(divisor.terms_.end());
    const CycloRational lead_inv = lead->second.inverse();
    while (!rem.is_zero()) {
        const auto top = std::prev(rem.terms_.end());
        const long long e = top->first - lead->first;
        if (e < low_bound) return std::nullopt;
        QPoly t;
        t.terms_[e] = top->second * lead_inv;
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

long long QPoly::min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }

std::string QPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        if (e != 0) os << "*q^" << e;
        first = false;
    }
    return os.str();
}

} // namespace gqchar
