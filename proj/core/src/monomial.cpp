#include "gqchar/monomial.hpp"

#include "gqchar/cyclotomic.hpp"
#include "gqchar/errors.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace gqchar {

Monomial::Monomial(long root_exp, long long q_exp) : q_exp_(q_exp) {
    const int n = cyclotomic_order();
    long r = root_exp % n;
    if (r < 0) r += n;
    root_exp_ = static_cast<int>(r);
}

Monomial Monomial::minus_one() {
    const int n = cyclotomic_order();
    if (n % 2 != 0)
        throw invalid_input_error("-1 is not in <zeta_N> for odd N = " + std::to_string(n));
    return Monomial(n / 2, 0);
}

Monomial Monomial::operator*(const Monomial& o) const {
    return Monomial(static_cast<long>(root_exp_) + o.root_exp_, q_exp_ + o.q_exp_);
}

Monomial Monomial::inverse() const { return Monomial(-static_cast<long>(root_exp_), -q_exp_); }

Monomial Monomial::pow(long long k) const {
    const int n = cyclotomic_order();
    const long long r = (static_cast<long long>(root_exp_) % n) * (k % n);
    return Monomial(static_cast<long>(r % n), q_exp_ * k);
}

bool Monomial::operator<(const Monomial& o) const {
    if (root_exp_ != o.root_exp_) return root_exp_ < o.root_exp_;
    return q_exp_ < o.q_exp_;
}

std::string Monomial::str() const {
    const int n = cyclotomic_order();
    int r = root_exp_;
    bool minus = false;
    if (n % 2 == 0 && r >= n / 2) {
        minus = true;
        r -= n / 2;
    }
    std::ostringstream os;
    if (minus) os << "-";
    bool have_factor = false;
    if (r > 0) {
        os << "z";
        if (r > 1) os << "^" << r;
        have_factor = true;
    }
    if (q_exp_ != 0) {
        if (have_factor) os << "*";
        os << "q";
        if (q_exp_ != 1) os << "^" << q_exp_;
        have_factor = true;
    }
    if (!have_factor) os << "1";
    return os.str();
}

namespace {

long long parse_int(const std::string& s, size_t& pos) {
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        neg = (s[pos] == '-');
        ++pos;
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        throw invalid_input_error("expected integer in monomial string");
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos] - '0');
        ++pos;
    }
    return neg ? -v : v;
}

} // namespace

Monomial Monomial::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw invalid_input_error("empty monomial string");

    size_t pos = 0;
    Monomial out = Monomial::one();
    if (s[pos] == '-') {
        out = out * Monomial::minus_one();
        ++pos;
    }
    if (pos >= s.size()) throw invalid_input_error("dangling '-' in monomial string");
    bool want_factor = true;
    while (pos < s.size()) {
        if (!want_factor) {
            if (s[pos] != '*')
                throw invalid_input_error("expected '*' in monomial string: " + text);
            ++pos;
            want_factor = true;
            continue;
        }
        char c = s[pos];
        if (c == '1') {
            ++pos;
        } else if (c == 'z' || c == 'q') {
            ++pos;
            long long e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = parse_int(s, pos);
            }
            out = out * (c == 'z' ? Monomial::zeta(1).pow(e) : Monomial::q(e));
        } else {
            throw invalid_input_error("bad character '" + std::string(1, c) +
                                      "' in monomial string: " + text);
        }
        want_factor = false;
    }
    if (want_factor) throw invalid_input_error("trailing '*' in monomial string: " + text);
    return out;
}

int qchar_of(const Monomial& x) {
    if (x.is_one()) return 0;
    if (x.q_exp() != 0) return 0; // (r)_x has distinct q-exponents, never zero
    const int n = cyclotomic_order();
    const int g = static_cast<int>(std::gcd(static_cast<long>(x.root_exp()), static_cast<long>(n)));
    return n / g; // multiplicative order of zeta^root_exp, >= 2 here
}

bool qfactorial_nonzero(const Monomial& x, long n) {
    const int c = qchar_of(x);
    return c == 0 || n < c;
}

std::optional<long long> discrete_log(const Monomial& base, const Monomial& value) {
    const int n = cyclotomic_order();
    if (base.is_one())
        throw invalid_input_error("discrete_log with base 1 is ambiguous");
    if (base.q_exp() != 0) {
        if (value.q_exp() % base.q_exp() != 0) return std::nullopt;
        const long long k = value.q_exp() / base.q_exp();
        long long r = (static_cast<long long>(base.root_exp()) * (k % n)) % n;
        if (r < 0) r += n;
        if (r != value.root_exp()) return std::nullopt;
        return k;
    }
    if (value.q_exp() != 0) return std::nullopt;
    for (long long k = 0; k < n; ++k)
        if ((static_cast<long long>(base.root_exp()) * k) % n == value.root_exp()) return k;
    return std::nullopt;
}

std::optional<long long> max_nonvanishing(const Monomial& x, const Monomial& y) {
    // (m)_x! bound
    const int c = qchar_of(x);
    std::optional<long long> bound1;
    if (c >= 2) bound1 = c - 1;
    // (m; x, y)! bound: least k >= 0 with x^k y = 1 caps m at k
    std::optional<long long> bound2;
    if (x.is_one()) {
        if (y.is_one()) bound2 = 0;
    } else {
        const auto k = discrete_log(x, y.inverse());
        if (k && *k >= 0) bound2 = *k;
    }
    if (!bound1 && !bound2) return std::nullopt;
    if (!bound1) return bound2;
    if (!bound2) return bound1;
    return std::min(*bound1, *bound2);
}

} // namespace gqchar
