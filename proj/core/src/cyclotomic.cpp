#include "gqchar/cyclotomic.hpp"

#include "gqchar/errors.hpp"

#include <array>
#include <sstream>

namespace gqchar {

namespace {

int g_order = 6;

int phi_of(int n) {
    switch (n) {
    case 1:
    case 2: return 1;
    case 3:
    case 4:
    case 6: return 2;
    case 12: return 4;
    default: throw invalid_input_error("unsupported cyclotomic order " + std::to_string(n));
    }
}

// Coefficients of z^phi in the power basis, i.e. x^phi mod Phi_N.
//   Phi_1 = x-1, Phi_2 = x+1, Phi_3 = x^2+x+1, Phi_4 = x^2+1,
//   Phi_6 = x^2-x+1, Phi_12 = x^4-x^2+1.
std::vector<long> reduction_row(int n) {
    switch (n) {
    case 1: return {1};
    case 2: return {-1};
    case 3: return {-1, -1};
    case 4: return {-1, 0};
    case 6: return {-1, 1};
    case 12: return {-1, 0, 1, 0};
    default: throw invalid_input_error("unsupported cyclotomic order " + std::to_string(n));
    }
}

// zeta_powers()[k] = coefficients of z^k, k in [0, N).
const std::vector<std::vector<mpq_class>>& zeta_powers() {
    static int cached_order = -1;
    static std::vector<std::vector<mpq_class>> table;
    if (cached_order != g_order) {
        const int n = g_order;
        const int phi = phi_of(n);
        const std::vector<long> red = reduction_row(n);
        table.assign(n, std::vector<mpq_class>(phi, 0));
        std::vector<mpq_class> cur(phi, 0);
        cur[0] = 1;
        for (int k = 0; k < n; ++k) {
            table[k] = cur;
            // multiply by z: shift up, fold the overflow through x^phi mod Phi
            std::vector<mpq_class> next(phi, 0);
            for (int j = 0; j + 1 < phi; ++j) next[j + 1] = cur[j];
            const mpq_class& top = cur[phi - 1];
            if (top != 0)
                for (int j = 0; j < phi; ++j) next[j] += top * red[j];
            cur = std::move(next);
        }
        cached_order = n;
    }
    return table;
}

} // namespace

int cyclotomic_order() { return g_order; }
int cyclotomic_degree() { return phi_of(g_order); }

void set_cyclotomic_order(int n) {
    phi_of(n); // validates
    g_order = n;
    zeta_powers();
}

CycloRational::CycloRational() : c_(phi_of(g_order), 0) {}

CycloRational::CycloRational(long value) : c_(phi_of(g_order), 0) { c_[0] = value; }

CycloRational::CycloRational(const mpq_class& value) : c_(phi_of(g_order), 0) { c_[0] = value; }

CycloRational CycloRational::zeta_power(long k) {
    const int n = g_order;
    long r = k % n;
    if (r < 0) r += n;
    CycloRational out;
    out.c_ = zeta_powers()[static_cast<size_t>(r)];
    return out;
}

bool CycloRational::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

CycloRational CycloRational::operator-() const {
    CycloRational out(*this);
    for (auto& x : out.c_) x = -x;
    return out;
}

CycloRational& CycloRational::operator+=(const CycloRational& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycloRational& CycloRational::operator-=(const CycloRational& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycloRational CycloRational::operator+(const CycloRational& o) const {
    CycloRational out(*this);
    out += o;
    return out;
}

CycloRational CycloRational::operator-(const CycloRational& o) const {
    CycloRational out(*this);
    out -= o;
    return out;
}

CycloRational CycloRational::operator*(const CycloRational& o) const {
    const int phi = static_cast<int>(c_.size());
    const std::vector<long> red = reduction_row(g_order);
    // raw convolution up to degree 2 phi - 2
    std::vector<mpq_class> raw(2 * phi - 1, 0);
    for (int i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (o.c_[j] == 0) continue;
            raw[i + j] += c_[i] * o.c_[j];
        }
    }
    // fold degrees >= phi down, highest first
    for (int d = 2 * phi - 2; d >= phi; --d) {
        const mpq_class top = raw[d];
        if (top == 0) continue;
        raw[d] = 0;
        for (int j = 0; j < phi; ++j) raw[d - phi + j] += top * red[j];
    }
    CycloRational out;
    for (int i = 0; i < phi; ++i) out.c_[i] = raw[i];
    return out;
}

CycloRational CycloRational::inverse() const {
    if (is_zero()) throw invalid_input_error("inverse of zero cyclotomic number");
    const int phi = static_cast<int>(c_.size());
    // Solve (this * y) = 1 on the power basis: columns are this * z^j.
    std::vector<std::vector<mpq_class>> m(phi, std::vector<mpq_class>(phi + 1, 0));
    for (int j = 0; j < phi; ++j) {
        CycloRational col = (*this) * zeta_power(j);
        for (int i = 0; i < phi; ++i) m[i][j] = col.c_[i];
    }
    m[0][phi] = 1;
    // little Gaussian elimination over Q
    for (int col = 0, row = 0; col < phi && row < phi; ++col) {
        int piv = -1;
        for (int i = row; i < phi; ++i)
            if (m[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[row]);
        const mpq_class p = m[row][col];
        for (int j = col; j <= phi; ++j) m[row][j] /= p;
        for (int i = 0; i < phi; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const mpq_class f = m[i][col];
            for (int j = col; j <= phi; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
    }
    CycloRational out;
    for (int i = 0; i < phi; ++i) out.c_[i] = m[i][phi];
    if (((*this) * out) != CycloRational(1))
        throw internal_error("cyclotomic inverse failed"); // Phi_N irreducible, cannot happen
    return out;
}

std::string CycloRational::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        mpq_class a = c_[i];
        if (!first && a < 0) a = -a;
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1 && a != -1) os << a.get_str() << " ";
            else if (first && a == -1) os << "-";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace gqchar
