#include "gqchar/field_element.hpp"

#include "gqchar/errors.hpp"

#include <optional>
#include <sstream>

namespace gqchar {

FieldElement::FieldElement(const QPoly& numerator, const QPoly& denominator)
    : num_(numerator), den_(denominator) {
    if (den_.is_zero()) throw invalid_input_error("zero denominator");
}

FieldElement FieldElement::operator-() const { return FieldElement(-num_, den_); }

FieldElement FieldElement::operator+(const FieldElement& o) const {
    return FieldElement(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    return FieldElement(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    return FieldElement(num_ * o.num_, den_ * o.den_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    if (o.is_zero()) throw invalid_input_error("division by zero field element");
    return FieldElement(num_ * o.den_, den_ * o.num_);
}

bool FieldElement::operator==(const FieldElement& o) const {
    return (num_ * o.den_) == (o.num_ * den_);
}

std::string FieldElement::str() const {
    std::ostringstream os;
    os << "[" << num_.str() << "] / [" << den_.str() << "]";
    return os.str();
}

namespace {

// Scale a whole row by a unit: q^{-min exponent} times the reciprocal of the
// common rational content.  Row scaling by nonzero values preserves rank.
void strip_row(std::vector<QPoly>& row) {
    bool any = false;
    long long low = 0;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& x : row) {
        if (x.is_zero()) continue;
        low = any ? std::min(low, x.min_exp()) : x.min_exp();
        any = true;
        for (const auto& [e, c] : x.terms())
            for (const auto& coord : c.coeffs()) {
                if (coord == 0) continue;
                mpz_class nn = abs(coord.get_num());
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), nn.get_mpz_t());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), coord.get_den().get_mpz_t());
            }
    }
    if (!any) return;
    if (num_gcd == 0) num_gcd = 1;
    QPoly unit;
    unit.set_term(-low, CycloRational(mpq_class(den_lcm, num_gcd)));
    for (auto& x : row) x = x * unit;
}

std::optional<long> rank_bareiss(std::vector<std::vector<QPoly>> m, PivotOrder order) {
    const long rows = static_cast<long>(m.size());
    const long cols = rows ? static_cast<long>(m[0].size()) : 0;

    for (auto& row : m) strip_row(row);

    long rank = 0;
    QPoly prev = QPoly::one();
    for (long c = 0; c < cols && rank < rows; ++c) {
        long piv = -1;
        if (order == PivotOrder::FirstNonzero) {
            for (long i = rank; i < rows; ++i)
                if (!m[i][c].is_zero()) { piv = i; break; }
        } else {
            for (long i = rows - 1; i >= rank; --i)
                if (!m[i][c].is_zero()) { piv = i; break; }
        }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (long i = rank + 1; i < rows; ++i) {
            for (long j = c + 1; j < cols; ++j) {
                QPoly t = m[rank][c] * m[i][j] - m[i][c] * m[rank][j];
                auto d = t.divide_exact(prev);
                if (!d) return std::nullopt;
                m[i][j] = std::move(*d);
            }
            m[i][c] = QPoly();
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

// exact but fraction-carrying elimination; only reached if Bareiss ever
// meets a non-exact division (not expected for consistent pivot sequences)
long rank_fraction_gauss(const std::vector<std::vector<QPoly>>& matrix) {
    std::vector<std::vector<FieldElement>> m;
    m.reserve(matrix.size());
    for (const auto& row : matrix) {
        std::vector<FieldElement> r;
        r.reserve(row.size());
        for (const auto& x : row) r.emplace_back(x);
        m.push_back(std::move(r));
    }
    const long rows = static_cast<long>(m.size());
    const long cols = rows ? static_cast<long>(m[0].size()) : 0;
    long rank = 0;
    for (long c = 0; c < cols && rank < rows; ++c) {
        long piv = -1;
        for (long i = rank; i < rows; ++i)
            if (!m[i][c].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (long i = rank + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            const FieldElement f = m[i][c] / m[rank][c];
            for (long j = c + 1; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
            m[i][c] = FieldElement();
        }
        ++rank;
    }
    return rank;
}

} // namespace

long matrix_rank(const std::vector<std::vector<QPoly>>& matrix, PivotOrder order) {
    if (auto r = rank_bareiss(matrix, order)) return *r;
    return rank_fraction_gauss(matrix);
}

long matrix_rank(const std::vector<std::vector<FieldElement>>& matrix, PivotOrder order) {
    // clear denominators row by row; row scaling by nonzero values keeps rank
    std::vector<std::vector<QPoly>> m;
    m.reserve(matrix.size());
    for (const auto& row : matrix) {
        QPoly common = QPoly::one();
        for (const auto& x : row) common = common * x.den();
        std::vector<QPoly> cleared;
        cleared.reserve(row.size());
        for (size_t j = 0; j < row.size(); ++j) {
            QPoly rest = QPoly::one();
            for (size_t k = 0; k < row.size(); ++k)
                if (k != j) rest = rest * row[k].den();
            cleared.push_back(row[j].num() * rest);
        }
        m.push_back(std::move(cleared));
    }
    return matrix_rank(m, order);
}

} // namespace gqchar
