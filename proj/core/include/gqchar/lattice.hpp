#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gqchar {

// A lattice point of A = A_pi (+) A_EX in the fixed Z-basis
// alpha_1..alpha_ell, eps_1..eps_{ell'-ell}.
using Weight = std::vector<int>;

inline Weight zero_weight(int len) { return Weight(static_cast<size_t>(len), 0); }

inline Weight unit_weight(int len, int i) {
    Weight w = zero_weight(len);
    w[static_cast<size_t>(i)] = 1;
    return w;
}

inline Weight operator+(const Weight& a, const Weight& b) {
    Weight out(a);
    for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

inline Weight operator-(const Weight& a, const Weight& b) {
    Weight out(a);
    for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

inline Weight operator-(const Weight& a) {
    Weight out(a);
    for (auto& x : out) x = -x;
    return out;
}

inline Weight operator*(int k, const Weight& a) {
    Weight out(a);
    for (auto& x : out) x *= k;
    return out;
}

inline bool is_zero(const Weight& a) {
    for (int x : a)
        if (x != 0) return false;
    return true;
}

inline bool is_nonnegative(const Weight& a) {
    for (int x : a)
        if (x < 0) return false;
    return true;
}

// sum of pi-block coordinates; roots and module weights live there
inline long height(const Weight& a, int ell) {
    long h = 0;
    for (int i = 0; i < ell && i < static_cast<int>(a.size()); ++i) h += a[static_cast<size_t>(i)];
    return h;
}

inline long height(const Weight& a) { return height(a, static_cast<int>(a.size())); }

// height-then-lex; used for every sorted table the tools emit
inline bool weight_table_less(const Weight& a, const Weight& b) {
    const long ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
}

std::string weight_str(const Weight& w);

} // namespace gqchar
