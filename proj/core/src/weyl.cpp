#include "gqchar/weyl.hpp"

#include "gqchar/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace gqchar {

Weight WeylElement::apply(const Weight& w) const {
    const size_t n = matrix.size();
    Weight out = zero_weight(static_cast<int>(n));
    for (size_t j = 0; j < n; ++j) {
        if (w[j] == 0) continue;
        for (size_t i = 0; i < n; ++i) out[i] += matrix[i][j] * w[j];
    }
    return out;
}

bool WeylElement::is_identity() const {
    for (size_t i = 0; i < matrix.size(); ++i)
        for (size_t j = 0; j < matrix.size(); ++j)
            if (matrix[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

namespace {

std::vector<std::vector<int>> identity_matrix(int n) {
    std::vector<std::vector<int>> m(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return m;
}

std::vector<std::vector<int>> compose(const std::vector<std::vector<int>>& a,
                                      const std::vector<std::vector<int>>& b) {
    const size_t n = a.size();
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

// determinant of the pi-block restriction, exact over long long
long long pi_block_det(const std::vector<std::vector<int>>& m, int ell) {
    std::vector<std::vector<long long>> a(static_cast<size_t>(ell),
                                          std::vector<long long>(static_cast<size_t>(ell)));
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
    long long det = 1, prev = 1;
    for (int k = 0; k < ell; ++k) {
        int piv = -1;
        for (int i = k; i < ell; ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(k)]);
            det = -det;
        }
        for (int i = k + 1; i < ell; ++i)
            for (int j = k + 1; j < ell; ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    (a[static_cast<size_t>(k)][static_cast<size_t>(k)] * a[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                     a[static_cast<size_t>(i)][static_cast<size_t>(k)] * a[static_cast<size_t>(k)][static_cast<size_t>(j)]) /
                    prev;
        prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    return det * a[static_cast<size_t>(ell - 1)][static_cast<size_t>(ell - 1)];
}

} // namespace

WeylElement reflection(const Bicharacter& B, const RootSystemData& rs, const Weight& beta) {
    const RootRecord& rec = rs.record(beta);
    if (!rec.is_real) throw invalid_input_error("reflection needs a real root: " + weight_str(beta));
    const int n = B.ellp();
    WeylElement w;
    w.matrix = identity_matrix(n);
    for (int v = 0; v < n; ++v) {
        const Weight ev = unit_weight(n, v);
        const auto k = discrete_log(rec.q_beta, B.chi(beta, ev) * B.chi(ev, beta));
        if (!k)
            throw no_discrete_log_error("chi(beta,.)chi(.,beta) is not a power of q_beta at basis " +
                                        std::to_string(v) + ", beta = " + weight_str(beta));
        for (int i = 0; i < n; ++i)
            w.matrix[static_cast<size_t>(i)][static_cast<size_t>(v)] -=
                static_cast<int>(*k) * beta[static_cast<size_t>(i)];
    }
    w.sign = -1;
    return w;
}

std::vector<WeylElement> generate_weyl_group(const Bicharacter& B, const RootSystemData& rs,
                                             long size_cap) {
    std::vector<WeylElement> gens;
    std::vector<int> gen_root_index;
    for (size_t i = 0; i < rs.positive.size(); ++i)
        if (rs.positive[i].is_real) {
            gens.push_back(reflection(B, rs, rs.positive[i].beta));
            gen_root_index.push_back(static_cast<int>(i));
        }
    if (gens.empty())
        throw invalid_input_error("no real positive roots: the Weyl group is not defined here");

    std::vector<WeylElement> group;
    std::map<std::vector<std::vector<int>>, int> seen;
    WeylElement e;
    e.matrix = identity_matrix(B.ellp());
    e.sign = 1;
    group.push_back(e);
    seen[e.matrix] = 0;
    for (size_t head = 0; head < group.size(); ++head) {
        const WeylElement cur = group[head]; // copy: group may reallocate
        for (size_t g = 0; g < gens.size(); ++g) {
            WeylElement next;
            next.matrix = compose(gens[g].matrix, cur.matrix);
            if (seen.count(next.matrix)) continue;
            next.sign = -cur.sign;
            next.word.reserve(cur.word.size() + 1);
            next.word.push_back(gen_root_index[g]); // s_beta * cur, word left-extended
            next.word.insert(next.word.end(), cur.word.begin(), cur.word.end());
            const long long det = pi_block_det(next.matrix, B.ell());
            if (det != next.sign)
                throw internal_error("sgn mismatch: det != word parity");
            seen[next.matrix] = static_cast<int>(group.size());
            group.push_back(std::move(next));
            if (static_cast<long>(group.size()) > size_cap)
                throw cap_exceeded_error("Weyl group cap exceeded: " + std::to_string(size_cap));
        }
    }
    return group;
}

long long r_beta(const Bicharacter& B, const RootSystemData& rs, const Weight& beta) {
    const RootRecord& rec = rs.record(beta);
    if (!rec.is_real) throw invalid_input_error("r_beta needs a real root");

    // route 1: m beta = sum_{a in R(beta)} (1 - c_a) a
    const int n = B.ellp();
    Weight sum = zero_weight(n);
    for (const auto& alpha : rs.positive) {
        const auto k = discrete_log(rec.q_beta, B.chi(beta, alpha.beta) * B.chi(alpha.beta, beta));
        if (!k)
            throw no_discrete_log_error("no discrete log for s_beta on root " + weight_str(alpha.beta));
        const Weight img = alpha.beta - static_cast<int>(*k) * beta;
        if (!is_nonnegative(-img)) continue; // s_beta(alpha) not in -R+
        if (!rs.find(-img)) continue;
        sum = sum + (1 - alpha.c_beta) * alpha.beta;
    }
    long long m = 0;
    bool m_set = false;
    for (int i = 0; i < n; ++i) {
        if (beta[static_cast<size_t>(i)] == 0) {
            if (sum[static_cast<size_t>(i)] != 0)
                throw internal_error("mqbeta sum is not a multiple of beta");
            continue;
        }
        if (sum[static_cast<size_t>(i)] % beta[static_cast<size_t>(i)] != 0)
            throw internal_error("mqbeta sum is not a multiple of beta");
        const long long mi = sum[static_cast<size_t>(i)] / beta[static_cast<size_t>(i)];
        if (m_set && mi != m) throw internal_error("mqbeta sum is not a multiple of beta");
        m = mi;
        m_set = true;
    }

    // route 2: discrete log of hrho(beta) in base q_beta
    const auto k = discrete_log(rec.q_beta, B.hrho(beta));
    if (!k || *k != m)
        throw internal_error("r_beta: partition-sum route and discrete-log route disagree at " +
                             weight_str(beta));
    return m;
}

long long n_beta([[maybe_unused]] const Bicharacter& B, const RootSystemData& rs,
                 const WeightCharacter& lam, const Weight& beta) {
    const RootRecord& rec = rs.record(beta);
    if (!rec.is_real) throw invalid_input_error("n_beta needs a real root");
    const auto k = discrete_log(rec.q_beta, lam.lambda(beta));
    if (!k)
        throw no_integer_exponent_error("Lambda(K_beta L_{-beta}) is not a power of q_beta at " +
                                        weight_str(beta) + " (Lambda outside the finite regime)");
    return *k;
}

Weight dot_apply(const Bicharacter& B, const RootSystemData& rs, const WeightCharacter& lam,
                 const Weight& beta, const Weight& v) {
    const RootRecord& rec = rs.record(beta);
    const auto k = discrete_log(rec.q_beta, B.chi(beta, v) * B.chi(v, beta));
    if (!k) throw no_discrete_log_error("dot action: no discrete log at " + weight_str(v));
    const long long shift = *k + r_beta(B, rs, beta) + n_beta(B, rs, lam, beta);
    return v - static_cast<int>(shift) * beta;
}

Weight dot_zero(const Bicharacter& B, const RootSystemData& rs, const WeightCharacter& lam,
                const WeylElement& w) {
    Weight v = zero_weight(B.ellp());
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
        v = dot_apply(B, rs, lam, rs.positive[static_cast<size_t>(*it)].beta, v);
    return v;
}

std::vector<OrbitPoint> dot_zero_orbit(const Bicharacter& B, const RootSystemData& rs,
                                       const WeightCharacter& lam,
                                       const std::vector<WeylElement>& group) {
    std::vector<OrbitPoint> out;
    std::map<Weight, int> seen;
    for (const auto& w : group) {
        OrbitPoint p;
        p.element = w;
        p.sign = w.sign;
        p.dot0 = dot_zero(B, rs, lam, w);
        if (!seen.emplace(p.dot0, 1).second)
            throw internal_error("duplicate orbit point " + weight_str(p.dot0) +
                                 ": atypical/edge input or a bug");
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Weight> simple_real_system(const RootSystemData& rs, const std::vector<long>* f) {
    std::vector<const RootRecord*> real = rs.real_positive();
    auto fval = [&](const Weight& w) {
        long v = 0;
        for (size_t i = 0; i < w.size(); ++i) v += (f ? (*f)[i] : 1) * w[i];
        return v;
    };
    std::vector<Weight> pos;
    for (const auto* r : real) {
        const long v = fval(r->beta);
        if (v == 0)
            throw invalid_input_error("functional vanishes on real root " + weight_str(r->beta));
        if (v > 0) pos.push_back(r->beta);
    }
    // X_f = positive elements not expressible as sums of >= 2 positive ones.
    // Heights are bounded, so test sums of two or more by DP over the set.
    std::vector<Weight> out;
    for (const auto& b : pos) {
        // b decomposable iff it is a sum of >= 2 elements of pos (repetition
        // allowed); heights are bounded, so backtracking is enough
        std::function<bool(const Weight&, size_t, int)> reachable =
            [&](const Weight& target, size_t from, int used) -> bool {
            if (is_zero(target)) return used >= 2;
            if (!is_nonnegative(target)) return false;
            for (size_t i = from; i < pos.size(); ++i)
                if (reachable(target - pos[i], i, used + 1)) return true;
            return false;
        };
        if (!reachable(b, 0, 0)) out.push_back(b);
    }
    return out;
}

Weight hatdelta(const RootSystemData& rs) {
    Weight out = zero_weight(rs.bichar.ellp());
    for (const auto* r : rs.real_positive()) out = out + r->beta;
    return out;
}

} // namespace gqchar
