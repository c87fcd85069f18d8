#include "gqchar/characters.hpp"

#include "gqchar/errors.hpp"
#include "gqchar/highestweight.hpp"

#include <algorithm>
#include <functional>

namespace gqchar {

bool Region::contains(const Weight& nu, int ell) const {
    if (!is_nonnegative(nu)) return false;
    if (height(nu, ell) > height_bound) return false;
    if (!coord_bounds.empty())
        for (size_t i = 0; i < coord_bounds.size() && i < nu.size(); ++i)
            if (nu[i] > coord_bounds[i]) return false;
    return true;
}

std::vector<Weight> Region::points(int ell, int ellp) const {
    std::vector<Weight> out;
    Weight cur = zero_weight(ellp);
    // enumerate nonnegative pi-block points of height <= bound
    std::function<void(int, long)> rec = [&](int idx, long remaining) {
        if (idx == ell) {
            if (contains(cur, ell)) out.push_back(cur);
            return;
        }
        for (long v = 0; v <= remaining; ++v) {
            cur[static_cast<size_t>(idx)] = static_cast<int>(v);
            rec(idx + 1, remaining - v);
        }
        cur[static_cast<size_t>(idx)] = 0;
    };
    rec(0, height_bound);
    std::sort(out.begin(), out.end(), weight_table_less);
    return out;
}

long long DimTable::at(const Weight& nu) const {
    auto it = d_.find(nu);
    return it == d_.end() ? 0 : it->second;
}

void DimTable::set(const Weight& nu, long long v) {
    if (v == 0)
        d_.erase(nu);
    else
        d_[nu] = v;
}

DimTable verma_dims(const RootSystemData& rs, const Region& region) {
    const int ell = rs.bichar.ell();
    const int ellp = rs.bichar.ellp();
    const std::vector<Weight> pts = region.points(ell, ellp); // ascending height

    DimTable table;
    table.set(zero_weight(ellp), 1);
    for (const auto& rec : rs.positive) {
        if (rec.c_beta >= 2) {
            DimTable next;
            for (const auto& nu : pts) {
                long long s = 0;
                for (int j = 0; j < rec.c_beta; ++j) {
                    const Weight prev = nu - j * rec.beta;
                    if (!is_nonnegative(prev)) break;
                    s += table.at(prev);
                }
                next.set(nu, s);
            }
            table = std::move(next);
        } else {
            // unbounded exponents (c_beta = 0): in-place ascending recurrence
            for (const auto& nu : pts) {
                const Weight prev = nu - rec.beta;
                if (is_nonnegative(prev)) table.set(nu, table.at(nu) + table.at(prev));
            }
        }
    }
    DimTable out;
    for (const auto& nu : pts) out.set(nu, table.at(nu));
    return out;
}

std::vector<std::vector<int>> connected_components(const Bicharacter& B) {
    const int ell = B.ell();
    std::vector<int> comp(static_cast<size_t>(ell), -1);
    int ncomp = 0;
    for (int s = 0; s < ell; ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        std::vector<int> stack = {s};
        comp[static_cast<size_t>(s)] = ncomp;
        while (!stack.empty()) {
            const int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < ell; ++j) {
                if (comp[static_cast<size_t>(j)] >= 0) continue;
                if (!(B.entry(i, j) * B.entry(j, i)).is_one()) {
                    comp[static_cast<size_t>(j)] = ncomp;
                    stack.push_back(j);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> out(static_cast<size_t>(ncomp));
    for (int i = 0; i < ell; ++i) out[static_cast<size_t>(comp[static_cast<size_t>(i)])].push_back(i);
    return out;
}

namespace {

// orbit for one irreducible block; W is trivial when there are no real roots
std::vector<std::pair<int, Weight>> signed_dot_orbit(const Bicharacter& B,
                                                     const RootSystemData& rs,
                                                     const WeightCharacter& lam) {
    if (rs.real_positive().empty()) return {{1, zero_weight(B.ellp())}};
    const auto group = generate_weyl_group(B, rs);
    std::vector<std::pair<int, Weight>> out;
    for (const auto& p : dot_zero_orbit(B, rs, lam, group)) out.emplace_back(p.sign, p.dot0);
    return out;
}

DimTable alternating_sum(const Bicharacter& B, const RootSystemData& rs,
                         const WeightCharacter& lam, const Region& region) {
    const DimTable verma = verma_dims(rs, region);
    const auto orbit = signed_dot_orbit(B, rs, lam);
    const auto pts = region.points(B.ell(), B.ellp());
    DimTable out;
    for (const auto& nu : pts) {
        long long s = 0;
        for (const auto& [sign, dot0] : orbit) {
            const Weight mu = nu + dot0; // dim U^-_{-nu - w.0} = verma(nu + w.0)
            if (is_nonnegative(mu)) s += sign * verma.at(mu);
        }
        if (s < 0) throw internal_error("negative character entry at " + weight_str(nu));
        out.set(nu, s);
    }
    if (out.at(zero_weight(B.ellp())) != 1)
        throw internal_error("character does not start at 1");
    return out;
}

// restriction of a bicharacter to a subset of pi-block indices (eps dropped,
// dims are independent of the eps block)
Bicharacter restrict_bichar(const Bicharacter& B, const std::vector<int>& idx) {
    std::vector<std::vector<Monomial>> m(idx.size(), std::vector<Monomial>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j) m[i][j] = B.entry(idx[i], idx[j]);
    return Bicharacter(static_cast<int>(idx.size()), 0, std::move(m));
}

WeightCharacter restrict_character(const WeightCharacter& lam, const std::vector<int>& idx) {
    std::vector<Monomial> k, l;
    for (int i : idx) {
        k.push_back(lam.k_values()[static_cast<size_t>(i)]);
        l.push_back(lam.l_values()[static_cast<size_t>(i)]);
    }
    return WeightCharacter(std::move(k), std::move(l));
}

} // namespace

DimTable typical_character(const Bicharacter& B, const RootSystemData& rs,
                           const WeightCharacter& lam, const Region& region) {
    if (!is_typical(B, rs, lam)) throw not_typical_error("Lambda(P-hat) = 0: not typical");
    if (!is_finite_dim(B, lam)) throw not_finite_dim_error("dim L(Lambda) is infinite");

    const auto comps = connected_components(B);
    if (comps.size() == 1 && B.ext_rank() == 0)
        return alternating_sum(B, rs, lam, region);

    // component factorization; the eps block never changes the dimensions
    struct Block {
        std::vector<int> idx;
        DimTable table;
    };
    std::vector<Block> blocks;
    for (const auto& idx : comps) {
        Block blk;
        blk.idx = idx;
        const Bicharacter sub = restrict_bichar(B, idx);
        const RootSystemData sub_rs = compute_roots(sub);
        blk.table = alternating_sum(sub, sub_rs, restrict_character(lam, idx), region);
        blocks.push_back(std::move(blk));
    }
    DimTable out;
    for (const auto& nu : region.points(B.ell(), B.ellp())) {
        long long prod = 1;
        for (const auto& blk : blocks) {
            Weight proj = zero_weight(static_cast<int>(blk.idx.size()));
            for (size_t t = 0; t < blk.idx.size(); ++t)
                proj[t] = nu[static_cast<size_t>(blk.idx[t])];
            prod *= blk.table.at(proj);
            if (prod == 0) break;
        }
        out.set(nu, prod);
    }
    return out;
}

std::vector<OrbitPoint> weyl_orbit_report(const Bicharacter& B, const RootSystemData& rs,
                                          const WeightCharacter& lam) {
    return dot_zero_orbit(B, rs, lam, generate_weyl_group(B, rs));
}

bool check_key_identity(const Bicharacter& B, const RootSystemData& rs, const WeightCharacter& lam,
                        const Region& region) {
    using FormalSum = std::map<Weight, long long>;
    const int ell = B.ell();
    const int ellp = B.ellp();

    auto multiply = [](const FormalSum& a, const FormalSum& b) {
        FormalSum out;
        for (const auto& [wa, ca] : a)
            for (const auto& [wb, cb] : b) {
                const Weight w = wa + wb;
                out[w] += ca * cb;
                if (out[w] == 0) out.erase(w);
            }
        return out;
    };

    // left product: (e_0 - e_{-beta}) over real roots and over null roots
    // with q_beta = 1 (their Verma series is an unbounded geometric series)
    FormalSum left_product{{zero_weight(ellp), 1}};
    FormalSum right_product{{zero_weight(ellp), 1}};
    for (const auto& rec : rs.positive) {
        if (rec.is_real || rec.q_beta.is_one()) {
            FormalSum f{{zero_weight(ellp), 1}, {-rec.beta, -1}};
            left_product = multiply(left_product, f);
        } else {
            FormalSum f;
            for (int t = 0; t < rec.c_beta; ++t) f[-(t * rec.beta)] += 1;
            right_product = multiply(right_product, f);
        }
    }

    // The difference product only lowers the height of the Verma argument,
    // so every coefficient compared below is complete inside this table.
    Region wide = region;
    wide.coord_bounds.clear();
    const DimTable verma = verma_dims(rs, wide);

    // candidate nu values: 0 and, when the orbit exists, every w.0
    std::vector<Weight> nus = {zero_weight(ellp)};
    try {
        for (const auto& p : weyl_orbit_report(B, rs, lam))
            if (!is_zero(p.dot0)) nus.push_back(p.dot0);
    } catch (const std::exception&) {
        // no real roots or Lambda outside the integer-exponent regime
    }

    for (const auto& nu : nus) {
        // LHS(gamma) = sum_s left_product(s) * verma(nu - gamma + s)
        FormalSum rhs;
        for (const auto& [w, c] : right_product) rhs[w + nu] += c;
        for (const auto& gamma_nu : region.points(ell, ellp)) {
            const Weight gamma = nu - gamma_nu; // gamma = nu - (region point)
            long long lhs = 0;
            for (const auto& [s, c] : left_product) {
                const Weight arg = nu - gamma + s; // index into the Verma table
                if (is_nonnegative(arg)) lhs += c * verma.at(arg);
            }
            auto it = rhs.find(gamma);
            const long long r = it == rhs.end() ? 0 : it->second;
            if (lhs != r) return false;
        }
    }
    return true;
}

} // namespace gqchar
