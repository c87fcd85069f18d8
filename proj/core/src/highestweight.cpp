#include "gqchar/highestweight.hpp"

#include "gqchar/errors.hpp"

#include <deque>
#include <set>

namespace gqchar {

std::optional<long long> fimv_height(const Monomial& q_ii, const Monomial& lambda_i) {
    std::optional<long long> bound1;
    const int c = qchar_of(q_ii);
    if (c >= 2) bound1 = c - 1;

    // the (m; q_ii^{-1}, lambda)! factor first vanishes at m = t+1 where t is
    // the least t >= 0 with lambda = q_ii^t
    std::optional<long long> bound2;
    if (q_ii.is_one()) {
        if (lambda_i.is_one()) bound2 = 0;
    } else if (auto t = discrete_log(q_ii, lambda_i); t && *t >= 0) {
        bound2 = *t;
    }

    if (!bound1 && !bound2) return std::nullopt;
    if (!bound1) return bound2;
    if (!bound2) return bound1;
    return std::min(*bound1, *bound2);
}

WeightCharacter tau_shift(const Bicharacter& B, const GroupoidObject& obj,
                          const WeightCharacter& lam, int i) {
    if (lam.is_zero_map()) return lam;
    const Weight& ai = obj.simples[static_cast<size_t>(i)];
    const Monomial qii = B.chi(ai, ai);
    const auto h = fimv_height(qii, lam.lambda(ai));
    if (!h) return WeightCharacter::zero_map(B.ellp());

    std::vector<Monomial> k = lam.k_values();
    std::vector<Monomial> l = lam.l_values();
    for (int v = 0; v < B.ellp(); ++v) {
        const Weight ev = unit_weight(B.ellp(), v);
        k[static_cast<size_t>(v)] = k[static_cast<size_t>(v)] * B.chi(ev, ai).pow(-*h);
        l[static_cast<size_t>(v)] = l[static_cast<size_t>(v)] * B.chi(ai, ev).pow(*h);
    }
    return WeightCharacter(std::move(k), std::move(l));
}

bool is_finite_dim(const Bicharacter& B, const WeightCharacter& lam, long state_cap) {
    if (lam.is_zero_map()) throw invalid_input_error("is_finite_dim: Lambda is the zero map");
    const int n = B.ellp();

    // states are (object simples, K/L ratio vector); all observables of the
    // tau dynamics factor through the ratios
    auto ratios_of = [n](const WeightCharacter& w) {
        std::vector<Monomial> r(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
            r[static_cast<size_t>(v)] = w.k_values()[static_cast<size_t>(v)] /
                                        w.l_values()[static_cast<size_t>(v)];
        return r;
    };

    using State = std::pair<std::vector<Weight>, std::vector<Monomial>>;
    std::set<State> seen;
    std::deque<std::pair<GroupoidObject, std::vector<Monomial>>> queue;

    GroupoidObject start = initial_object(B);
    queue.emplace_back(start, ratios_of(lam));
    seen.emplace(start.simples, queue.back().second);

    while (!queue.empty()) {
        auto [obj, ratios] = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < B.ell(); ++i) {
            const Weight& ai = obj.simples[static_cast<size_t>(i)];
            Monomial lam_i = Monomial::one();
            for (int v = 0; v < n; ++v)
                if (ai[static_cast<size_t>(v)] != 0)
                    lam_i = lam_i * ratios[static_cast<size_t>(v)].pow(ai[static_cast<size_t>(v)]);
            const auto h = fimv_height(B.chi(ai, ai), lam_i);
            if (!h) return false;

            std::vector<Monomial> next(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) {
                const Weight ev = unit_weight(n, v);
                next[static_cast<size_t>(v)] =
                    ratios[static_cast<size_t>(v)] * (B.chi(ev, ai) * B.chi(ai, ev)).pow(-*h);
            }
            GroupoidObject refl = reflect_object(B, obj, i);
            State key(refl.simples, next);
            if (seen.insert(std::move(key)).second) {
                queue.emplace_back(std::move(refl), std::move(next));
                if (static_cast<long>(seen.size()) > state_cap)
                    throw cap_exceeded_error("is_finite_dim state cap exceeded: " +
                                             std::to_string(state_cap));
            }
        }
    }
    return true;
}

bool phat_nonzero(const Bicharacter& B, const RootSystemData& rs, const WeightCharacter& lam) {
    for (const auto* rec : rs.null_positive()) {
        if (rec->q_beta.is_one()) return false; // P_{±beta} = 0 since c_beta = 0
        const Monomial x = B.hrho(rec->beta) * lam.lambda(rec->beta);
        for (int t = 1; t <= rec->c_beta - 1; ++t) {
            const Monomial qt = rec->q_beta.pow(t);
            if (x == qt || x.inverse() == qt) return false;
        }
    }
    return true;
}

bool is_typical(const Bicharacter& B, const RootSystemData& rs, const WeightCharacter& lam) {
    return phat_nonzero(B, rs, lam);
}

bool shapo_generic(const Bicharacter& B, const RootSystemData& rs, const WeightCharacter& lam) {
    for (const auto& rec : rs.positive) {
        if (rec.q_beta.is_one()) return false;
        const Monomial x = B.hrho(rec.beta) * lam.lambda(rec.beta);
        if (x.is_one()) continue; // q_beta^t = x would force q_beta^t = 1
        if (auto t = discrete_log(rec.q_beta, x); t && *t >= 1) return false;
    }
    return true;
}

namespace {

// t with lambda_beta = q_beta^t, t >= 0; nullopt when the condition fails
std::optional<long long> integral_exponent(const Bicharacter& B, const WeightCharacter& lam,
                                           const Weight& beta) {
    if (is_zero(beta)) return 0;
    const Monomial q_beta = B.q_of(beta);
    const Monomial lb = lam.lambda(beta);
    if (q_beta.is_one()) return lb.is_one() ? std::optional<long long>(0) : std::nullopt;
    const auto t = discrete_log(q_beta, lb);
    if (!t || *t < 0) return std::nullopt;
    return t;
}

} // namespace

ClassifyVerdict classify_pibar(const CatalogConfig& cfg, const WeightCharacter& lam,
                               bool c10_include_fourth) {
    const Bicharacter& B = cfg.bichar;
    ClassifyVerdict v;

    if (cfg.family == "pibar0") {
        // Here P-hat = 0 and dim L < infinity iff Lambda(K_{a1} L_{-a1}) = 1
        v.passes_integrality = true;
        v.t_alpha0 = 0;
        v.finite = lam.lambda(unit_weight(B.ellp(), 0)).is_one();
        if (v.finite) v.matched_condition = "rank-one";
        return v;
    }

    v.passes_integrality = true;
    for (const auto& beta : cfg.pi0) {
        const auto t = integral_exponent(B, lam, beta);
        if (!t) {
            v.passes_integrality = false;
            break;
        }
        v.t_values[weight_str(beta)] = *t;
    }
    if (v.passes_integrality) {
        const auto t0 = integral_exponent(B, lam, cfg.alpha0);
        if (!t0)
            v.passes_integrality = false;
        else {
            v.t_alpha0 = *t0;
            v.t_values["alpha0"] = *t0;
        }
    }
    if (!v.passes_integrality) return v; // dim L = infinity by part (1)

    if (v.t_alpha0 >= cfg.c_pibar) {
        v.finite = true;
        v.matched_condition = "t0>=c";
        return v;
    }

    const long long t0 = v.t_alpha0;
    const Monomial q = Monomial::q(1);
    auto lam_i = [&](long i) { // 1-based simple index
        return lam.lambda(unit_weight(B.ellp(), static_cast<int>(i - 1)));
    };
    auto all_one_in = [&](long from, long to) {
        for (long i = from; i <= to; ++i)
            if (!lam_i(i).is_one()) return false;
        return true;
    };
    const long m = cfg.params.m, n = cfg.params.n;
    const long ell = B.ell();
    auto matched = [&](const char* name) {
        v.finite = true;
        v.matched_condition = name;
    };

    if (cfg.family == "pibar2.ii" && t0 % 2 == 0 && t0 <= 2 * m - 2 &&
        all_one_in(n + t0 / 2 + 1, ell)) {
        matched("C1");
    } else if (cfg.family == "pibar2.iv" && t0 <= m - 2) {
        Monomial prod = Monomial::one();
        for (long i = n; i <= n + t0; ++i) prod = prod * lam_i(i);
        if (prod == q.pow(-2 * t0) && all_one_in(n + t0 + 1, ell)) matched("C2");
    } else if (cfg.family == "pibar2.iv" && t0 == m - 1) {
        Monomial prod = Monomial::one();
        for (long i = n; i <= ell - 1; ++i) prod = prod * lam_i(i);
        if (prod == q.pow(-2 * (m - 1))) matched("C3");
    }
    if (!v.finite && t0 == 0 && all_one_in(1, ell)) matched("C4");
    if (!v.finite && cfg.family == "pibar2.v" && t0 == 2 && lam_i(2).is_one() &&
        lam_i(4).is_one() && lam_i(1) * lam_i(3) == q.pow(-6))
        matched("C5");
    if (!v.finite && cfg.family == "pibar2.v" && t0 == 3 &&
        lam_i(1) * lam_i(3) * lam_i(4).pow(2) == q.pow(-12) && lam_i(2) == q.pow(2) * lam_i(3))
        matched("C6");
    if (!v.finite && cfg.family == "pibar2.vi" && t0 == 4 && lam_i(2).is_one()) matched("C7");
    if (!v.finite && cfg.family == "pibar2.vii" && t0 == 1 &&
        (lam_i(2).is_one() || lam_i(1) * lam_i(2) == q.pow(2)))
        matched("C8");
    // C9's second clause, like C8's, is atypicality at the null root a1+a2:
    // hrho(a1+a2) lambda_{a1+a2} = -1, i.e. lambda_1 lambda_2 = x^{-1}.
    // Under t0 = 1 the other two null roots reduce to these same clauses.
    if (!v.finite && cfg.family == "pibar3.i" && t0 == 1 &&
        (lam_i(2).is_one() || lam_i(1) * lam_i(2) == cfg.x_param.inverse()))
        matched("C9");
    if (!v.finite && cfg.family == "pibar4" && t0 == 1 && lam_i(3).is_one() &&
        (!c10_include_fourth || lam_i(4).is_one()))
        matched("C10");
    if (!v.finite && cfg.family == "pibar4" && t0 == 2 &&
        (lam_i(3).is_one() || lam_i(1) * lam_i(3) * lam_i(4) == Monomial::one()))
        matched("C11");
    return v;
}

} // namespace gqchar
