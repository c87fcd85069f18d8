#include "gqchar/rootsystem.hpp"

#include "gqchar/errors.hpp"

#include <algorithm>
#include <gmpxx.h>
#include <map>

namespace gqchar {

namespace {

// coordinates of lam in the Z-basis given by the object's simples (pi-block)
std::vector<long> coords_in_basis(const std::vector<Weight>& simples, const Weight& lam) {
    const int ell = static_cast<int>(simples.size());
    std::vector<std::vector<mpq_class>> m(static_cast<size_t>(ell),
                                          std::vector<mpq_class>(static_cast<size_t>(ell) + 1, 0));
    for (int r = 0; r < ell; ++r) {
        for (int c = 0; c < ell; ++c) m[static_cast<size_t>(r)][static_cast<size_t>(c)] = simples[static_cast<size_t>(c)][static_cast<size_t>(r)];
        m[static_cast<size_t>(r)][static_cast<size_t>(ell)] = lam[static_cast<size_t>(r)];
    }
    for (int col = 0, row = 0; col < ell && row < ell; ++col) {
        int piv = -1;
        for (int i = row; i < ell; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(row)]);
        const mpq_class p = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (int j = col; j <= ell; ++j) m[static_cast<size_t>(row)][static_cast<size_t>(j)] /= p;
        for (int i = 0; i < ell; ++i) {
            if (i == row) continue;
            const mpq_class f = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j <= ell; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * m[static_cast<size_t>(row)][static_cast<size_t>(j)];
        }
        ++row;
    }
    std::vector<long> out(static_cast<size_t>(ell));
    for (int i = 0; i < ell; ++i) {
        const mpq_class& v = m[static_cast<size_t>(i)][static_cast<size_t>(ell)];
        if (v.get_den() != 1)
            throw internal_error("weight not in the simple-root lattice of the object");
        out[static_cast<size_t>(i)] = v.get_num().get_si();
    }
    return out;
}

} // namespace

GroupoidObject initial_object(const Bicharacter& B) {
    GroupoidObject obj;
    for (int i = 0; i < B.ell(); ++i) obj.simples.push_back(unit_weight(B.ellp(), i));
    return obj;
}

std::optional<long long> cartan_n(const Bicharacter& B, const GroupoidObject& obj, int i, int j) {
    const Weight& ai = obj.simples[static_cast<size_t>(i)];
    const Weight& aj = obj.simples[static_cast<size_t>(j)];
    const Monomial qii = B.chi(ai, ai);
    const Monomial prod = B.chi(ai, aj) * B.chi(aj, ai);
    return max_nonvanishing(qii, prod);
}

GroupoidObject reflect_object(const Bicharacter& B, const GroupoidObject& obj, int i) {
    const int ell = B.ell();
    GroupoidObject out;
    out.simples.resize(static_cast<size_t>(ell));
    for (int j = 0; j < ell; ++j) {
        if (j == i) {
            out.simples[static_cast<size_t>(j)] = -obj.simples[static_cast<size_t>(i)];
            continue;
        }
        const auto n = cartan_n(B, obj, i, j);
        if (!n)
            throw infinite_type_error("N_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                      " is infinite: the root system is infinite");
        out.simples[static_cast<size_t>(j)] =
            obj.simples[static_cast<size_t>(j)] + static_cast<int>(*n) * obj.simples[static_cast<size_t>(i)];
    }
    return out;
}

RootSystemData compute_roots(const Bicharacter& B, long object_cap) {
    RootSystemData rs;
    rs.bichar = B;

    std::map<std::vector<Weight>, int> seen;
    std::vector<GroupoidObject>& objects = rs.objects;
    objects.push_back(initial_object(B));
    seen[objects[0].simples] = 0;

    for (size_t head = 0; head < objects.size(); ++head) {
        for (int i = 0; i < B.ell(); ++i) {
            GroupoidObject next = reflect_object(B, objects[head], i);
            auto [it, inserted] = seen.emplace(next.simples, static_cast<int>(objects.size()));
            if (inserted) {
                next.parent = static_cast<int>(head);
                next.reflect_index = i;
                objects.push_back(std::move(next));
                if (static_cast<long>(objects.size()) > object_cap)
                    throw cap_exceeded_error("object cap exceeded: " + std::to_string(object_cap) +
                                             " groupoid objects (raise the cap if the system is "
                                             "believed finite)");
            }
        }
    }

    std::map<Weight, RootRecord> roots;
    for (const auto& obj : objects)
        for (const auto& s : obj.simples) {
            if (!is_nonnegative(s) || is_zero(s)) continue;
            if (roots.count(s)) continue;
            RootRecord rec;
            rec.beta = s;
            rec.q_beta = B.q_of(s);
            rec.c_beta = qchar_of(rec.q_beta);
            rec.is_real = rec.q_beta.has_infinite_order();
            roots.emplace(s, std::move(rec));
        }
    for (auto& [w, rec] : roots) rs.positive.push_back(std::move(rec));
    std::sort(rs.positive.begin(), rs.positive.end(),
              [](const RootRecord& a, const RootRecord& b) { return weight_table_less(a.beta, b.beta); });
    return rs;
}

const RootRecord* RootSystemData::find(const Weight& beta) const {
    for (const auto& r : positive)
        if (r.beta == beta) return &r;
    return nullptr;
}

const RootRecord& RootSystemData::record(const Weight& beta) const {
    const RootRecord* r = find(beta);
    if (!r) throw invalid_input_error("not a positive root: " + weight_str(beta));
    return *r;
}

std::vector<const RootRecord*> RootSystemData::real_positive() const {
    std::vector<const RootRecord*> out;
    for (const auto& r : positive)
        if (r.is_real) out.push_back(&r);
    return out;
}

std::vector<const RootRecord*> RootSystemData::null_positive() const {
    std::vector<const RootRecord*> out;
    for (const auto& r : positive)
        if (!r.is_real) out.push_back(&r);
    return out;
}

long RootSystemData::max_root_height() const {
    long h = 0;
    for (const auto& r : positive) h = std::max(h, height(r.beta, bichar.ell()));
    return h;
}

bool check_rcrho(const Bicharacter& B, const GroupoidObject& obj, int i, const Weight& lam) {
    const Weight& ai = obj.simples[static_cast<size_t>(i)];
    const int ci = qchar_of(B.chi(ai, ai));
    const Monomial lhs = (B.chi(ai, lam) * B.chi(lam, ai)).pow(ci - 1);

    // hrho of the reflected object, evaluated through its own coordinates
    const GroupoidObject refl = reflect_object(B, obj, i);
    auto hrho_in = [&B](const GroupoidObject& o, const Weight& w) {
        const auto coords = coords_in_basis(o.simples, w);
        Monomial out = Monomial::one();
        for (size_t j = 0; j < coords.size(); ++j) {
            const Weight& sj = o.simples[j];
            if (coords[j] != 0) out = out * B.chi(sj, sj).pow(coords[j]);
        }
        return out;
    };
    const Monomial rhs = hrho_in(refl, lam) / hrho_in(obj, lam);
    return lhs == rhs;
}

} // namespace gqchar
