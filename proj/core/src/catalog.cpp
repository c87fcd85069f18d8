#include "gqchar/catalog.hpp"

#include "gqchar/cyclotomic.hpp"
#include "gqchar/errors.hpp"

#include <algorithm>

namespace gqchar {

namespace {

using LMat = std::vector<std::vector<long>>;

LMat zero_mat(int n) { return LMat(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0)); }

void sym_set(LMat& x, int i, int j, long v) {
    x[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
    x[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
}

long det_ll(LMat m) {
    const int n = static_cast<int>(m.size());
    long det = 1;
    long prev = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m[i][k] != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return det * m[n - 1][n - 1];
}

LMat adjugate(const LMat& m) {
    const int n = static_cast<int>(m.size());
    LMat adj = zero_mat(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LMat minor;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<long> row;
                for (int c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            const long cof = (n == 1) ? 1 : det_ll(minor);
            adj[static_cast<size_t>(j)][static_cast<size_t>(i)] = ((i + j) % 2 ? -cof : cof);
        }
    return adj;
}

// Symmetric super-Cartan data matrix X of the (pibar2) families.
LMat super_form(const std::string& sub, long m, long n, long a, int& ell_out) {
    if (sub == "i") {
        if (m < 1 || n < 1 || m < n)
            throw invalid_input_error("pibar2.i needs m >= n >= 1");
        const int ell = static_cast<int>(m + n + 1);
        LMat x = zero_mat(ell);
        for (long i = 1; i <= m; ++i) {
            sym_set(x, i - 1, i - 1, 2);
            sym_set(x, i - 1, i, -1);
        }
        sym_set(x, m, m, 0);
        for (long j = m + 2; j <= m + n + 1; ++j) {
            sym_set(x, j - 1, j - 1, -2);
            sym_set(x, j - 2, j - 1, 1);
        }
        ell_out = ell;
        return x;
    }
    if (sub == "ii") {
        if (m < 1 || n < 1) throw invalid_input_error("pibar2.ii needs m, n >= 1");
        const int ell = static_cast<int>(m + n);
        LMat x = zero_mat(ell);
        for (long i = 1; i <= n - 1; ++i) {
            sym_set(x, i - 1, i - 1, -2);
            sym_set(x, i - 1, i, 1);
        }
        sym_set(x, n - 1, n - 1, 0);
        for (long j = n + 1; j <= m + n - 1; ++j) {
            sym_set(x, j - 1, j - 1, 2);
            sym_set(x, j - 2, j - 1, -1);
        }
        sym_set(x, ell - 1, ell - 1, 1);
        sym_set(x, ell - 2, ell - 1, -1);
        ell_out = ell;
        return x;
    }
    if (sub == "iii") {
        if (n < 3) throw invalid_input_error("pibar2.iii needs n >= 3");
        const int ell = static_cast<int>(n);
        LMat x = zero_mat(ell);
        sym_set(x, 0, 0, 0);
        for (long i = 2; i <= n - 1; ++i) {
            sym_set(x, i - 1, i - 1, 2);
            sym_set(x, i - 2, i - 1, -1);
        }
        sym_set(x, ell - 1, ell - 1, 4);
        sym_set(x, ell - 2, ell - 1, -2);
        ell_out = ell;
        return x;
    }
    if (sub == "iv") {
        if (m < 2 || n < 1) throw invalid_input_error("pibar2.iv needs m >= 2, n >= 1");
        const int ell = static_cast<int>(m + n);
        LMat x = zero_mat(ell);
        for (long i = 1; i <= n - 1; ++i) {
            sym_set(x, i - 1, i - 1, -2);
            sym_set(x, i - 1, i, 1);
        }
        sym_set(x, n - 1, n - 1, 0);
        for (long j = n + 1; j <= m + n - 1; ++j) {
            sym_set(x, j - 1, j - 1, 2);
            sym_set(x, j - 2, j - 1, -1);
        }
        sym_set(x, ell - 1, ell - 1, 2);
        sym_set(x, ell - 2, ell - 1, 0);
        sym_set(x, ell - 3, ell - 1, -1);
        ell_out = ell;
        return x;
    }
    if (sub == "v") {
        LMat x = zero_mat(4);
        sym_set(x, 0, 0, 0);
        sym_set(x, 1, 1, 2);
        sym_set(x, 2, 2, 4);
        sym_set(x, 3, 3, 4);
        sym_set(x, 0, 1, -1);
        sym_set(x, 1, 2, -2);
        sym_set(x, 2, 3, -2);
        ell_out = 4;
        return x;
    }
    if (sub == "vi") {
        LMat x = zero_mat(3);
        sym_set(x, 0, 0, 0);
        sym_set(x, 1, 1, 2);
        sym_set(x, 2, 2, 6);
        sym_set(x, 0, 1, -1);
        sym_set(x, 1, 2, -3);
        ell_out = 3;
        return x;
    }
    if (sub == "vii") {
        if (a == 0 || a == -1) throw invalid_input_error("pibar2.vii needs a not in {0,-1}");
        LMat x = zero_mat(3);
        sym_set(x, 0, 0, -2);
        sym_set(x, 1, 1, 0);
        sym_set(x, 2, 2, -2 * a);
        sym_set(x, 0, 1, 1);
        sym_set(x, 1, 2, a);
        ell_out = 3;
        return x;
    }
    throw invalid_input_error("unknown pibar2 sub-family: " + sub);
}

struct ChiBuilder {
    int ell, ext;
    std::vector<std::vector<Monomial>> m;

    ChiBuilder(int ell_, int ext_) : ell(ell_), ext(ext_) {
        m.assign(static_cast<size_t>(ell + ext),
                 std::vector<Monomial>(static_cast<size_t>(ell + ext), Monomial::one()));
    }
    void diag(int i, const Monomial& v) { m[static_cast<size_t>(i)][static_cast<size_t>(i)] = v; }
    // q_ij q_ji is what matters on the pi-block; the product goes to the
    // upper entry and the lower one stays 1
    void pair_product(int i, int j, const Monomial& v) {
        m[static_cast<size_t>(std::min(i, j))][static_cast<size_t>(std::max(i, j))] = v;
        m[static_cast<size_t>(std::max(i, j))][static_cast<size_t>(std::min(i, j))] = Monomial::one();
    }
    void set(int i, int j, const Monomial& v) { m[static_cast<size_t>(i)][static_cast<size_t>(j)] = v; }
    Bicharacter build() const { return Bicharacter(ell, ext, m); }
};

std::vector<std::vector<mpq_class>> to_form(const LMat& x, int ellp) {
    std::vector<std::vector<mpq_class>> f(static_cast<size_t>(ellp),
                                          std::vector<mpq_class>(static_cast<size_t>(ellp), 0));
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) f[i][j] = x[i][j];
    return f;
}

std::vector<Weight> fundamental_from_adjugate(const LMat& x, int ellp) {
    const LMat adj = adjugate(x);
    const int ell = static_cast<int>(x.size());
    std::vector<Weight> out;
    for (int i = 0; i < ell; ++i) {
        Weight w = zero_weight(ellp);
        for (int k = 0; k < ell; ++k) w[static_cast<size_t>(k)] = static_cast<int>(adj[static_cast<size_t>(k)][static_cast<size_t>(i)]);
        out.push_back(std::move(w));
    }
    return out;
}

Weight pi_weight(int ellp, std::initializer_list<std::pair<int, int>> coords) {
    Weight w = zero_weight(ellp);
    for (auto [i, c] : coords) w[static_cast<size_t>(i)] = c;
    return w;
}

void require_minus_one_available() {
    if (cyclotomic_order() % 2 != 0)
        throw invalid_input_error("this family needs -1: set an even cyclotomic order");
}

Monomial zeta3() {
    const int n = cyclotomic_order();
    if (n % 3 != 0)
        throw invalid_input_error("pibar5 needs a primitive cube root: set 3 | N (default N = 6)");
    return Monomial::zeta(n / 3);
}

} // namespace

std::vector<std::vector<long>> symmetrized_cartan(const std::string& type) {
    if (type.size() < 2) throw invalid_input_error("bad Cartan type: " + type);
    const char series = type[0];
    int rank = 0;
    try {
        rank = std::stoi(type.substr(1));
    } catch (...) {
        throw invalid_input_error("bad Cartan type: " + type);
    }
    auto chain = [&](int n, long norm) {
        LMat x = zero_mat(n);
        for (int i = 0; i < n; ++i) sym_set(x, i, i, norm);
        for (int i = 0; i + 1 < n; ++i) sym_set(x, i, i + 1, -norm / 2);
        return x;
    };
    switch (series) {
    case 'A': {
        if (rank < 1) throw invalid_input_error("A_n needs n >= 1");
        return chain(rank, 2);
    }
    case 'B': {
        if (rank < 2) throw invalid_input_error("B_n needs n >= 2");
        LMat x = chain(rank, 4);
        sym_set(x, rank - 1, rank - 1, 2);
        sym_set(x, rank - 2, rank - 1, -2);
        return x;
    }
    case 'C': {
        if (rank < 3) throw invalid_input_error("C_n needs n >= 3");
        LMat x = chain(rank, 2);
        sym_set(x, rank - 1, rank - 1, 4);
        sym_set(x, rank - 2, rank - 1, -2);
        return x;
    }
    case 'D': {
        if (rank < 4) throw invalid_input_error("D_n needs n >= 4");
        LMat x = chain(rank - 1, 2);
        x.resize(static_cast<size_t>(rank));
        for (auto& row : x) row.resize(static_cast<size_t>(rank), 0);
        x.back().assign(static_cast<size_t>(rank), 0);
        sym_set(x, rank - 1, rank - 1, 2);
        sym_set(x, rank - 3, rank - 1, -1);
        return x;
    }
    case 'E': {
        if (rank < 6 || rank > 8) throw invalid_input_error("E_n needs n in {6,7,8}");
        LMat x = zero_mat(rank);
        for (int i = 0; i < rank; ++i) sym_set(x, i, i, 2);
        // Bourbaki numbering: 1-3-4-5-6(-7-8) chain, node 2 hangs off node 4
        sym_set(x, 0, 2, -1);
        sym_set(x, 2, 3, -1);
        sym_set(x, 3, 4, -1);
        sym_set(x, 4, 5, -1);
        if (rank >= 7) sym_set(x, 5, 6, -1);
        if (rank >= 8) sym_set(x, 6, 7, -1);
        sym_set(x, 1, 3, -1);
        return x;
    }
    case 'F': {
        if (rank != 4) throw invalid_input_error("F needs rank 4");
        LMat x = zero_mat(4);
        sym_set(x, 0, 0, 4);
        sym_set(x, 1, 1, 4);
        sym_set(x, 2, 2, 2);
        sym_set(x, 3, 3, 2);
        sym_set(x, 0, 1, -2);
        sym_set(x, 1, 2, -2);
        sym_set(x, 2, 3, -1);
        return x;
    }
    case 'G': {
        if (rank != 2) throw invalid_input_error("G needs rank 2");
        LMat x = zero_mat(2);
        sym_set(x, 0, 0, 2);
        sym_set(x, 1, 1, 6);
        sym_set(x, 0, 1, -3);
        return x;
    }
    default: throw invalid_input_error("bad Cartan series: " + type);
    }
}

mpq_class CatalogConfig::pair(const Weight& lam, const Weight& mu) const {
    const size_t n = form.size();
    if (lam.size() != n || mu.size() != n) throw invalid_input_error("pair: weight length mismatch");
    mpq_class out = 0;
    for (size_t i = 0; i < n; ++i) {
        if (lam[i] == 0) continue;
        for (size_t j = 0; j < n; ++j)
            if (mu[j] != 0) out += mpq_class(lam[i]) * mpq_class(mu[j]) * form[i][j];
    }
    return out;
}

CatalogConfig build_catalog(const std::string& family, const CatalogParams& params) {
    CatalogConfig cfg;
    cfg.family = family;
    cfg.params = params;
    const Monomial q = Monomial::q(1);

    if (family == "pibar0") {
        const Monomial x = params.x.empty() ? q : Monomial::parse(params.x);
        if (!x.has_infinite_order())
            throw invalid_input_error("pibar0 needs x of infinite order");
        cfg.x_param = x;
        ChiBuilder b(1, 1);
        b.diag(0, Monomial::one());
        b.set(0, 1, Monomial::one()); // chi(alpha_1, varpi_1) = 1
        b.set(1, 0, x);               // chi(varpi_1, alpha_1) = x
        b.set(1, 1, Monomial::one());
        cfg.bichar = b.build();
        cfg.form = {{0, 1}, {1, 0}};
        cfg.fundamental = {pi_weight(2, {{1, 1}})};
        cfg.alpha0 = zero_weight(2);
        cfg.c_pibar = 0;
        return cfg;
    }

    if (family == "pibar1") {
        const LMat x = symmetrized_cartan(params.cartan);
        const int ell = static_cast<int>(x.size());
        ChiBuilder b(ell, 0);
        for (int i = 0; i < ell; ++i) {
            b.diag(i, q.pow(x[static_cast<size_t>(i)][static_cast<size_t>(i)]));
            for (int j = i + 1; j < ell; ++j)
                b.pair_product(i, j, q.pow(2 * x[static_cast<size_t>(i)][static_cast<size_t>(j)]));
        }
        cfg.bichar = b.build();
        cfg.form = to_form(x, ell);
        cfg.fundamental = fundamental_from_adjugate(x, ell);
        cfg.alpha0 = zero_weight(ell);
        cfg.c_pibar = 0;
        for (int i = 0; i < ell; ++i) cfg.pi0.push_back(unit_weight(ell, i));
        return cfg;
    }

    if (family.rfind("pibar2.", 0) == 0) {
        require_minus_one_available();
        const std::string sub = family.substr(7);
        int ell = 0;
        const LMat x = super_form(sub, params.m, params.n, params.a, ell);
        const bool degenerate = det_ll(x) == 0; // exactly the sl(m|m) case
        const int ext = degenerate ? 1 : 0;
        const int ellp = ell + ext;

        ChiBuilder b(ell, ext);
        for (int i = 0; i < ell; ++i) {
            const long xii = x[static_cast<size_t>(i)][static_cast<size_t>(i)];
            b.diag(i, xii != 0 ? q.pow(xii) : Monomial::minus_one());
            for (int j = i + 1; j < ell; ++j)
                b.pair_product(i, j, q.pow(2 * x[static_cast<size_t>(i)][static_cast<size_t>(j)]));
        }
        cfg.form = to_form(x, ellp);
        if (!degenerate) {
            cfg.fundamental = fundamental_from_adjugate(x, ellp);
        } else {
            // eps_1 extension fixed by the catalog
            b.set(ell, ell, q);
            for (int i = 0; i < ell; ++i) {
                b.set(ell, i, Monomial::one());            // chi(eps_1, alpha_i) = 1
                b.set(i, ell, i == 0 ? q.pow(2) : Monomial::one()); // chi(alpha_i, eps_1)
            }
            cfg.form[static_cast<size_t>(ell)][static_cast<size_t>(ell)] = 1;
            cfg.form[static_cast<size_t>(ell)][0] = 1;
            cfg.form[0][static_cast<size_t>(ell)] = 1;
            // eps_i = eps_1 - sum_{t<i} alpha_t; varpi from partial eps sums
            std::vector<Weight> eps(static_cast<size_t>(ell + 1));
            eps[1] = unit_weight(ellp, ell);
            for (int i = 2; i <= ell; ++i)
                eps[static_cast<size_t>(i)] = eps[static_cast<size_t>(i - 1)] - unit_weight(ellp, i - 2);
            const long mm = params.m;
            std::vector<Weight> varpi(static_cast<size_t>(ell + 1));
            Weight acc = zero_weight(ellp);
            for (long i = 1; i <= mm + 1; ++i) {
                acc = acc + eps[static_cast<size_t>(i)];
                varpi[static_cast<size_t>(i)] = acc;
            }
            for (long i = mm + 2; i <= ell; ++i)
                varpi[static_cast<size_t>(i)] = varpi[static_cast<size_t>(i - 1)] - eps[static_cast<size_t>(i)];
            for (long i = 1; i <= ell; ++i) cfg.fundamental.push_back(varpi[static_cast<size_t>(i)]);
        }
        cfg.bichar = b.build();

        const long m = params.m, n = params.n;
        cfg.alpha0 = zero_weight(ellp);
        if (sub == "ii") {
            for (long i = n; i <= ell; ++i) cfg.alpha0[static_cast<size_t>(i - 1)] = 1;
            cfg.c_pibar = static_cast<int>(2 * m);
            cfg.pi0.push_back(cfg.alpha0);
            for (long i = 1; i <= ell; ++i)
                if (i != n) cfg.pi0.push_back(unit_weight(ellp, static_cast<int>(i - 1)));
        } else if (sub == "iv") {
            cfg.alpha0[static_cast<size_t>(ell - 2)] += 1;
            cfg.alpha0[static_cast<size_t>(ell - 1)] += 1;
            for (long i = n; i <= ell - 2; ++i) cfg.alpha0[static_cast<size_t>(i - 1)] += 2;
            cfg.c_pibar = static_cast<int>(m);
            cfg.pi0.push_back(cfg.alpha0);
            for (long i = 1; i <= ell; ++i)
                if (i != n) cfg.pi0.push_back(unit_weight(ellp, static_cast<int>(i - 1)));
        } else if (sub == "v") {
            cfg.alpha0 = pi_weight(ellp, {{0, 2}, {1, 3}, {2, 2}, {3, 1}});
            cfg.c_pibar = 4;
            cfg.pi0 = {cfg.alpha0, unit_weight(ellp, 1), unit_weight(ellp, 2), unit_weight(ellp, 3)};
        } else if (sub == "vi") {
            cfg.alpha0 = pi_weight(ellp, {{0, 1}, {1, 2}, {2, 1}});
            cfg.c_pibar = 6;
            cfg.pi0 = {cfg.alpha0, unit_weight(ellp, 1), unit_weight(ellp, 2)};
        } else if (sub == "vii") {
            cfg.alpha0 = pi_weight(ellp, {{0, 1}, {1, 2}, {2, 1}});
            cfg.c_pibar = 2;
            cfg.pi0 = {cfg.alpha0, unit_weight(ellp, 0), unit_weight(ellp, 2)};
        } else if (sub == "i") {
            cfg.c_pibar = 0;
            for (long i = 1; i <= ell; ++i)
                if (i != m + 1) cfg.pi0.push_back(unit_weight(ellp, static_cast<int>(i - 1)));
        } else { // iii
            cfg.c_pibar = 0;
            for (long i = 2; i <= ell; ++i) cfg.pi0.push_back(unit_weight(ellp, static_cast<int>(i - 1)));
        }
        return cfg;
    }

    if (family == "pibar3.i" || family == "pibar3.ii") {
        require_minus_one_available();
        const Monomial x = Monomial::parse(params.x.empty() ? "q^2" : params.x);
        const Monomial y = Monomial::parse(params.y.empty() ? (family == "pibar3.i" ? "q^3" : "-q^-2") : params.y);
        if (!x.has_infinite_order() || !y.has_infinite_order())
            throw invalid_input_error("pibar3 needs x, y of infinite order");
        const Monomial xy = x * y;
        if (xy.is_one()) throw invalid_input_error("pibar3 needs xy != 1");
        const bool variant_i = (family == "pibar3.i");
        if (variant_i && !xy.has_infinite_order())
            throw invalid_input_error("pibar3.i needs xy of infinite order");
        if (!variant_i && xy.has_infinite_order())
            throw invalid_input_error("pibar3.ii needs xy of finite order");
        cfg.x_param = x;
        cfg.y_param = y;

        const int ext = variant_i ? 0 : 1;
        const int ellp = 3 + ext;
        ChiBuilder b(3, ext);
        b.diag(0, x);
        b.diag(1, Monomial::minus_one());
        b.diag(2, y);
        b.pair_product(0, 1, x.inverse());
        b.pair_product(1, 2, y.inverse());
        b.pair_product(0, 2, Monomial::one());
        LMat f = zero_mat(3);
        sym_set(f, 0, 0, 2);
        sym_set(f, 1, 1, 0);
        sym_set(f, 2, 2, -4);
        sym_set(f, 0, 1, -1);
        sym_set(f, 1, 2, 2);
        cfg.form = to_form(f, ellp);
        if (variant_i) {
            cfg.fundamental = {pi_weight(3, {{0, 1}}),
                               pi_weight(3, {{0, 1}, {1, 2}, {2, 1}}),
                               pi_weight(3, {{2, 1}})};
            cfg.alpha0 = pi_weight(3, {{0, 1}, {1, 2}, {2, 1}});
            cfg.c_pibar = 2;
            cfg.pi0 = {cfg.alpha0, unit_weight(3, 0), unit_weight(3, 2)};
        } else {
            for (int i = 0; i < 3; ++i) {
                b.set(i, 3, Monomial::one());
                b.set(3, i, i == 1 ? x : Monomial::one()); // chi(eps_1, alpha_i) = x^{d_i2}
            }
            b.set(3, 3, Monomial::one());
            cfg.form[3][1] = 1;
            cfg.form[1][3] = 1;
            cfg.fundamental = {pi_weight(4, {{0, 1}}), unit_weight(4, 3), pi_weight(4, {{2, 1}})};
            cfg.alpha0 = zero_weight(4);
            cfg.c_pibar = 0;
            cfg.pi0 = {unit_weight(4, 0), unit_weight(4, 2)};
        }
        cfg.bichar = b.build();
        return cfg;
    }

    if (family == "pibar4") {
        require_minus_one_available();
        // ( | ) of sl(3|2)-type, i.e. pibar2.i with (m,n) = (2,1)
        int ell = 0;
        const LMat x = super_form("i", 2, 1, 0, ell);
        const long g[4] = {0, 0, 1, 1};
        ChiBuilder b(4, 0);
        for (int i = 0; i < 4; ++i) {
            Monomial d = q.pow(x[static_cast<size_t>(i)][static_cast<size_t>(i)]);
            if (g[i]) d = d * Monomial::minus_one();
            b.diag(i, d);
            for (int j = i + 1; j < 4; ++j) {
                Monomial p = q.pow(2 * x[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                if (g[i] && g[j]) p = p * Monomial::minus_one(); // (-1)^{g_i g_j}
                b.pair_product(i, j, p);
            }
        }
        cfg.bichar = b.build();
        cfg.form = to_form(x, 4);
        cfg.fundamental = fundamental_from_adjugate(x, 4);
        cfg.alpha0 = pi_weight(4, {{0, 1}, {1, 3}, {2, 2}, {3, 1}});
        cfg.c_pibar = 3;
        cfg.pi0 = {cfg.alpha0, unit_weight(4, 0), unit_weight(4, 1), unit_weight(4, 3)};
        return cfg;
    }

    if (family == "pibar5") {
        const Monomial z = zeta3();
        // ( | ) of sl(2|1)-type: diag (2, 0), off -1
        LMat x = zero_mat(2);
        sym_set(x, 0, 0, 2);
        sym_set(x, 1, 1, 0);
        sym_set(x, 0, 1, -1);
        ChiBuilder b(2, 0);
        b.diag(0, q.pow(2));
        b.diag(1, z);
        b.pair_product(0, 1, q.pow(-2)); // zeta^{2 g'_1 g'_2} = 1 here
        cfg.bichar = b.build();
        cfg.form = to_form(x, 2);
        cfg.fundamental = fundamental_from_adjugate(x, 2);
        cfg.alpha0 = pi_weight(2, {{0, 1}, {1, 2}});
        cfg.c_pibar = 2;
        cfg.pi0 = {cfg.alpha0, unit_weight(2, 0)};
        return cfg;
    }

    throw invalid_input_error("unknown catalog family: " + family);
}

} // namespace gqchar
