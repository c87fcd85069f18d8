#include "gqchar/config_io.hpp"

#include "gqchar/cyclotomic.hpp"
#include "gqchar/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <functional>

namespace gqchar {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw invalid_input_error("malformed JSON");
    return j;
}

LoadedConfig config_from_json(const json& j) {
    if (!j.is_object()) throw invalid_input_error("config must be a JSON object");
    if (j.contains("cyclotomic_order")) set_cyclotomic_order(j["cyclotomic_order"].get<int>());

    LoadedConfig out;
    if (j.contains("family")) {
        CatalogParams p;
        p.m = j.value("m", 0L);
        p.n = j.value("n", 0L);
        p.a = j.value("a", 0L);
        p.cartan = j.value("cartan", std::string());
        p.x = j.value("x", std::string());
        p.y = j.value("y", std::string());
        out.catalog = build_catalog(j["family"].get<std::string>(), p);
        out.bichar = out.catalog->bichar;
        return out;
    }
    if (!j.contains("matrix")) throw invalid_input_error("config needs \"family\" or \"matrix\"");
    const auto& rows = j["matrix"];
    if (!rows.is_array() || rows.empty()) throw invalid_input_error("matrix must be a nonempty array");
    std::vector<std::vector<Monomial>> m;
    for (const auto& row : rows) {
        std::vector<Monomial> r;
        for (const auto& cell : row) r.push_back(Monomial::parse(cell.get<std::string>()));
        m.push_back(std::move(r));
    }
    const int ellp = static_cast<int>(m.size());
    const int ell = j.value("ell", ellp);
    const int ext = j.value("ext_rank", ellp - ell);
    if (ell + ext != ellp) throw invalid_input_error("ell + ext_rank must equal the matrix size");
    out.bichar = Bicharacter(ell, ext, std::move(m));
    return out;
}

std::vector<Monomial> parse_monomial_list(const json& arr, int expected) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != expected)
        throw invalid_input_error("expected a list of " + std::to_string(expected) + " monomials");
    std::vector<Monomial> out;
    for (const auto& cell : arr) out.push_back(Monomial::parse(cell.get<std::string>()));
    return out;
}

// Solve for basis ratios x_i with prod_i x_i^{beta_i} = target over the
// pi-block; canonical solution (free q-exponents 0, least root exponents).
std::vector<Monomial> solve_pi0_lambda(const Bicharacter& B,
                                       const std::vector<std::pair<Weight, Monomial>>& constraints) {
    const int ell = B.ell();
    const int n = cyclotomic_order();

    // q-exponents: rational elimination, integrality check, free vars = 0
    const int rows = static_cast<int>(constraints.size());
    std::vector<std::vector<mpq_class>> m(static_cast<size_t>(rows),
                                          std::vector<mpq_class>(static_cast<size_t>(ell) + 1, 0));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < ell; ++c) m[static_cast<size_t>(r)][static_cast<size_t>(c)] = constraints[static_cast<size_t>(r)].first[static_cast<size_t>(c)];
        m[static_cast<size_t>(r)][static_cast<size_t>(ell)] = static_cast<long>(constraints[static_cast<size_t>(r)].second.q_exp());
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < ell && row < rows; ++col) {
        int piv = -1;
        for (int i = row; i < rows; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(row)]);
        const mpq_class p = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (int jj = col; jj <= ell; ++jj) m[static_cast<size_t>(row)][static_cast<size_t>(jj)] /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == row) continue;
            const mpq_class f = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int jj = col; jj <= ell; ++jj)
                m[static_cast<size_t>(i)][static_cast<size_t>(jj)] -= f * m[static_cast<size_t>(row)][static_cast<size_t>(jj)];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int i = row; i < rows; ++i)
        if (m[static_cast<size_t>(i)][static_cast<size_t>(ell)] != 0)
            throw invalid_input_error("lambda_pi0 values are inconsistent on the q-exponents");
    std::vector<long long> qexp(static_cast<size_t>(ell), 0);
    for (int i = 0; i < row; ++i) {
        const mpq_class& v = m[static_cast<size_t>(i)][static_cast<size_t>(ell)];
        if (v.get_den() != 1)
            throw invalid_input_error("lambda_pi0 values admit no monomial solution (q-exponent "
                                      "not integral); supply k/l values instead");
        qexp[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = v.get_num().get_si();
        // free columns after the pivot stay 0; re-check below
    }
    for (const auto& [beta, target] : constraints) {
        long long s = 0;
        for (int c = 0; c < ell; ++c) s += static_cast<long long>(beta[static_cast<size_t>(c)]) * qexp[static_cast<size_t>(c)];
        if (s != target.q_exp())
            throw invalid_input_error("lambda_pi0 q-exponent system has no integral solution");
    }

    // root exponents: DFS over Z_N^ell with pruning on fully assigned rows
    std::vector<int> rexp(static_cast<size_t>(ell), -1);
    std::function<bool(int)> dfs = [&](int idx) -> bool {
        if (idx == ell) return true;
        for (int v = 0; v < n; ++v) {
            rexp[static_cast<size_t>(idx)] = v;
            bool ok = true;
            for (const auto& [beta, target] : constraints) {
                bool assigned = true;
                long long s = 0;
                for (int c = 0; c < ell; ++c) {
                    if (beta[static_cast<size_t>(c)] == 0) continue;
                    if (c > idx) { assigned = false; break; }
                    s += static_cast<long long>(beta[static_cast<size_t>(c)]) * rexp[static_cast<size_t>(c)];
                }
                if (assigned && ((s % n + n) % n) != target.root_exp()) { ok = false; break; }
            }
            if (ok && dfs(idx + 1)) return true;
        }
        rexp[static_cast<size_t>(idx)] = -1;
        return false;
    };
    if (!dfs(0))
        throw invalid_input_error("lambda_pi0 values admit no monomial solution (root part)");

    std::vector<Monomial> out(static_cast<size_t>(B.ellp()));
    for (int i = 0; i < ell; ++i) out[static_cast<size_t>(i)] = Monomial(rexp[static_cast<size_t>(i)], qexp[static_cast<size_t>(i)]);
    return out;
}

WeightCharacter weight_from_json(const json& j, const LoadedConfig& cfg) {
    const Bicharacter& B = cfg.bichar;
    if (!j.is_object()) throw invalid_input_error("weight file must be a JSON object");
    if (j.contains("k") && j.contains("l"))
        return WeightCharacter(parse_monomial_list(j["k"], B.ellp()),
                               parse_monomial_list(j["l"], B.ellp()));
    if (j.contains("lambda"))
        return WeightCharacter::from_lambda_values(parse_monomial_list(j["lambda"], B.ellp()));
    if (j.contains("lambda_pi0")) {
        if (!cfg.catalog)
            throw invalid_input_error("lambda_pi0 weights need a catalog config");
        std::vector<std::pair<Weight, Monomial>> constraints;
        for (const auto& [key, val] : j["lambda_pi0"].items()) {
            const Monomial target = Monomial::parse(val.get<std::string>());
            if (key == "alpha0") {
                constraints.emplace_back(cfg.catalog->alpha0, target);
                continue;
            }
            bool found = false;
            for (const auto& beta : cfg.catalog->pi0)
                if (weight_str(beta) == key) {
                    constraints.emplace_back(beta, target);
                    found = true;
                    break;
                }
            if (!found)
                throw invalid_input_error("lambda_pi0 key " + key +
                                          " is neither alpha0 nor a Pi_0 element");
        }
        return WeightCharacter::from_lambda_values(solve_pi0_lambda(B, constraints));
    }
    throw invalid_input_error("weight file needs \"k\"/\"l\", \"lambda\", or \"lambda_pi0\"");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input_error("cannot open file: " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace

LoadedConfig load_config_text(const std::string& text) { return config_from_json(parse_json(text)); }
LoadedConfig load_config_file(const std::string& path) { return load_config_text(slurp(path)); }

WeightCharacter load_weight_text(const std::string& text, const LoadedConfig& cfg) {
    return weight_from_json(parse_json(text), cfg);
}

WeightCharacter load_weight_file(const std::string& path, const LoadedConfig& cfg) {
    return load_weight_text(slurp(path), cfg);
}

} // namespace gqchar
