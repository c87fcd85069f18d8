#include "cli.hpp"

#include "gqchar/characters.hpp"
#include "gqchar/config_io.hpp"
#include "gqchar/cyclotomic.hpp"
#include "gqchar/errors.hpp"
#include "gqchar/highestweight.hpp"
#include "gqchar/oracle.hpp"
#include "gqchar/weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

namespace gqchar::cli {

namespace {

using nlohmann::json;

struct CommonOpts {
    std::string config_path;
    std::string weight_path;
    std::string format = "text";
    int order = 6;
};

LoadedConfig load(const CommonOpts& o) {
    set_cyclotomic_order(o.order);
    return load_config_file(o.config_path);
}

void emit(const json& j, const std::string& format, const std::string& text) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_catalog(const CommonOpts& o) {
    const LoadedConfig cfg = load(o);
    const Bicharacter& B = cfg.bichar;
    json j;
    j["ell"] = B.ell();
    j["ext_rank"] = B.ext_rank();
    json rows = json::array();
    std::string text;
    text += "ell = " + std::to_string(B.ell()) + ", ext_rank = " + std::to_string(B.ext_rank()) + "\n";
    text += "chi matrix:\n";
    for (int i = 0; i < B.ellp(); ++i) {
        json row = json::array();
        text += " ";
        for (int jx = 0; jx < B.ellp(); ++jx) {
            row.push_back(B.entry(i, jx).str());
            text += " " + B.entry(i, jx).str();
        }
        rows.push_back(row);
        text += "\n";
    }
    j["matrix"] = rows;
    if (cfg.catalog) {
        const CatalogConfig& c = *cfg.catalog;
        j["family"] = c.family;
        j["alpha0"] = json(c.alpha0);
        j["c_pibar"] = c.c_pibar;
        json pi0 = json::array();
        for (const auto& b : c.pi0) pi0.push_back(json(b));
        j["pi0"] = pi0;
        json fw = json::array();
        for (const auto& b : c.fundamental) fw.push_back(json(b));
        j["fundamental"] = fw;
        text += "family = " + c.family + "\n";
        text += "alpha0 = " + weight_str(c.alpha0) + ", c = " + std::to_string(c.c_pibar) + "\n";
        text += "Pi0 =";
        for (const auto& b : c.pi0) text += " " + weight_str(b);
        text += "\n";
    }
    emit(j, o.format, text);
    return 0;
}

int cmd_roots(const CommonOpts& o, long object_cap) {
    const LoadedConfig cfg = load(o);
    const RootSystemData rs = compute_roots(cfg.bichar, object_cap);
    json j;
    json arr = json::array();
    std::string text = "root  q_beta  c_beta  kind\n";
    for (const auto& r : rs.positive) {
        json e;
        e["root"] = json(r.beta);
        e["q_beta"] = r.q_beta.str();
        e["c_beta"] = r.c_beta;
        e["real"] = r.is_real;
        arr.push_back(e);
        text += weight_str(r.beta) + "  " + r.q_beta.str() + "  " + std::to_string(r.c_beta) +
                "  " + (r.is_real ? "real" : "null") + "\n";
    }
    j["roots"] = arr;
    j["objects"] = rs.objects.size();
    emit(j, o.format, text);
    return 0;
}

int cmd_weyl(const CommonOpts& o, long size_cap) {
    const LoadedConfig cfg = load(o);
    const Bicharacter& B = cfg.bichar;
    const RootSystemData rs = compute_roots(B);
    const auto group = generate_weyl_group(B, rs, size_cap);
    const auto base = simple_real_system(rs);
    const Weight delta = hatdelta(rs);

    json j;
    j["order"] = group.size();
    json xf = json::array();
    for (const auto& b : base) xf.push_back(json(b));
    j["simple_system"] = xf;
    j["hatdelta"] = json(delta);
    std::string text = "|W| = " + std::to_string(group.size()) + "\nX_f =";
    for (const auto& b : base) text += " " + weight_str(b);
    text += "\nhatdelta = " + weight_str(delta) + "\n";

    if (!o.weight_path.empty()) {
        const WeightCharacter lam = load_weight_file(o.weight_path, cfg);
        auto orbit = dot_zero_orbit(B, rs, lam, group);
        std::sort(orbit.begin(), orbit.end(), [](const OrbitPoint& a, const OrbitPoint& b) {
            return weight_table_less(-a.dot0, -b.dot0);
        });
        json arr = json::array();
        text += "orbit (sign, w.0):\n";
        for (const auto& p : orbit) {
            json e;
            e["sign"] = p.sign;
            e["dot0"] = json(p.dot0);
            e["word_length"] = p.element.word.size();
            arr.push_back(e);
            text += std::string("  ") + (p.sign > 0 ? "+1" : "-1") + "  " + weight_str(p.dot0) + "\n";
        }
        j["orbit"] = arr;
    }
    emit(j, o.format, text);
    return 0;
}

int cmd_classify(const CommonOpts& o, bool c10_both) {
    const LoadedConfig cfg = load(o);
    if (!cfg.catalog) throw invalid_input_error("classify needs a catalog config");
    const WeightCharacter lam = load_weight_file(o.weight_path, cfg);
    const ClassifyVerdict v = classify_pibar(*cfg.catalog, lam, c10_both);
    json j;
    j["passes_integrality"] = v.passes_integrality;
    j["finite"] = v.finite;
    j["matched_condition"] = v.matched_condition;
    j["t_alpha0"] = v.t_alpha0;
    json tv(json::value_t::object);
    for (const auto& [k, t] : v.t_values) tv[k] = t;
    j["t_values"] = tv;
    std::string text;
    text += std::string("passes_integrality: ") + (v.passes_integrality ? "yes" : "no") + "\n";
    text += "t_alpha0: " + std::to_string(v.t_alpha0) + "\n";
    text += std::string("finite: ") + (v.finite ? "yes" : "no") + "\n";
    text += "matched_condition: " + (v.matched_condition.empty() ? "-" : v.matched_condition) + "\n";
    emit(j, o.format, text);
    return 0;
}

struct TableRow {
    Weight nu;
    long long formula = -1;
    long long oracle = -1;
};

// oracle dims for the region, parallelized over weight spaces
void fill_oracle(std::vector<TableRow>& rows, const Bicharacter& B, const WeightCharacter& lam,
                 int jobs) {
    const int workers = std::max(1, jobs);
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1))
            rows[i].oracle = irreducible_dim(B, lam, rows[i].nu);
    };
    if (workers == 1) {
        work();
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
}

int cmd_char(const CommonOpts& o, long h, const std::string& method, int jobs) {
    const LoadedConfig cfg = load(o);
    const Bicharacter& B = cfg.bichar;
    const RootSystemData rs = compute_roots(B);
    const WeightCharacter lam = load_weight_file(o.weight_path, cfg);
    Region region;
    region.height_bound = h;

    std::vector<TableRow> rows;
    for (const auto& nu : region.points(B.ell(), B.ellp())) rows.push_back({nu, -1, -1});

    const bool want_formula = method == "formula" || method == "both";
    const bool want_oracle = method == "oracle" || method == "both";
    if (want_formula) {
        const DimTable table = typical_character(B, rs, lam, region);
        for (auto& r : rows) r.formula = table.at(r.nu);
    }
    if (want_oracle) fill_oracle(rows, B, lam, jobs);

    json arr = json::array();
    std::string text = "weight  dim_formula  dim_oracle  match\n";
    bool all_match = true;
    for (const auto& r : rows) {
        json e;
        e["weight"] = json(r.nu);
        if (want_formula) e["formula"] = r.formula;
        if (want_oracle) e["oracle"] = r.oracle;
        std::string line = weight_str(r.nu) + "  ";
        line += (want_formula ? std::to_string(r.formula) : std::string("-")) + "  ";
        line += (want_oracle ? std::to_string(r.oracle) : std::string("-")) + "  ";
        if (want_formula && want_oracle) {
            const bool m = r.formula == r.oracle;
            all_match = all_match && m;
            e["match"] = m;
            line += m ? "yes" : "NO";
        } else {
            line += "-";
        }
        arr.push_back(e);
        text += line + "\n";
    }
    json j;
    j["height"] = h;
    j["entries"] = arr;
    if (want_formula && want_oracle) j["all_match"] = all_match;
    emit(j, o.format, text);
    return 0;
}

int cmd_verify(const CommonOpts& o, long h, const std::string& emit_gram, int jobs) {
    const LoadedConfig cfg = load(o);
    const Bicharacter& B = cfg.bichar;
    const RootSystemData rs = compute_roots(B);
    const WeightCharacter lam = load_weight_file(o.weight_path, cfg);
    Region region;
    region.height_bound = h;

    std::vector<TableRow> rows;
    for (const auto& nu : region.points(B.ell(), B.ellp())) rows.push_back({nu, -1, -1});
    const DimTable table = typical_character(B, rs, lam, region);
    for (auto& r : rows) r.formula = table.at(r.nu);
    fill_oracle(rows, B, lam, jobs);

    if (!emit_gram.empty()) {
        for (const auto& r : rows) {
            const GramMatrix g = gram_matrix(B, lam, r.nu);
            json jg;
            jg["weight"] = json(r.nu);
            json words = json::array();
            for (const auto& w : g.words) words.push_back(json(w));
            jg["words"] = words;
            json entries = json::array();
            for (const auto& row : g.entries) {
                json jrow = json::array();
                for (const auto& x : row) jrow.push_back(x.str());
                entries.push_back(jrow);
            }
            jg["entries"] = entries;
            std::string name = emit_gram + "/gram";
            for (int i = 0; i < B.ell(); ++i) name += "_" + std::to_string(r.nu[static_cast<size_t>(i)]);
            std::ofstream out(name + ".json");
            if (!out) throw invalid_input_error("cannot write to " + name + ".json");
            out << jg.dump(2) << "\n";
        }
    }

    bool all = true;
    json arr = json::array();
    std::string text = "weight  dim_formula  dim_oracle  match\n";
    for (const auto& r : rows) {
        const bool m = r.formula == r.oracle;
        all = all && m;
        json e;
        e["weight"] = json(r.nu);
        e["formula"] = r.formula;
        e["oracle"] = r.oracle;
        e["match"] = m;
        arr.push_back(e);
        text += weight_str(r.nu) + "  " + std::to_string(r.formula) + "  " +
                std::to_string(r.oracle) + "  " + (m ? "yes" : "NO") + "\n";
    }
    json j;
    j["height"] = h;
    j["entries"] = arr;
    j["all_match"] = all;
    emit(j, o.format, text + (all ? "all weights match\n" : "MISMATCH FOUND\n"));
    return all ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"characters of generalized quantum groups of diagonal type"};
    app.require_subcommand(1);

    CommonOpts o;
    long height = 4;
    long object_cap = 10000;
    long size_cap = 20000;
    std::string method = "formula";
    std::string emit_gram;
    bool c10_both = false;
    int jobs = 1;

    auto add_common = [&](CLI::App* cmd, bool need_weight) {
        cmd->add_option("--config", o.config_path, "config file (JSON)")->required();
        if (need_weight) cmd->add_option("--weight", o.weight_path, "weight character file (JSON)");
        cmd->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--cyclotomic-order", o.order, "N for zeta_N (default 6)")
            ->check(CLI::IsMember({1, 2, 3, 4, 6, 12}));
    };

    auto* c_catalog = app.add_subcommand("catalog", "print the resolved configuration");
    add_common(c_catalog, false);
    auto* c_roots = app.add_subcommand("roots", "positive roots with q_beta, c_beta, real|null");
    add_common(c_roots, false);
    c_roots->add_option("--object-cap", object_cap, "groupoid object budget");
    auto* c_weyl = app.add_subcommand("weyl", "Weyl group, simple system, optional dot orbit");
    add_common(c_weyl, true);
    c_weyl->add_option("--size-cap", size_cap, "group size budget");
    auto* c_classify = app.add_subcommand("classify", "finite-dimensionality verdict");
    add_common(c_classify, true);
    c_classify->add_flag("--c10-both", c10_both, "read (C10) as constraining both indices");
    auto* c_char = app.add_subcommand("char", "irreducible character table");
    add_common(c_char, true);
    c_char->add_option("--height", height, "region height bound")
        ->required()
        ->check(CLI::NonNegativeNumber);
    c_char->add_option("--method", method, "formula|oracle|both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}));
    c_char->add_option("--jobs", jobs, "worker threads for oracle fills");
    auto* c_verify = app.add_subcommand("verify", "formula vs Gram-rank oracle; exit 1 on mismatch");
    add_common(c_verify, true);
    c_verify->add_option("--height", height, "region height bound")
        ->required()
        ->check(CLI::NonNegativeNumber);
    c_verify->add_option("--emit-gram", emit_gram, "directory for Gram matrix dumps");
    c_verify->add_option("--jobs", jobs, "worker threads for oracle fills");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_catalog->parsed()) return cmd_catalog(o);
        if (c_roots->parsed()) return cmd_roots(o, object_cap);
        if (c_weyl->parsed()) return cmd_weyl(o, size_cap);
        if (c_classify->parsed()) return cmd_classify(o, c10_both);
        if (c_char->parsed()) return cmd_char(o, height, method, jobs);
        if (c_verify->parsed()) return cmd_verify(o, height, emit_gram, jobs);
    } catch (const cap_exceeded_error& e) {
        std::cerr << "error (cap exceeded): " << e.what() << "\n";
        return 3;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

} // namespace gqchar::cli
