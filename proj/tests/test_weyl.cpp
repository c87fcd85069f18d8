#include "gqchar/catalog.hpp"
#include "gqchar/characters.hpp"
#include "gqchar/cyclotomic.hpp"
#include "gqchar/errors.hpp"
#include "gqchar/weyl.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace gqchar;

TEST_CASE("single reflections") {
    set_cyclotomic_order(6);
    const auto a1 = build_catalog("pibar1", {.cartan = "A1"});
    const auto rs1 = compute_roots(a1.bichar);
    const WeylElement s = reflection(a1.bichar, rs1, Weight{1});
    CHECK(s.apply(Weight{1}) == Weight{-1});
    CHECK(s.sign == -1);

    // s_beta^2 = id and s_{-...} handled through the record lookup
    const auto b11 = build_catalog("pibar2.ii", {.m = 1, .n = 1});
    const auto rs = compute_roots(b11.bichar);
    for (const auto* r : rs.real_positive()) {
        const WeylElement sb = reflection(b11.bichar, rs, r->beta);
        WeylElement sq;
        sq.matrix = sb.matrix;
        CHECK(sb.apply(sb.apply(Weight{1, 0})) == Weight{1, 0});
        CHECK(sb.apply(sb.apply(Weight{0, 1})) == Weight{0, 1});
        CHECK(sb.apply(r->beta) == -r->beta);
    }
    // eps_1 = a1+a2, eps_2 = a2: the symmetrized product is 1, so k = 0
    const WeylElement se1 = reflection(b11.bichar, rs, Weight{1, 1});
    CHECK(se1.apply(Weight{0, 1}) == Weight{0, 1});
    CHECK_THROWS_AS(reflection(b11.bichar, rs, Weight{1, 0}), invalid_input_error); // null root
}

TEST_CASE("chi is preserved by reflections") {
    set_cyclotomic_order(6);
    const auto p5 = build_catalog("pibar5");
    const auto rs = compute_roots(p5.bichar);
    for (const auto* r : rs.real_positive()) {
        const WeylElement s = reflection(p5.bichar, rs, r->beta);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const Weight a = unit_weight(2, i), b = unit_weight(2, j);
                CHECK(p5.bichar.chi(s.apply(a), s.apply(a)) == p5.bichar.chi(a, a));
                CHECK(p5.bichar.chi(s.apply(a), s.apply(b)) * p5.bichar.chi(s.apply(b), s.apply(a)) ==
                      p5.bichar.chi(a, b) * p5.bichar.chi(b, a));
            }
    }
}

TEST_CASE("group orders") {
    set_cyclotomic_order(6);
    auto order_of = [](const char* fam, CatalogParams p = {}) {
        const auto cfg = build_catalog(fam, p);
        const auto rs = compute_roots(cfg.bichar);
        return generate_weyl_group(cfg.bichar, rs).size();
    };
    CHECK(order_of("pibar2.ii", {.m = 1, .n = 1}) == 4);
    CHECK(order_of("pibar1", {.cartan = "A2"}) == 6);
    CHECK(order_of("pibar3.i") == 8);
    CHECK(order_of("pibar5") == 4); // two orthogonal real roots
    CHECK(order_of("pibar1", {.cartan = "B2"}) == 8);
    CHECK(order_of("pibar1", {.cartan = "G2"}) == 12);
}

TEST_CASE("sign equals word parity and pi-block determinant") {
    set_cyclotomic_order(6);
    for (const char* fam : {"pibar1", "pibar3.i", "pibar2.ii"}) {
        CatalogParams p;
        if (std::string(fam) == "pibar1") p.cartan = "B2";
        if (std::string(fam) == "pibar2.ii") { p.m = 2; p.n = 1; }
        const auto cfg = build_catalog(fam, p);
        const auto rs = compute_roots(cfg.bichar);
        // generate_weyl_group already asserts det == parity internally
        const auto group = generate_weyl_group(cfg.bichar, rs);
        for (const auto& w : group)
            CHECK(w.sign == (w.word.size() % 2 ? -1 : 1));
        // sgn is multiplicative: sign of product = product of signs
        std::map<std::vector<std::vector<int>>, int> by_matrix;
        for (const auto& w : group) by_matrix[w.matrix] = w.sign;
        for (size_t a = 0; a < group.size(); a += 3)
            for (size_t b = 0; b < group.size(); b += 5) {
                std::vector<std::vector<int>> prod(group[a].matrix.size(),
                                                   std::vector<int>(group[a].matrix.size(), 0));
                for (size_t i = 0; i < prod.size(); ++i)
                    for (size_t k = 0; k < prod.size(); ++k)
                        for (size_t j = 0; j < prod.size(); ++j)
                            prod[i][j] += group[a].matrix[i][k] * group[b].matrix[k][j];
                CHECK(by_matrix.at(prod) == group[a].sign * group[b].sign);
            }
    }
}

TEST_CASE("r_beta values") {
    set_cyclotomic_order(6);
    const auto a2 = build_catalog("pibar1", {.cartan = "A2"});
    const auto rs2 = compute_roots(a2.bichar);
    CHECK(r_beta(a2.bichar, rs2, Weight{1, 0}) == 1); // simple roots give m = 1
    CHECK(r_beta(a2.bichar, rs2, Weight{0, 1}) == 1);
    CHECK(r_beta(a2.bichar, rs2, Weight{1, 1}) == 2);

    const auto p5 = build_catalog("pibar5");
    const auto rs5 = compute_roots(p5.bichar);
    CHECK(r_beta(p5.bichar, rs5, Weight{1, 0}) == 1);
    // hrho(a1+2a2) = q^2 zeta^2, q_beta = zeta q^-2: the unique exponent is -1
    CHECK(r_beta(p5.bichar, rs5, Weight{1, 2}) == -1);
}

TEST_CASE("dot action is a group action") {
    set_cyclotomic_order(6);
    const auto b11 = build_catalog("pibar2.ii", {.m = 1, .n = 1});
    const auto rs = compute_roots(b11.bichar);
    const auto group = generate_weyl_group(b11.bichar, rs);
    const auto lam = WeightCharacter::from_lambda_values(
        {Monomial::parse("q^-3"), Monomial::parse("q")});

    std::map<std::vector<std::vector<int>>, Weight> dots;
    for (const auto& w : group) dots[w.matrix] = dot_zero(b11.bichar, rs, lam, w);
    // g . (w . 0) = (g w) . 0 for every generator g and element w
    for (const auto& w : group)
        for (const auto* r : rs.real_positive()) {
            const WeylElement g = reflection(b11.bichar, rs, r->beta);
            std::vector<std::vector<int>> gw(g.matrix.size(),
                                             std::vector<int>(g.matrix.size(), 0));
            for (size_t i = 0; i < gw.size(); ++i)
                for (size_t k = 0; k < gw.size(); ++k)
                    for (size_t j = 0; j < gw.size(); ++j)
                        gw[i][j] += g.matrix[i][k] * w.matrix[k][j];
            CHECK(dots.at(gw) == dot_apply(b11.bichar, rs, lam, r->beta, dots.at(w.matrix)));
        }
}

TEST_CASE("dot orbit examples and distinctness") {
    set_cyclotomic_order(6);
    // A1 with n = t: s . 0 = -(t+1) alpha
    const auto a1 = build_catalog("pibar1", {.cartan = "A1"});
    const auto rs1 = compute_roots(a1.bichar);
    for (long long t = 0; t <= 5; ++t) {
        const auto lam = WeightCharacter::from_lambda_values({Monomial::q(2 * t)});
        const auto orbit = dot_zero_orbit(a1.bichar, rs1, lam, generate_weyl_group(a1.bichar, rs1));
        REQUIRE(orbit.size() == 2);
        for (const auto& p : orbit) {
            if (p.element.is_identity()) {
                CHECK(p.dot0 == Weight{0});
                CHECK(p.sign == 1);
            } else {
                CHECK(p.dot0 == Weight{static_cast<int>(-(t + 1))});
                CHECK(p.sign == -1);
            }
        }
    }

    // -w.0 lands in the positive cone away from 0 for w != e
    const auto p5 = build_catalog("pibar5");
    const auto rs5 = compute_roots(p5.bichar);
    const auto lam5 = WeightCharacter::from_lambda_values(
        {Monomial::q(2), Monomial::zeta(2).pow(4) * Monomial::q(-3)});
    const auto orbit = dot_zero_orbit(p5.bichar, rs5, lam5, generate_weyl_group(p5.bichar, rs5));
    std::set<Weight> seen;
    for (const auto& p : orbit) {
        CHECK(seen.insert(p.dot0).second);
        if (!p.element.is_identity()) {
            CHECK(is_nonnegative(-p.dot0));
            CHECK_FALSE(is_zero(p.dot0));
        }
    }
    CHECK(orbit.size() == 4);
}

TEST_CASE("n_beta requires an integer exponent") {
    set_cyclotomic_order(6);
    const auto a1 = build_catalog("pibar1", {.cartan = "A1"});
    const auto rs = compute_roots(a1.bichar);
    const auto good = WeightCharacter::from_lambda_values({Monomial::q(6)});
    CHECK(n_beta(a1.bichar, rs, good, Weight{1}) == 3);
    const auto trivial = WeightCharacter::trivial(1);
    CHECK(n_beta(a1.bichar, rs, trivial, Weight{1}) == 0);
    const auto bad = WeightCharacter::from_lambda_values({Monomial::q(3)});
    CHECK_THROWS_AS(n_beta(a1.bichar, rs, bad, Weight{1}), no_integer_exponent_error);
}

TEST_CASE("simple real system and hatdelta") {
    set_cyclotomic_order(6);
    const auto a2 = build_catalog("pibar1", {.cartan = "A2"});
    const auto rs2 = compute_roots(a2.bichar);
    CHECK(simple_real_system(rs2) == std::vector<Weight>{{0, 1}, {1, 0}});
    CHECK(hatdelta(rs2) == Weight{2, 2});

    const auto p3 = build_catalog("pibar3.i");
    const auto rs3 = compute_roots(p3.bichar);
    const auto base3 = simple_real_system(rs3);
    CHECK(std::set<Weight>(base3.begin(), base3.end()) ==
          std::set<Weight>{{1, 0, 0}, {1, 2, 1}, {0, 0, 1}});

    const auto b11 = build_catalog("pibar2.ii", {.m = 1, .n = 1});
    const auto rsb = compute_roots(b11.bichar);
    const auto base_b = simple_real_system(rsb);
    CHECK(std::set<Weight>(base_b.begin(), base_b.end()) == std::set<Weight>{{0, 1}, {1, 1}});

    // colfcW(4): s_a(hatdelta) = hatdelta - 2a on base elements, and
    // w -> w(hatdelta) is injective
    for (const char* fam : {"pibar1", "pibar3.i"}) {
        CatalogParams p;
        if (std::string(fam) == "pibar1") p.cartan = "B2";
        const auto cfg = build_catalog(fam, p);
        const auto rs = compute_roots(cfg.bichar);
        const Weight delta = hatdelta(rs);
        for (const auto& a : simple_real_system(rs)) {
            const WeylElement s = reflection(cfg.bichar, rs, a);
            CHECK(s.apply(delta) == delta - 2 * a);
        }
        std::set<Weight> images;
        for (const auto& w : generate_weyl_group(cfg.bichar, rs))
            CHECK(images.insert(w.apply(delta)).second);
    }

    // degenerate functional
    const std::vector<long> bad_f{1, -1};
    CHECK_THROWS_AS(simple_real_system(rsb, &bad_f), invalid_input_error);
}

TEST_CASE("group size cap") {
    set_cyclotomic_order(6);
    const auto b2 = build_catalog("pibar1", {.cartan = "B2"});
    const auto rs = compute_roots(b2.bichar);
    CHECK_THROWS_AS(generate_weyl_group(b2.bichar, rs, 3), cap_exceeded_error);
}
