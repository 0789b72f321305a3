#include <coha/current_algebra.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace coha;

namespace {
dim_vector dv(std::vector<std::int64_t> e) { return dim_vector(std::move(e)); }

graded_lie_data a2_data() {
    lie_presentation p;
    p.generators = {{"G1", dv({1, 0}), 0, 1}, {"G2", dv({0, 1}), 0, 1}};
    p.pairing = symmetrized_euler(a2_quiver());
    return serre_quotient(p, dv({2, 2}));
}
graded_lie_data a3_data() {
    lie_presentation p;
    p.generators = {{"G1", dv({1, 0, 0}), 0, 1}, {"G2", dv({0, 1, 0}), 0, 1}, {"G3", dv({0, 0, 1}), 0, 1}};
    p.pairing = symmetrized_euler(a3_quiver());
    return serre_quotient(p, dv({2, 2, 2}));
}
}  // namespace

TEST_CASE("twisted bracket formula") {
    auto g = a2_data();
    twist_weights w(std::vector<std::int64_t>{1, 1});
    int i1 = g.by_degree.at(dv({1, 0}))[0], i2 = g.by_degree.at(dv({0, 1}))[0];
    int i12 = g.by_degree.at(dv({1, 1}))[0];

    // [G1 u, G2 u] = (1/4) [G1, G2] u^2
    auto br = twisted_bracket(g, w, current_element::term(i1, 1), current_element::term(i2, 1));
    rational c12 = g.bracket_of(i1, i2)[0].second;
    current_element expect;
    expect.add(i12, 2, rational(1, 4) * c12);
    CHECK(br == expect);

    // exponents 0: the ordinary bracket
    auto br0 = twisted_bracket(g, w, current_element::term(i1, 0), current_element::term(i2, 0));
    current_element ord;
    ord.add(i12, 0, c12);
    CHECK(br0 == ord);
    CHECK(br0 == trivial_bracket(g, current_element::term(i1, 0), current_element::term(i2, 0)));

    // [G1 u, G1] = (1/2) [G1,G1] u = 0
    CHECK(twisted_bracket(g, w, current_element::term(i1, 1), current_element::term(i1, 0)).is_zero());
}

TEST_CASE("trivial bracket is the Q[u]-linear extension") {
    auto g = a2_data();
    int i1 = g.by_degree.at(dv({1, 0}))[0], i2 = g.by_degree.at(dv({0, 1}))[0];
    int i12 = g.by_degree.at(dv({1, 1}))[0];
    auto br = trivial_bracket(g, current_element::term(i1, 1), current_element::term(i2, 1));
    current_element expect;
    expect.add(i12, 2, g.bracket_of(i1, i2)[0].second);
    CHECK(br == expect);
}

TEST_CASE("u multiplication is a derivation of the twisted bracket only") {
    auto g = a2_data();
    twist_weights w(std::vector<std::int64_t>{1, 1});
    int i1 = g.by_degree.at(dv({1, 0}))[0], i2 = g.by_degree.at(dv({0, 1}))[0];

    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            current_element x = current_element::term(i1, p), y = current_element::term(i2, q);
            CHECK(u_action(twisted_bracket(g, w, x, y)) ==
                  twisted_bracket(g, w, u_action(x), y) + twisted_bracket(g, w, x, u_action(y)));
        }

    // witness of failure for the trivial bracket: [G1 u, G2] vs expansion
    current_element x = current_element::term(i1, 1), y = current_element::term(i2, 0);
    current_element lhs = u_action(trivial_bracket(g, x, y));
    current_element rhs = trivial_bracket(g, u_action(x), y) + trivial_bracket(g, x, u_action(y));
    CHECK_FALSE(lhs == rhs);
}

TEST_CASE("partial_u formula") {
    auto g = a2_data();
    twist_weights w(std::vector<std::int64_t>{1, 1});
    int i1 = g.by_degree.at(dv({1, 0}))[0];
    // G1 u^2 -> 2 G1 u for |d| = 1
    current_element e = partial_u(g, w, current_element::term(i1, 2));
    current_element expect;
    expect.add(i1, 1, 2);
    CHECK(e == expect);

    // |d| = 3: with r = (1,2), |(1,1)| = 3 and x u^2 -> 6 x u
    twist_weights w2(std::vector<std::int64_t>{1, 2});
    int i12 = g.by_degree.at(dv({1, 1}))[0];
    current_element e2 = partial_u(g, w2, current_element::term(i12, 2));
    current_element expect2;
    expect2.add(i12, 1, 6);
    CHECK(e2 == expect2);

    // u-power 0 is annihilated
    CHECK(partial_u(g, w, current_element::term(i1, 0)).is_zero());
}

TEST_CASE("heisenberg sweep") {
    auto g = a2_data();
    twist_weights w(std::vector<std::int64_t>{1, 1});
    auto rep = heisenberg_check(g, w, 3);
    for (const auto& item : rep.items) {
        INFO(item.name << " " << item.witness);
        CHECK(item.pass);
    }

    // [del, u.](G1 u^p) = |d1| G1 u^p for all p <= 3
    int i1 = g.by_degree.at(dv({1, 0}))[0];
    for (int p = 0; p <= 3; ++p) {
        current_element x = current_element::term(i1, p);
        current_element comm = partial_u(g, w, u_action(x)) - u_action(partial_u(g, w, x));
        CHECK(comm == rational(1) * x);
    }

    // r = (2,3): central charges 2, 3, 5 on the three root spaces
    twist_weights w23(std::vector<std::int64_t>{2, 3});
    std::map<dim_vector, integer> charges{{dv({1, 0}), 2}, {dv({0, 1}), 3}, {dv({1, 1}), 5}};
    for (const auto& [d, expect] : charges) {
        int i = g.by_degree.at(d)[0];
        current_element x = current_element::term(i, 2);
        current_element comm = partial_u(g, w23, u_action(x)) - u_action(partial_u(g, w23, x));
        CHECK(comm == rational(expect) * x);
    }

    auto rep23 = heisenberg_check(g, w23, 3);
    CHECK(rep23.all_pass);
}

TEST_CASE("rescale map") {
    auto g = a2_data();
    // |d1| = 2 under r = (2,3): G1 u -> (1/2) G1 u
    twist_weights w(std::vector<std::int64_t>{2, 3});
    int i1 = g.by_degree.at(dv({1, 0}))[0];
    current_element e = rescale_map(g, w, current_element::term(i1, 1));
    current_element expect;
    expect.add(i1, 1, rational(1, 2));
    CHECK(e == expect);

    // p = 0 is fixed
    CHECK(rescale_map(g, w, current_element::term(i1, 0)) == current_element::term(i1, 0));

    // transport identity on random in-cutoff pairs
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(g.basis.size()) - 1), pw(0, 3), coeff(-3, 3);
    int done = 0;
    while (done < 100) {
        int i = pick(rng), j = pick(rng);
        if (!g.pair_in_cutoff(i, j)) continue;
        current_element x = current_element::term(i, pw(rng), coeff(rng) * 2 + 1);
        current_element y = current_element::term(j, pw(rng), coeff(rng) * 2 + 1);
        CHECK(rescale_map(g, w, trivial_bracket(g, x, y)) ==
              twisted_bracket(g, w, rescale_map(g, w, x), rescale_map(g, w, y)));
        ++done;
    }
}

TEST_CASE("full identity sweeps for A2 and A3 with both weight choices") {
    {
        auto g = a2_data();
        for (auto r : {std::vector<std::int64_t>{1, 1}, std::vector<std::int64_t>{2, 3}}) {
            twist_weights w(r);
            auto rep = current_algebra_check(g, w, 3);
            for (const auto& item : rep.items) {
                INFO(item.name << " " << item.witness);
                CHECK(item.pass);
            }
            CHECK(heisenberg_check(g, w, 3).all_pass);
        }
    }
    {
        auto g = a3_data();
        for (auto r : {std::vector<std::int64_t>{1, 1, 1}, std::vector<std::int64_t>{2, 3, 4}}) {
            twist_weights w(r);
            auto rep = current_algebra_check(g, w, 2);
            for (const auto& item : rep.items) {
                INFO(item.name << " " << item.witness);
                CHECK(item.pass);
            }
        }
    }
}

TEST_CASE("Koszul signs: sweeps pass on a super algebra with an odd generator") {
    lie_presentation p;
    p.generators = {{"x", dv({1}), 1, 1}};
    p.pairing = int_bilinear_form({{integer(0)}});
    p.no_relations = true;
    auto g = serre_quotient(p, dv({3}));
    twist_weights w(std::vector<std::int64_t>{2});
    auto rep = current_algebra_check(g, w, 2);
    for (const auto& item : rep.items) {
        INFO(item.name << " " << item.witness);
        CHECK(item.pass);
    }
    CHECK(heisenberg_check(g, w, 2).all_pass);

    // [x u, x u] is a genuine nonzero odd square, scaled by |1|^2/|2|^2 = 1/4
    int ix = g.by_degree.at(dv({1}))[0];
    int ixx = g.by_degree.at(dv({2}))[0];
    auto br = twisted_bracket(g, w, current_element::term(ix, 1), current_element::term(ix, 1));
    current_element expect;
    expect.add(ixx, 2, rational(1, 4));
    CHECK(br == expect);
}

TEST_CASE("errors") {
    auto g = a2_data();
    twist_weights w(std::vector<std::int64_t>{1, 1});
    int i12 = g.by_degree.at(dv({1, 1}))[0];
    // (1,1) + (1,1) = (2,2) is inside the cutoff, but (1,1)+(1,1)+(1,1) is not
    auto ok = twisted_bracket(g, w, current_element::term(i12, 0), current_element::term(i12, 0));
    CHECK(ok.is_zero());
    auto g_small = [&] {
        lie_presentation p;
        p.generators = {{"G1", dv({1, 0}), 0, 1}, {"G2", dv({0, 1}), 0, 1}};
        p.pairing = symmetrized_euler(a2_quiver());
        return serre_quotient(p, dv({2, 2}));
    }();
    // bracket of two (1,1) elements against a cutoff that excludes (2,2)
    graded_lie_data trimmed = g_small;
    trimmed.cutoff = dv({1, 1});
    CHECK_THROWS_AS(
        twisted_bracket(trimmed, w, current_element::term(i12, 0), current_element::term(i12, 0)),
        cutoff_exceeded_error);
    CHECK_THROWS_AS(twist_weights(std::vector<std::int64_t>{1, -1}), mixed_signs_error);
    CHECK_THROWS_AS(twist_weights(std::vector<std::int64_t>{1, 0}), mixed_signs_error);
    CHECK_THROWS_AS(current_element::term(0, -1), std::invalid_argument);
}
