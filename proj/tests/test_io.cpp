#include <coha/io.hpp>
#include <coha/report.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <memory>

using namespace coha;

namespace {
dim_vector dv(std::vector<std::int64_t> e) { return dim_vector(std::move(e)); }
}

TEST_CASE("quiver JSON round trip") {
    quiver q = affine_dn_quiver(4);
    quiver back = quiver_from_json(quiver_to_json(q));
    CHECK(back.vertices() == q.vertices());
    REQUIRE(back.n_arrows() == q.n_arrows());
    for (int a = 0; a < q.n_arrows(); ++a) {
        CHECK(back.arrow_at(a).name == q.arrow_at(a).name);
        CHECK(back.arrow_at(a).src == q.arrow_at(a).src);
        CHECK(back.arrow_at(a).tgt == q.arrow_at(a).tgt);
    }
}

TEST_CASE("quiver JSON validation") {
    CHECK_THROWS_AS(quiver_from_json(json::parse(R"({"vertices": ["a"]})")), parse_error);
    CHECK_THROWS_AS(
        quiver_from_json(json::parse(R"({"vertices": ["a"], "arrows": [{"name":"x","src":"a","tgt":"b"}]})")),
        parse_error);
    CHECK_THROWS_AS(load_quiver("/nonexistent/file.json"), parse_error);
}

TEST_CASE("potential JSON: validation and round trip") {
    auto q = std::make_shared<const quiver>(build_double(a2_quiver()));
    json good = json::parse(R"([{"coeff": "1/2", "cycle": ["a", "a*"]}])");
    potential w = potential_from_json(q, good);
    CHECK(w.sum().n_terms() == 1);
    CHECK(potential_from_json(q, potential_to_json(w)).sum() == w.sum());

    // non-composable
    json bad1 = json::parse(R"([{"coeff": "1", "cycle": ["a", "a"]}])");
    CHECK_THROWS_AS(potential_from_json(q, bad1), parse_error);
    // composable but not a cycle
    json bad2 = json::parse(R"([{"coeff": "1", "cycle": ["a"]}])");
    CHECK_THROWS_AS(potential_from_json(q, bad2), parse_error);
    // junk coefficient
    json bad3 = json::parse(R"([{"coeff": "x", "cycle": ["a", "a*"]}])");
    CHECK_THROWS_AS(potential_from_json(q, bad3), parse_error);
}

TEST_CASE("presentation JSON") {
    json j = json::parse(R"({
      "generators": [
        {"label": "G1", "degree": [1, 0]},
        {"label": "G2", "degree": [0, 1], "multiplicity": 2}
      ],
      "pairing": [[2, -1], [-1, 2]]
    })");
    lie_presentation p = presentation_from_json(j);
    CHECK(p.generators.size() == 2);
    CHECK(p.generators[1].multiplicity == 2);
    CHECK(p.pairing.evaluate(dv({1, 0}), dv({0, 1})) == -1);
    CHECK_FALSE(p.explicit_pairs.has_value());

    json j2 = j;
    j2["serre_pairs"] = json::array({json::array({"G1", "G2"})});
    lie_presentation p2 = presentation_from_json(j2);
    REQUIRE(p2.explicit_pairs.has_value());
    CHECK(p2.explicit_pairs->size() == 1);

    json bad = json::parse(R"({"generators": []})");
    CHECK_THROWS_AS(presentation_from_json(bad), parse_error);
}

TEST_CASE("character JSON round trip") {
    character c(dv({2, 2}), 0, 6);
    c.add(dv({1, 0}), 0, rational(1));
    c.add(dv({1, 1}), 4, rational(-3, 7));
    character back = character_from_json(character_to_json(c), dv({2, 2}), 0, 6);
    CHECK(back == c);
}

TEST_CASE("structure table JSON round trip") {
    lie_presentation p;
    p.generators = {{"G1", dv({1, 0}), 0, 1}, {"G2", dv({0, 1}), 0, 1}};
    p.pairing = symmetrized_euler(a2_quiver());
    auto g = serre_quotient(p, dv({2, 2}));
    auto table = structure_constants(g);
    auto back = structure_table_from_json(structure_table_to_json(table));
    CHECK(structure_table_to_json(back) == structure_table_to_json(table));
    // and it still drives a graded_lie_data
    auto g2 = from_structure_table(back);
    CHECK(g2.basis.size() == g.basis.size());
    CHECK(g2.brackets.size() == g.brackets.size());
}

TEST_CASE("reports carry schema and witnesses") {
    run_report rep("unit-test");
    rep.config()["seed"] = 7;
    rep.add_check("alpha", true);
    rep.add_check("beta", false, {{"pair", "(1,2)"}}, json("mismatch at (1,2)"));
    CHECK(rep.any_failed());
    json out = rep.finalize();
    CHECK(out["schema_version"] == report_schema_version);
    CHECK(out["checks"].size() == 2);
    CHECK(out["checks"][1]["status"] == "fail");
    CHECK(out["checks"][1]["witness"] == "mismatch at (1,2)");
    CHECK(out.contains("timing"));
}
