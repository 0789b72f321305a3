#include <coha/counting.hpp>
#include <coha/rep_fq.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <memory>

using namespace coha;

namespace {
dim_vector dv(std::vector<std::int64_t> e) { return dim_vector(std::move(e)); }

quiver_rep_fq vertex_simple(const std::shared_ptr<const quiver>& q, const prime_field& F, int vertex) {
    dim_vector d = dim_vector::zero(q->n_vertices());
    d[vertex] = 1;
    return zero_rep(q, F, d);
}
}  // namespace

TEST_CASE("prime field basics") {
    CHECK_THROWS_AS(prime_field(4), std::invalid_argument);
    CHECK_THROWS_AS(prime_field(1), std::invalid_argument);
    prime_field F(7);
    CHECK(F.mul(3, 5) == 1);
    CHECK(F.inv(3) == 5);
    CHECK(F.pow(F.primitive_root(), 6) == 1);
    CHECK(F.pow(F.primitive_root(), 3) != 1);
    CHECK(F.pow(F.primitive_root(), 2) != 1);
}

TEST_CASE("gl_order") {
    CHECK(gl_order(dv({2}), 2) == 6);
    CHECK(gl_order(dv({1, 1}), 3) == 4);
    CHECK(gl_order(dv({0}), 5) == 1);
    CHECK(gl_order(dv({3}), 2) == 168);
}

TEST_CASE("moment map") {
    prime_field F(5);
    // Jordan, d = 1: scalars commute
    auto dj = std::make_shared<const quiver>(build_double(jordan_quiver()));
    for (std::uint32_t a = 0; a < 5; ++a)
        for (std::uint32_t b = 0; b < 5; ++b) {
            quiver_rep_fq rep = zero_rep(dj, F, dv({1}));
            rep.mats[static_cast<std::size_t>(dj->arrow_index("a"))].at(0, 0) = a;
            rep.mats[static_cast<std::size_t>(dj->arrow_index("a*"))].at(0, 0) = b;
            CHECK(moment_map_vanishes(rep));
        }

    // A2, d = (1,1): components (-ba, ab)
    auto da = std::make_shared<const quiver>(build_double(a2_quiver()));
    quiver_rep_fq rep = zero_rep(da, F, dv({1, 1}));
    rep.mats[static_cast<std::size_t>(da->arrow_index("a"))].at(0, 0) = 2;
    rep.mats[static_cast<std::size_t>(da->arrow_index("a*"))].at(0, 0) = 3;
    auto comp = moment_map(rep);
    CHECK(comp[0].at(0, 0) == F.neg(F.mul(3, 2)));
    CHECK(comp[1].at(0, 0) == F.mul(2, 3));

    // zero representation maps to zero
    CHECK(moment_map_vanishes(zero_rep(da, F, dv({2, 2}))));
}

TEST_CASE("count_preprojective examples") {
    CHECK(count_preprojective(jordan_quiver(), dv({1}), 3, count_mode::fast) == 9);
    CHECK(count_preprojective(jordan_quiver(), dv({1}), 3, count_mode::naive) == 9);
    CHECK(count_preprojective(jordan_quiver(), dv({2}), 2, count_mode::naive) == 88);
    CHECK(count_preprojective(jordan_quiver(), dv({2}), 2, count_mode::fast) == 88);
    // solutions of ab = 0 in F_2^2: 2q - 1 = 3
    CHECK(count_preprojective(a2_quiver(), dv({1, 1}), 2, count_mode::naive) == 3);
    CHECK(count_preprojective(a2_quiver(), dv({1, 1}), 2, count_mode::fast) == 3);
}

TEST_CASE("fast and naive counts agree on the corpus grid") {
    for (std::uint32_t q : {2u, 3u})
        for (std::int64_t d = 1; d <= 2; ++d)
            CHECK(count_preprojective(jordan_quiver(), dv({d}), q, count_mode::fast) ==
                  count_preprojective(jordan_quiver(), dv({d}), q, count_mode::naive));
    for (std::uint32_t q : {2u, 3u, 5u})
        CHECK(count_preprojective(a2_quiver(), dv({1, 1}), q, count_mode::fast) ==
              count_preprojective(a2_quiver(), dv({1, 1}), q, count_mode::naive));
}

TEST_CASE("parallel counting is deterministic") {
    count_options serial, parallel;
    serial.jobs = 1;
    parallel.jobs = 4;
    CHECK(count_preprojective(jordan_quiver(), dv({2}), 3, count_mode::fast, serial) ==
          count_preprojective(jordan_quiver(), dv({2}), 3, count_mode::fast, parallel));
}

TEST_CASE("budget is enforced") {
    count_options opt;
    opt.max_configurations = 100;
    CHECK_THROWS_AS(count_preprojective(jordan_quiver(), dv({2}), 3, count_mode::naive, opt),
                    budget_exceeded_error);
    CHECK_THROWS_AS(count_preprojective(jordan_quiver(), dv({3}), 5, count_mode::fast, opt),
                    budget_exceeded_error);
}

TEST_CASE("hom and ext1") {
    prime_field F(5);
    auto q = std::make_shared<const quiver>(a2_quiver());
    auto s1 = vertex_simple(q, F, 0), s2 = vertex_simple(q, F, 1);
    CHECK(hom_dim(s1, s1) == 1);
    CHECK(hom_dim(s1, s2) == 0);
    CHECK(ext1_dim(s1, s2) == 1);  // one arrow 1 -> 2
    CHECK(ext1_dim(s2, s1) == 0);
    CHECK(ext1_dim(s1, s1) == 0);

    // the indecomposable (1,1)-representation has End = k; S2 is its
    // submodule and S1 its simple quotient
    quiver_rep_fq m = zero_rep(q, F, dv({1, 1}));
    m.mats[0].at(0, 0) = 1;
    CHECK(hom_dim(m, m) == 1);
    CHECK(hom_dim(s2, m) == 1);
    CHECK(hom_dim(m, s2) == 0);
    CHECK(hom_dim(m, s1) == 1);
    CHECK(hom_dim(s1, m) == 0);
}

TEST_CASE("ext quiver of vertex simples recovers the quiver") {
    prime_field F(5);
    for (const quiver& base :
         {jordan_quiver(), a2_quiver(), a3_quiver(), kronecker_quiver(), affine_dn_quiver(4)}) {
        auto q = std::make_shared<const quiver>(base);
        std::vector<quiver_rep_fq> simples;
        for (int i = 0; i < base.n_vertices(); ++i) simples.push_back(vertex_simple(q, F, i));
        auto res = ext_quiver(simples);
        CHECK(res.lemma_pass);
        REQUIRE(res.ext_q.n_vertices() == base.n_vertices());
        CHECK(res.ext_q.n_arrows() == base.n_arrows());
        // arrow multiplicities match
        for (int i = 0; i < base.n_vertices(); ++i)
            for (int j = 0; j < base.n_vertices(); ++j) {
                int orig = 0, rec = 0;
                for (const arrow& a : base.arrows())
                    if (a.src == i && a.tgt == j) ++orig;
                for (const arrow& a : res.ext_q.arrows())
                    if (a.src == i && a.tgt == j) ++rec;
                CHECK(orig == rec);
            }
        // zeta is the identity on vertex simples
        for (int i = 0; i < base.n_vertices(); ++i)
            CHECK(res.zeta(dim_vector::unit(base.n_vertices(), i)) == dim_vector::unit(base.n_vertices(), i));
    }
}

TEST_CASE("ext quiver of two Jordan simples over F_5") {
    prime_field F(5);
    auto q = std::make_shared<const quiver>(jordan_quiver());
    quiver_rep_fq sl = zero_rep(q, F, dv({1})), sm = zero_rep(q, F, dv({1}));
    sl.mats[0].at(0, 0) = 2;
    sm.mats[0].at(0, 0) = 3;
    auto res = ext_quiver({sl, sm});
    CHECK(res.lemma_pass);
    CHECK(res.ext_q.n_vertices() == 2);
    CHECK(res.ext_q.n_arrows() == 2);  // one loop at each vertex, none across
    for (const arrow& a : res.ext_q.arrows()) CHECK(a.src == a.tgt);
}

TEST_CASE("ext quiver flags non-simple or isomorphic inputs") {
    prime_field F(5);
    auto q = std::make_shared<const quiver>(jordan_quiver());
    quiver_rep_fq s = zero_rep(q, F, dv({1})), same = zero_rep(q, F, dv({1}));
    CHECK_THROWS_AS(ext_quiver({s, same}), std::invalid_argument);
    quiver_rep_fq big = zero_rep(q, F, dv({2}));  // End is 4-dimensional
    CHECK_THROWS_AS(ext_quiver({big}), std::invalid_argument);
}

TEST_CASE("nilpotent counting") {
    CHECK(count_nilpotent(jordan_quiver(), dv({1}), 2) == 1);
    CHECK(count_nilpotent(jordan_quiver(), dv({2}), 2) == 10);
    CHECK(count_nilpotent(a2_quiver(), dv({0, 0}), 3) == 1);

    // nilpotent <= preprojective on the corpus rows
    for (std::uint32_t q : {2u, 3u})
        for (std::int64_t d = 1; d <= 2; ++d)
            CHECK(count_nilpotent(jordan_quiver(), dv({d}), q) <=
                  count_preprojective(jordan_quiver(), dv({d}), q, count_mode::fast));
    for (std::uint32_t q : {2u, 3u, 5u})
        CHECK(count_nilpotent(a2_quiver(), dv({1, 1}), q) <=
              count_preprojective(a2_quiver(), dv({1, 1}), q, count_mode::fast));
}

TEST_CASE("count rows carry exact stack counts") {
    auto row = make_count_row(dv({2}), 2, count_preprojective(jordan_quiver(), dv({2}), 2, count_mode::fast));
    CHECK(row.raw == 88);
    CHECK(row.gl == 6);
    CHECK(row.stack == rational(44, 3));
    CHECK(rational(row.raw) == row.stack * rational(row.gl));
}
