#include <coha/kac.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace coha;

namespace {
dim_vector dv(std::vector<std::int64_t> e) { return dim_vector(std::move(e)); }
}

TEST_CASE("qpoly arithmetic") {
    qpoly qm1({integer(-1), integer(1)});  // q - 1
    qpoly q2m1({integer(-1), integer(0), integer(1)});  // q^2 - 1
    CHECK(q2m1.divexact(qm1) == qpoly({integer(1), integer(1)}));
    CHECK(qpoly_gcd(q2m1, qm1) == qm1);
    CHECK(qm1.eval(5) == 4);
    CHECK(qm1.subst_power(3) == qpoly({integer(-1), integer(0), integer(0), integer(1)}));
    CHECK_THROWS_AS(q2m1.divexact(qpoly({integer(0), integer(0), integer(1)})), std::domain_error);

    qfrac f(qpoly({integer(0), integer(0), integer(1)}), qm1);  // q^2/(q-1)
    qfrac g = f - qfrac::from_poly(qpoly({integer(1), integer(1)}));  // q^2/(q-1) - (q+1) = 1/(q-1)
    CHECK(g == qfrac(qpoly::constant(1), qm1));
}

TEST_CASE("brute-force Kac counts") {
    CHECK(kac_bruteforce(jordan_quiver(), dv({1}), 2) == 2);
    CHECK(kac_bruteforce(a2_quiver(), dv({1, 1}), 2) == 1);
    CHECK(kac_bruteforce(a2_quiver(), dv({2, 0}), 2) == 0);
    CHECK(kac_bruteforce(a2_quiver(), dv({2, 0}), 3) == 0);
}

TEST_CASE("Hua polynomials for the Jordan quiver are q") {
    auto polys = kac_hua_upto(jordan_quiver(), dv({3}));
    qpoly just_q = qpoly::monomial(1);
    CHECK(polys.at(dv({1})) == just_q);
    CHECK(polys.at(dv({2})) == just_q);
    CHECK(polys.at(dv({3})) == just_q);
}

TEST_CASE("Hua polynomials for A2 are root indicators") {
    auto polys = kac_hua_upto(a2_quiver(), dv({2, 2}));
    CHECK(polys.at(dv({1, 0})) == qpoly::constant(1));
    CHECK(polys.at(dv({0, 1})) == qpoly::constant(1));
    CHECK(polys.at(dv({1, 1})) == qpoly::constant(1));
    for (const auto& d : {dv({2, 0}), dv({2, 1}), dv({1, 2}), dv({2, 2})}) {
        auto it = polys.find(d);
        CHECK((it == polys.end() || it->second.is_zero()));
    }
}

TEST_CASE("dual oracle: Hua agrees with brute force everywhere both run") {
    for (std::uint32_t q : {2u, 3u})
        for (std::int64_t d = 1; d <= 3; ++d)
            CHECK(kac_hua(jordan_quiver(), dv({d})).eval(q) == kac_bruteforce(jordan_quiver(), dv({d}), q));
    for (std::uint32_t q : {2u, 3u})
        for (std::int64_t d1 = 0; d1 <= 2; ++d1)
            for (std::int64_t d2 = 0; d2 <= 2; ++d2) {
                if (d1 + d2 == 0) continue;
                CHECK(kac_hua(a2_quiver(), dv({d1, d2})).eval(q) ==
                      kac_bruteforce(a2_quiver(), dv({d1, d2}), q));
            }
    // Kronecker (1,1): the value is whatever both oracles agree on
    for (std::uint32_t q : {2u, 3u})
        CHECK(kac_hua(kronecker_quiver(), dv({1, 1})).eval(q) ==
              kac_bruteforce(kronecker_quiver(), dv({1, 1}), q));
}

TEST_CASE("orbit budget is enforced") {
    kac_options opt;
    opt.max_orbit_space = 10;
    CHECK_THROWS_AS(kac_bruteforce(jordan_quiver(), dv({2}), 3, opt), budget_exceeded_error);
}
