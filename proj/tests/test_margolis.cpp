#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "a1mod/catalog.hpp"
#include "a1mod/functors.hpp"
#include "a1mod/margolis.hpp"

using namespace a1mod;

TEST_CASE("Q operators")
{
    GradedModule f2 = make_F2();
    for (int k = 0; k <= 1; ++k)
        CHECK(q_matrix(f2, k, 0).is_zero());

    // Q1 = Sq1Sq2 + Sq2Sq1 and Q1 x = x^4 on F2[x]
    GradedModule p1 = make("P1", AlgebraName::A1, -2, 20);
    CHECK(q_degree(Algebra::A1(), 1) == 3);
    CHECK(q_matrix(p1, 1, 1).get(0, 0));
    CHECK(!q_matrix(p1, 1, 2).get(0, 0));
    CHECK(q_matrix(p1, 0, 1).get(0, 0));

    for (const char* key : {"P1", "J", "R", "M2", "P3"}) {
        GradedModule m = make(key, AlgebraName::A1, -2, 24);
        for (int k = 0; k <= 1; ++k) {
            int q = q_degree(Algebra::A1(), k);
            for (int d = -2; d + 2 * q <= 24; ++d)
                CHECK((q_matrix(m, k, d + q) * q_matrix(m, k, d)).is_zero());
        }
    }
}

TEST_CASE("Margolis homology")
{
    auto h = margolis_homology(make("P1", AlgebraName::A1, -2, 24), 1);
    CHECK(h.dim(2) == 1);
    CHECK(h.total_trusted() == 1);

    for (int i = 0; i <= 3; ++i) {
        std::string key = "S^" + std::to_string(i) + ".R";
        auto hr = margolis_homology(make(key, AlgebraName::A1, -2, 24), 0);
        CHECK(hr.dim(i - 1) == 1);
        CHECK(hr.total_trusted() == 1);
    }

    GradedModule a = regular_representation(Algebra::A1());
    CHECK(margolis_homology(a, 0).total_trusted() == 0);
    CHECK(margolis_homology(a, 1).total_trusted() == 0);
}

TEST_CASE("stable freeness")
{
    CHECK(is_stably_free(regular_representation(Algebra::A1())));
    CHECK(!is_stably_free(make("P1", AlgebraName::A1, -2, 24)));
    CHECK_THROWS_AS(is_stably_free(make_laurent(-12, 12)), UnboundedBelowError);
}

TEST_CASE("reduced part")
{
    auto r = reduced_part(share(regular_representation(Algebra::A1())));
    CHECK(r.free_generator_degrees == std::vector<int>{0});
    CHECK(r.reduced->is_zero());

    GradedModule j = make_J();
    auto rj = reduced_part(share(j));
    CHECK(rj.free_generator_degrees.empty());
    CHECK(rj.reduced->dims() == j.dims());

    // free generators of P1 (x) P1: Sigma^{4i+4j}, i+j>0, and Sigma^{4i+4j+6}
    GradedModule p1 = make("P1", AlgebraName::A1, -2, 30);
    auto split = reduced_part(share(tensor(p1, p1)));
    std::map<int, int> count;
    for (int g : split.free_generator_degrees)
        ++count[g];
    std::map<int, int> want;
    for (int i = 0; i <= 8; ++i)
        for (int j = 0; j <= 8; ++j) {
            if (i + j > 0)
                ++want[4 * i + 4 * j];
            ++want[4 * i + 4 * j + 6];
        }
    for (int d = 0; d <= std::min(split.free_trusted_hi, 16); ++d)
        CHECK_MESSAGE(count[d] == want[d], "degree " << d);
    CHECK(split.free_trusted_hi >= 12);
    CHECK(count[4] == 2);
    CHECK(count[6] == 1);
    CHECK(count[8] == 3);
}

TEST_CASE("stable isomorphisms")
{
    ModulePtr j = share(make_J());
    CHECK(induces_stable_iso(identity_map(j)));
    CHECK(!induces_stable_iso(epsilon_map(24)));
    CHECK(!induces_stable_iso(eta_map(24)));

    ModulePtr p1 = share(make("P1", AlgebraName::A1, -2, 24));
    GradedModule pf = direct_sum(*p1, regular_representation(Algebra::A1()));
    CHECK(stable_class_equal(share(pf), p1));

    GradedModule p = make("P1", AlgebraName::A1, -2, 30);
    ModulePtr sq = share(tensor(p, p));
    CHECK(stable_class_equal(sq, share(make("P2", AlgebraName::A1, -2, 30))));
    CHECK(!stable_class_equal(sq, share(make("S^2.P1", AlgebraName::A1, -2, 30))));
}
