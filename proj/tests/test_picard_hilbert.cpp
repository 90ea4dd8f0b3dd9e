#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "a1mod/catalog.hpp"
#include "a1mod/functors.hpp"
#include "a1mod/hilbert.hpp"
#include "a1mod/picard.hpp"

#include <numeric>

using namespace a1mod;

namespace {

GradedModule cat(const std::string& k, int hi = 30)
{
    return make(k, AlgebraName::A1, kAutoLow, hi);
}

long det2(const std::vector<std::vector<long>>& a)
{
    return a[0][0] * a[1][1] - a[0][1] * a[1][0];
}

}  // namespace

TEST_CASE("d and t1 invariants")
{
    for (int i = 0; i <= 3; ++i) {
        std::string s = "S^" + std::to_string(i) + ".";
        CHECK(d_invariant(cat(s + "P1"), 1) == i + 2);
        CHECK(d_invariant(cat(s + "R"), 0) == i - 1);
    }
    GradedModule pf = direct_sum(cat("P0"), regular_representation(Algebra::A1()));
    CHECK(d_invariant(pf, 1) == 0);
    for (int n = 0; n <= 3; ++n)
        CHECK(t1_invariant(cat("S^3.P" + std::to_string(n), 34)) == n);
    GradedModule p1 = cat("P1");
    CHECK(t1_invariant(tensor(p1, p1)) == 2);
    CHECK(t1_invariant(localize(make_J(), 1, 30)) == 2);
}

TEST_CASE("classification")
{
    PicClass u = classify_local(cat("P0"), 1);
    CHECK(u.shift == 0);
    CHECK(u.n == 0);
    GradedModule p1 = cat("P1", 26);
    GradedModule cube = *reduced(tensor(tensor(p1, p1), p1));
    PicClass c = classify_local(cube, 1);
    CHECK(c.shift == 0);
    CHECK(c.n == 3);
    GradedModule sj = tensor(cat("S^1.R", 24), make_J());
    PicClass r = classify_local(sj, 0);
    CHECK(r.shift == 1);
    CHECK(!try_classify_local(direct_sum(cat("P0"), cat("S^1.R")), 1));
}

TEST_CASE("localization matrices")
{
    auto e = pic_localization_matrix(AlgebraName::E1);
    CHECK(e.matrix.a == std::vector<std::vector<long>>{{1, 1}, {1, 3}});
    CHECK(e.cokernel == "Z/2");
    auto a = pic_localization_matrix(AlgebraName::A1);
    CHECK(a.matrix.a == std::vector<std::vector<long>>{{1, 1, 0}, {1, 3, 0}, {0, 1, 2}});
    CHECK(a.cokernel == "Z/4");
}

TEST_CASE("Smith normal form against gcd and determinant")
{
    std::vector<std::vector<std::vector<long>>> cases{
        {{1, 1}, {1, 3}}, {{2, 4}, {6, 8}}, {{0, 3}, {6, 0}}, {{4, 6}, {10, 14}}, {{5, 0}, {0, 7}}};
    for (auto& m : cases) {
        SmithForm s = smith_normal_form(m);
        long g = 0;
        for (auto& row : m)
            for (long x : row)
                g = std::gcd(g, x);
        long d = std::abs(det2(m));
        REQUIRE(s.diagonal.size() == 2);
        CHECK(std::abs(s.diagonal[0]) == g);
        CHECK(std::abs(s.diagonal[0] * s.diagonal[1]) == d);
    }
    SmithForm one = smith_normal_form({{1, 1}, {1, 3}});
    CHECK(one.diagonal == std::vector<long>{1, 2});
    CHECK(cokernel_string(one) == "Z/2");
}

TEST_CASE("idempotents")
{
    auto f = is_idempotent(make_F2());
    CHECK(f.idempotent);
    CHECK(f.witness == IdempotentWitness::F2);
    CHECK(is_idempotent(cat("P0", 24)).witness == IdempotentWitness::P0);
    CHECK(is_idempotent(cat("S^1.R", 24)).witness == IdempotentWitness::SigmaR);
    CHECK(is_idempotent(direct_sum(cat("P0", 24), cat("S^1.R", 24))).witness == IdempotentWitness::P0PlusSigmaR);
    CHECK(!is_idempotent(cat("P1", 24)).idempotent);

    auto w = explicit_idempotence_witnesses(20);
    for (int d = w.diagonal.source().window().lo; d <= w.diagonal.source().window().hi; ++d)
        CHECK(compose(w.eps_left, w.diagonal).block(d) == compose(w.eps_right, w.diagonal).block(d));
    CHECK(induces_stable_iso(w.diagonal));
    CHECK(induces_stable_iso(w.collapse));
}

TEST_CASE("Hilbert series")
{
    CHECK(series_of(make_F2()).at(0) == 1);
    CHECK(series_of(make_F2()).at(1) == 0);
    TruncatedSeries a = series_of(regular_representation(Algebra::A1()));
    std::vector<long> want{1, 1, 1, 2, 1, 1, 1};
    for (int d = 0; d <= 6; ++d)
        CHECK(a.at(d) == want[d]);

    // 1/(1-t)
    auto geo = expand_rational(LaurentPoly::from({1}), LaurentPoly::from({1, -1}), 0, 20);
    for (int d = 0; d <= 20; ++d)
        CHECK(geo.at(d) == 1);

    // t^2/(1-t) + t^3 + t^5 + t^6 and t^3/(1-t) + t^6 + t^7
    auto p2 = series_of(cat("P2", 30)), p3 = series_of(cat("P3", 30));
    for (int d = -2; d <= 30; ++d) {
        CHECK(p2.at(d) == (d >= 2) + (d == 3) + (d == 5) + (d == 6));
        CHECK(p3.at(d) == (d >= 3) + (d == 6) + (d == 7));
        CHECK(hilbert_P(2, 30).at(d) == p2.at(d));
        CHECK(hilbert_P_q_form(3, 30).at(d) == p3.at(d));
    }
}

TEST_CASE("free part series")
{
    auto g = free_generator_series(2, 20);
    std::map<int, long> want;
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j <= 6; ++j) {
            if (i + j > 0)
                ++want[4 * i + 4 * j];
            ++want[4 * i + 4 * j + 6];
        }
    for (int d = 0; d <= 20; ++d)
        CHECK_MESSAGE(g.at(d) == want[d], "degree " << d);
    CHECK(g.at(4) == 2);
    CHECK(g.at(6) == 1);
    CHECK(g.at(8) == 3);
    CHECK(g.at(10) == 2);
    CHECK(g.at(12) == 4);

    auto f1 = free_part_series(1, 20);
    for (int d = 0; d <= 20; ++d)
        CHECK(f1.at(d) == 0);
    auto diff = hilbert_poly_tensor(1, 20) - hilbert_P(1, 20);
    for (int d = 0; d <= 20; ++d)
        CHECK(diff.at(d) == 0);
}
