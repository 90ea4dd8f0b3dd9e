#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "a1mod/catalog.hpp"
#include "a1mod/functors.hpp"
#include "a1mod/hilbert.hpp"
#include "a1mod/margolis.hpp"

using namespace a1mod;

namespace {

// binom(n, i) mod 2 from the integer recurrence, n >= 0
int binom_naive(long n, long i)
{
    if (i < 0 || i > n)
        return 0;
    std::vector<std::vector<int>> c(n + 1, std::vector<int>(n + 1));
    for (long a = 0; a <= n; ++a) {
        c[a][0] = 1;
        for (long b = 1; b <= a; ++b)
            c[a][b] = (c[a - 1][b - 1] + (b < a ? c[a - 1][b] : 0)) & 1;
    }
    return c[n][i];
}

// Sq^i x^n = binom(n, i) x^(n+i); for n < 0 use binom(n,i) = (-1)^i binom(i-n-1, i)
int sq_coeff(long n, long i)
{
    return n >= 0 ? binom_naive(n, i) : binom_naive(i - n - 1, i);
}

}  // namespace

TEST_CASE("algebra Poincare series")
{
    CHECK(Algebra::A1().poincare_series() == std::vector<int>{1, 1, 1, 2, 1, 1, 1});
    auto e = Algebra::E1().poincare_series();
    std::vector<int> want{1, 1, 0, 1, 1};
    for (size_t d = 0; d < want.size(); ++d)
        CHECK(e[d] == want[d]);
    CHECK(Algebra::A1().socle_degree == 6);
    CHECK(Algebra::E1().socle_degree == 4);
    CHECK(Algebra::A1().dim() == 8);
}

TEST_CASE("P0 actions match the binomial formula")
{
    GradedModule p = make("P0", AlgebraName::A1, -2, 30);
    for (int d = -1; d <= 30; ++d)
        CHECK(p.dim(d) == 1);
    CHECK(p.dim(-2) == 0);
    for (int d = -1; d + 2 <= 30; ++d) {
        CHECK(p.act(0, d).get(0, 0) == bool(sq_coeff(d, 1)));
        CHECK(p.act(1, d).get(0, 0) == bool(sq_coeff(d, 2)));
    }
    CHECK(p.act(0, -1).get(0, 0));
    CHECK(p.act(1, -1).get(0, 0));
}

TEST_CASE("P tensor P actions follow the Cartan formula")
{
    PolyTensor t(2, 14);
    const GradedModule& m = t.module();
    for (int d = 2; d + 2 <= 14; ++d) {
        const auto& basis = t.basis(d);
        for (size_t j = 0; j < basis.size(); ++j) {
            long a = basis[j][0], b = basis[j][1];
            for (int g = 0; g < 2; ++g) {
                int i = g + 1;
                BitVector want(m.dim(d + i));
                for (int k = 0; k <= i; ++k)
                    if (sq_coeff(a, k) && sq_coeff(b, i - k)) {
                        Monomial e{int(a + k), int(b + i - k)};
                        const auto& tb = t.basis(d + i);
                        size_t pos = std::find(tb.begin(), tb.end(), e) - tb.begin();
                        REQUIRE(pos < tb.size());
                        want.flip(pos);
                    }
                CHECK(m.act(g, d).col(j) == want);
            }
        }
    }
}

TEST_CASE("validate")
{
    CHECK(validate(regular_representation(Algebra::A1())).ok());
    CHECK(validate(regular_representation(Algebra::E1())).ok());
    CHECK(validate(make_J()).ok());

    GradedModule bad(Algebra::A1(), {0, 2}, {1, 1, 1});
    bad.set_act(0, 0, BitMatrix::identity(1));
    bad.set_act(0, 1, BitMatrix::identity(1));
    auto r = validate(bad);
    REQUIRE(!r.ok());
    CHECK(r.violations[0].degree == 0);
    CHECK(r.violations[0].relation == "Sq1Sq1");
}

TEST_CASE("suspension, sums and duals")
{
    GradedModule j = make_J();
    GradedModule s0 = suspend(j, 0);
    CHECK(s0.dims() == j.dims());
    CHECK(s0.window() == j.window());
    GradedModule s3 = suspend(j, 3);
    for (int d = -5; d <= 10; ++d)
        CHECK(s3.dim(d + 3) == j.dim(d));

    GradedModule p1 = make("P1", AlgebraName::A1, -2, 20);
    GradedModule z = zero_module(Algebra::A1(), p1.window());
    GradedModule s = direct_sum(p1, z);
    CHECK(s.dims() == p1.dims());
    GradedModule pj = direct_sum(p1, suspend(j, 4));
    for (int d = -2; d <= 20; ++d)
        CHECK(pj.dim(d) == p1.dim(d) + j.dim(d - 4));
    for (int k = 0; k <= 1; ++k) {
        auto h = margolis_homology(pj, k), a = margolis_homology(p1, k), b = margolis_homology(suspend(j, 4), k);
        for (int d = -2; d <= 16; ++d)
            CHECK(h.dim(d) == a.dim(d) + b.dim(d));
    }

    GradedModule f2 = make_F2();
    GradedModule df = dual(f2);
    CHECK(df.dim(0) == 1);
    CHECK(df.total_dim() == 1);
    GradedModule dd = dual(dual(j));
    CHECK(find_isomorphism(share(dd), share(j), -2, 6));
    GradedModule m1 = make_M(1);
    GradedModule dm = dual(m1);
    CHECK(validate(dm).ok());
    CHECK(dm.total_dim() == m1.total_dim());
    for (int d = -10; d <= 10; ++d)
        CHECK(dm.dim(-d) == m1.dim(d));
}

TEST_CASE("module maps")
{
    ModulePtr j = share(make_J());
    CHECK(is_module_map(identity_map(j)));
    ModuleMap eta = eta_map(20);
    CHECK(is_module_map(eta));

    // bottom class of a Sq1-chain hit by a class with no Sq1
    GradedModule chain(Algebra::A1(), {0, 1}, {1, 1});
    chain.set_act(0, 0, BitMatrix::identity(1));
    GradedModule two(Algebra::A1(), {0, 1}, {1, 1});
    ModuleMap f(share(two), share(chain), 0);
    f.set_block(0, BitMatrix::identity(1));
    CHECK(!is_module_map(f));
}

TEST_CASE("restriction to E1")
{
    GradedModule a = regular_representation(Algebra::A1());
    GradedModule r = restrict_to_e1(a);
    CHECK(validate(r).ok());
    CHECK(&r.algebra() == &Algebra::E1());
    auto split = reduced_part(share(r));
    CHECK(split.free_generator_degrees.size() == 2);
    CHECK(split.reduced->is_zero());

    GradedModule p1 = restrict_to_e1(make("P1", AlgebraName::A1, -2, 24));
    auto h = margolis_homology(p1, 1);
    CHECK(h.dim(2) == 1);
    CHECK(h.total_trusted() == 1);

    GradedModule j = make_J();
    GradedModule x = restrict_to_e1(suspend(j, 5)), y = suspend(restrict_to_e1(j), 5);
    CHECK(x.dims() == y.dims());
    CHECK(x.window() == y.window());
}
