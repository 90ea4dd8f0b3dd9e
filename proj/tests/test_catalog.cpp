#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "a1mod/catalog.hpp"
#include "a1mod/functors.hpp"
#include "a1mod/margolis.hpp"

using namespace a1mod;

namespace {

bool exact_at(const ModuleMap& f, const ModuleMap& g, int lo, int hi)
{
    // f: A -> B, g: B -> C
    GradedSubspace k = kernel_of(g), im = image_of(f);
    int blo = g.source().window().lo;
    for (int d = lo; d <= hi; ++d) {
        if (!g.source().window().contains(d))
            continue;
        if (k[d - blo].dim() != im[d - blo].dim())
            return false;
        for (size_t r = 0; r < im[d - blo].dim(); ++r)
            if (!k[d - blo].contains(im[d - blo].basis().row(r)))
                return false;
    }
    return true;
}

}  // namespace

TEST_CASE("binomials mod 2")
{
    CHECK(binom_mod2(5, 1));
    CHECK(!binom_mod2(4, 1));
    CHECK(binom_mod2(-1, 1));
    CHECK(binom_mod2(-1, 2));
    CHECK(!binom_mod2(-2, 1));
    CHECK(binom_mod2(-2, 2));
}

TEST_CASE("catalog keys")
{
    CHECK(CatalogKey::parse("P2").name == "P");
    CHECK(CatalogKey::parse("P2").arg == 2);
    CHECK(CatalogKey::parse("S^4.R").suspension == 4);
    CHECK(CatalogKey::parse("Fseq:1").arg == 1);
    CHECK_THROWS_AS(CatalogKey::parse("Q7"), std::invalid_argument);
}

TEST_CASE("small catalog modules")
{
    GradedModule j = make_J();
    // J = Sigma^-4 M2
    for (int d = -2; d <= 2; ++d)
        CHECK(j.dim(d) == 1);
    CHECK(j.total_dim() == 5);

    // A(1)//A(0), Sigma^2 A(1), Sigma^4 A(1), Sigma^7 A(1)//A(0)
    std::vector<std::pair<int, size_t>> shape{{0, 4}, {2, 8}, {4, 8}, {7, 4}};
    for (int i = 0; i <= 3; ++i) {
        GradedModule f = make_Fseq(i);
        CHECK(validate(f).ok());
        CHECK(f.bottom() == shape[i].first);
        CHECK(f.total_dim() == shape[i].second);
    }
    GradedModule m1 = make_M(1);
    std::vector<size_t> want{1, 1, 0, 1};
    for (int d = 1; d <= 4; ++d)
        CHECK(m1.dim(d) == want[d - 1]);
}

TEST_CASE("named maps")
{
    CHECK(is_module_map(eta_map(24)));
    CHECK(is_module_map(epsilon_map(24)));
    for (int i = 0; i <= 3; ++i) {
        ShortExact s = ses_main(i, 30);
        CHECK(is_module_map(s.incl));
        CHECK(is_module_map(s.proj));
        CHECK(exact_at(s.incl, s.proj, -2, 24));
        CHECK(kernel_of(s.incl)[0].dim() == 0);
    }
    for (int i = 0; i <= 2; ++i) {
        ModuleMap a = f_map(i), b = f_map(i + 1);
        ModuleMap c = compose(a, b);
        for (int d = c.source().window().lo; d <= c.source().window().hi; ++d)
            CHECK(c.block(d).is_zero());
    }
}

TEST_CASE("orbit sums")
{
    PolyElement a = orbit_sum({1, 2}, 2);
    CHECK(a == PolyElement::monomial({1, 2}) + PolyElement::monomial({2, 1}));
    CHECK(orbit_sum({2, 2}, 2) == PolyElement::monomial({2, 2}));
    CHECK(orbit_sum({1, 1, 2, 4}, 4).terms.size() == 12);
    CHECK(PolyElement::parse("2221+1114").terms.size() == 2);
}

TEST_CASE("embedded modules")
{
    EmbeddedP e1 = embedded_p(1, 20);
    GradedModule p1 = make("P1", AlgebraName::A1, -2, 20);
    CHECK(find_isomorphism(share(e1.sub.module), share(p1), -2, 20));

    PolyTensor t(1, 12);
    auto x = closure(t.module(), {{1, t.vec(PolyElement::monomial({1}))}});
    std::vector<size_t> want{1, 1, 0, 1};
    for (int d = 1; d <= 4; ++d)
        CHECK(x[d - t.module().window().lo].dim() == want[d - 1]);
    CHECK(x[5 - t.module().window().lo].dim() == 0);

    PolyTensor t2(2, 14);
    auto m2 = closure(t2.module(), {{2, t2.vec(PolyElement::monomial({1, 1}))}});
    GradedModule cat = make_M(2);
    for (int d = 2; d <= 14; ++d)
        CHECK(m2[d - t2.module().window().lo].dim() == cat.dim(d));

    EmbeddedP e3 = embedded_p(3, 22);
    GradedModule p3 = make("P3", AlgebraName::A1, -2, 22);
    int hi = std::min(e3.sub.module.trusted().hi, 22);
    CHECK(hi >= 16);
    CHECK(find_isomorphism(share(truncate(e3.sub.module, hi)), share(truncate(p3, hi)), -2, hi));
}

TEST_CASE("Laurent module")
{
    GradedModule l = make_laurent(-20, 20);
    CHECK(validate(l).ok());
    CHECK(!l.bounded_below());
    for (int k = 0; k <= 1; ++k)
        CHECK(margolis_homology(l, k).total_trusted() == 0);
}
