#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "a1mod/catalog.hpp"
#include "a1mod/functors.hpp"
#include "a1mod/hilbert.hpp"
#include "a1mod/margolis.hpp"

using namespace a1mod;

namespace {

bool same_dims(const GradedModule& a, const GradedModule& b, int lo, int hi)
{
    for (int d = lo; d <= hi; ++d)
        if (a.dim(d) != b.dim(d))
            return false;
    return true;
}

}  // namespace

TEST_CASE("tensor unit and series")
{
    GradedModule j = make_J();
    GradedModule t = tensor(make_F2(), j);
    CHECK(find_isomorphism(share(t), share(j), -2, 6));

    GradedModule p1 = make("P1", AlgebraName::A1, -2, 20);
    GradedModule pj = tensor(p1, j);
    TruncatedSeries prod = series_of(p1) * series_of(j);
    CHECK(prod.cutoff >= pj.trusted().hi);
    for (int d = pj.trusted().lo; d <= pj.trusted().hi; ++d)
        CHECK(series_of(pj).at(d) == prod.at(d));
    CHECK(validate(pj).ok());
}

TEST_CASE("reduced part of P1 (x) P1 against P2")
{
    GradedModule p1 = make("P1", AlgebraName::A1, -2, 30);
    ModulePtr r = reduced(tensor(p1, p1));
    GradedModule p2 = make("P2", AlgebraName::A1, -2, 30);
    int hi = std::min(r->trusted().hi, 24);
    CHECK(hi >= 20);
    CHECK(same_dims(*r, p2, -2, hi));
    CHECK(find_isomorphism(share(truncate(*r, hi)), share(truncate(p2, hi)), -2, hi));
}

TEST_CASE("loops")
{
    auto free_loops = loops(regular_representation(Algebra::A1()));
    CHECK(reduced(free_loops)->is_zero());

    GradedModule r = make("R", AlgebraName::A1, -2, 30);
    GradedModule lr = loops(r);
    GradedModule sr = make("S^1.R", AlgebraName::A1, -2, 30);
    CHECK(same_dims(*reduced(lr), sr, -2, lr.trusted().hi));

    GradedModule p0 = make("P0", AlgebraName::A1, -2, 56);
    GradedModule l4 = *reduced(loops(p0, 4));
    GradedModule s12 = make("S^12.P0", AlgebraName::A1, -2, 56);
    CHECK(l4.trusted().hi >= 20);
    CHECK(same_dims(l4, s12, -2, l4.trusted().hi));
}

TEST_CASE("inverse loops")
{
    GradedModule f2e = make_F2(Algebra::E1());
    GradedModule il = inverse_loops(f2e);
    CHECK(il.bottom() == -4);

    GradedModule j = make_J();
    GradedModule back = *reduced(inverse_loops(loops(j)));
    CHECK(find_isomorphism(share(truncate(back, 8)), share(j), -4, 8));

    GradedModule sp1 = make("S^1.P1", AlgebraName::A1, -2, 36);
    GradedModule q = *reduced(inverse_loops(sp1));
    GradedModule p0 = make("P0", AlgebraName::A1, -2, 36);
    CHECK(q.trusted().hi >= 16);
    CHECK(same_dims(q, p0, -2, q.trusted().hi));
}

TEST_CASE("minimal covers")
{
    Cover c = minimal_cover(share(regular_representation(Algebra::A1())));
    CHECK(c.generator_degrees == std::vector<int>{0});
    CHECK(c.kernel.module.total_dim() == 0);

    Cover f = minimal_cover(share(make_F2()));
    std::vector<size_t> want{1, 1, 2, 1, 1, 1};
    for (int d = 1; d <= 6; ++d)
        CHECK(f.kernel.module.dim(d) == want[d - 1]);

    // x^d is a generator of P1 unless Sq1 x^(d-1) or Sq2 x^(d-2) hits it
    GradedModule p1 = make("P1", AlgebraName::A1, -2, 24);
    Cover p = minimal_cover(share(p1));
    std::vector<int> gens;
    for (int d = 1; d <= p1.trusted().hi; ++d) {
        long a = d - 1, b = d - 2;
        bool hit = (d >= 2 && a % 2 == 1) || (d >= 3 && (b * (b - 1) / 2) % 2 == 1);
        if (!hit)
            gens.push_back(d);
    }
    std::vector<int> got;
    for (int g : p.generator_degrees)
        if (g <= p1.trusted().hi)
            got.push_back(g);
    CHECK(got == gens);
    CHECK(got[0] == 1);
    CHECK(got[1] == 3);
}

TEST_CASE("resolutions and Ext")
{
    Resolution free = minimal_resolution(share(regular_representation(Algebra::A1())), 2);
    CHECK(free.stages[0].generator_degrees.size() == 1);
    for (size_t s = 1; s < free.stages.size(); ++s)
        CHECK(free.stages[s].generator_degrees.empty());

    Resolution e = minimal_resolution(share(make_F2(Algebra::E1())), 5);
    for (int s = 0; s <= 5; ++s) {
        int hi = e.stages[s].trusted_hi;
        size_t count = 0;
        for (int g : e.stages[s].generator_degrees)
            count += g <= hi;
        CHECK(count == size_t(s + 1));
    }

    ModulePtr f2 = share(make_F2());
    GradedModule f2n = make_F2();
    CHECK(ext_dim(f2, f2n, 1, 1) == 1);
    CHECK(ext_dim(f2, f2n, 1, 2) == 1);
    CHECK(ext_dim(f2, f2n, 1, 3) == 0);
    CHECK(ext_dim(share(regular_representation(Algebra::A1())), f2n, 1, 1) == 0);

    // the target is cut deep and only its image in degrees <= 12 counts
    GradedModule sr = make("S^1.R", AlgebraName::A1, -2, 24);
    sr.set_complete_top(true);
    Resolution rp = minimal_resolution(share(make("P0", AlgebraName::A1, -2, 44)), 3);
    CHECK(ext_dim_limit(rp, sr, 1, 0, 12) == 1);
}

TEST_CASE("localization")
{
    GradedModule l0 = localize(make_F2(), 0, 24);
    GradedModule sr = make("S^1.R", AlgebraName::A1, -2, 24);
    CHECK(same_dims(l0, sr, -2, l0.trusted().hi));
    GradedModule l1 = localize(make_F2(), 1, 24);
    GradedModule p0 = make("P0", AlgebraName::A1, -2, 24);
    CHECK(same_dims(l1, p0, -2, l1.trusted().hi));

    GradedModule both = localize(localize(make_J(), 1, 30), 0, 24);
    CHECK(both.is_zero());

    GradedModule lj = localize(make_J(), 1, 28);
    GradedModule p2 = make("S^-4.P2", AlgebraName::A1, -6, 28);
    CHECK(same_dims(lj, p2, -6, lj.trusted().hi));
}
