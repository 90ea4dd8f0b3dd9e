#include "a1mod/margolis.hpp"
#include "a1mod/picard.hpp"

#include <algorithm>

namespace a1mod {

size_t MargolisHomology::total_trusted() const
{
    size_t s = 0;
    for (int d = trusted.lo; d <= trusted.hi; ++d)
        s += dim(d);
    return s;
}

std::vector<int> MargolisHomology::trusted_degrees() const
{
    std::vector<int> out;
    for (int d = trusted.lo; d <= trusted.hi; ++d)
        for (size_t i = 0; i < dim(d); ++i)
            out.push_back(d);
    return out;
}

int q_degree(const Algebra& alg, int k)
{
    if (k == 0)
        return 1;
    if (k == 1)
        return 3;
    (void)alg;
    throw std::invalid_argument("only Q0 and Q1 are supported");
}

BitMatrix q_matrix(const GradedModule& m, int k, int d)
{
    const Algebra& alg = m.algebra();
    if (k == 0)
        return m.act_or_zero(0, d);
    if (k != 1)
        throw std::invalid_argument("only Q0 and Q1 are supported");
    if (alg.name == AlgebraName::E1)
        return m.act_or_zero(1, d);
    return m.word({0, 1}, d) + m.word({1, 0}, d);
}

ModuleMap q_operator(ModulePtr m, int k)
{
    int qd = q_degree(m->algebra(), k);
    ModuleMap f(m, m, qd);
    for (int d = m->window().lo; d <= m->window().hi; ++d)
        f.set_block(d, q_matrix(*m, k, d));
    return f;
}

MargolisHomology margolis_homology(const GradedModule& m, int k)
{
    MargolisHomology h;
    h.k = k;
    h.window = m.window();
    int qd = q_degree(m.algebra(), k);
    Interval t = m.trusted();
    if (!t.empty())
        h.trusted = {m.bounded_below() ? t.lo : t.lo + qd, m.complete_top() ? t.hi : t.hi - qd};
    else
        h.trusted = t;
    for (int d = h.window.lo; d <= h.window.hi; ++d) {
        BitMatrix out = q_matrix(m, k, d);
        BitMatrix in = q_matrix(m, k, d - qd);
        Subspace acc(m.dim(d));
        acc.add_rows(in.transpose());
        size_t im = acc.dim();
        BitMatrix ker = kernel_basis(out);
        BitMatrix reps(0, m.dim(d));
        for (size_t r = 0; r < ker.rows(); ++r) {
            BitVector v = ker.row(r);
            if (acc.add(v))
                reps.append_row(v);
        }
        (void)im;
        h.dims.push_back(reps.rows());
        h.reps.push_back(reps);
    }
    return h;
}

bool is_stably_free(const GradedModule& m)
{
    if (!m.bounded_below())
        throw UnboundedBelowError("is_stably_free: module is a two-sided window of a module unbounded below; "
                                  "vanishing Margolis homology does not imply freeness there");
    for (int k = 0; k < 2; ++k)
        if (margolis_homology(m, k).total_trusted() != 0)
            return false;
    return true;
}

namespace {

/* one round: split off every free summand generated in the lowest degree where the top class acts */
bool split_round(const ModulePtr& cur, int& gen_degree, size_t& count, Sub& complement, ModuleMap& retract)
{
    const GradedModule& m = *cur;
    const Algebra& alg = m.algebra();
    const int s = alg.socle_degree;
    const Word& top = alg.basis[alg.top_index];
    Interval w = m.window();
    for (int d = w.lo; d + s <= w.hi; ++d) {
        if (m.dim(d) == 0 || m.dim(d + s) == 0)
            continue;
        BitMatrix t = m.word(top, d);
        if (t.is_zero())
            continue;
        // generators: first basis vectors whose top-class images are independent
        Subspace seen(m.dim(d + s));
        std::vector<size_t> picks;
        for (size_t j = 0; j < m.dim(d); ++j)
            if (seen.add(t.col(j)))
                picks.push_back(j);
        size_t r = picks.size();
        BitMatrix u(m.dim(d + s), r);
        for (size_t i = 0; i < r; ++i)
            for (size_t row = 0; row < u.rows(); ++row)
                u.set(row, i, t.get(row, picks[i]));
        auto phit = solve_matrix(u.transpose(), BitMatrix::identity(r));
        if (!phit)
            throw std::logic_error("reduced_part: dual functionals do not exist");
        BitMatrix phi = phit->transpose();  // r x dim(d+s)

        GradedSubspace ker;
        std::vector<BitMatrix> pis, sections;
        for (int e = w.lo; e <= w.hi; ++e) {
            int kdeg = e - d;
            auto fb = (kdeg >= 0 && kdeg <= s) ? alg.basis_in_degree(kdeg) : std::vector<int>{};
            BitMatrix pi(r * fb.size(), m.dim(e));
            BitMatrix sec(m.dim(e), r * fb.size());
            if (!fb.empty()) {
                auto xs = alg.basis_in_degree(s - kdeg);
                const auto& pinv = alg.pairing_inverse(kdeg);
                std::vector<BitMatrix> phw;
                for (int x : xs)
                    phw.push_back(phi * m.word(alg.basis[x], e));  // r x dim(e)
                for (size_t i = 0; i < r; ++i)
                    for (size_t bi = 0; bi < fb.size(); ++bi) {
                        size_t row = i * fb.size() + bi;
                        for (size_t xi = 0; xi < xs.size(); ++xi)
                            if (pinv[bi][xi])
                                pi.xor_row_from(row, phw[xi], i);
                    }
                for (size_t i = 0; i < r; ++i)
                    for (size_t bi = 0; bi < fb.size(); ++bi) {
                        BitVector v(m.dim(d));
                        v.set(picks[i]);
                        BitVector img = m.word(alg.basis[fb[bi]], d) * v;
                        for (size_t row = 0; row < img.size(); ++row)
                            if (img.get(row))
                                sec.set(row, i * fb.size() + bi);
                    }
            }
            ker.push_back(Subspace::span(kernel_basis(pi)));
            pis.push_back(pi);
            sections.push_back(sec);
        }
        complement = submodule(cur, ker);
        auto cptr = complement.inclusion.source_ptr();
        retract = ModuleMap(cur, cptr, 0);
        for (int e = w.lo; e <= w.hi; ++e) {
            size_t i = e - w.lo;
            BitMatrix proj = BitMatrix::identity(m.dim(e));
            if (pis[i].rows())
                proj += sections[i] * pis[i];
            const Subspace& ks = ker[i];
            BitMatrix b(ks.dim(), m.dim(e));
            for (size_t c = 0; c < m.dim(e); ++c) {
                BitVector v = proj.col(c);
                BitVector co = ks.coords(v);
                for (size_t row = 0; row < co.size(); ++row)
                    if (co.get(row))
                        b.set(row, c);
            }
            retract.set_block(e, b);
        }
        gen_degree = d;
        count = r;
        return true;
    }
    return false;
}

}  // namespace

SplitResult reduced_part(ModulePtr m)
{
    if (!m->bounded_below())
        throw UnboundedBelowError("reduced_part needs a module bounded below");
    SplitResult res;
    ModulePtr cur = m;
    ModuleMap inc = identity_map(m);
    ModuleMap ret = identity_map(m);
    for (;;) {
        int d = 0;
        size_t r = 0;
        Sub comp;
        ModuleMap rho;
        if (!split_round(cur, d, r, comp, rho))
            break;
        for (size_t i = 0; i < r; ++i)
            res.free_generator_degrees.push_back(d);
        inc = compose(inc, comp.inclusion);
        ret = compose(rho, ret);
        cur = comp.inclusion.source_ptr();
    }
    const int s = m->algebra().socle_degree;
    GradedModule red = *cur;
    Interval t = m->trusted();
    if (!m->complete_top() && !t.empty())
        t.hi -= s;
    red.set_trusted(t);
    res.free_trusted_hi = m->complete_top() ? m->window().hi : m->trusted().hi - s;
    res.reduced = share(red);
    // rebind maps to the module carrying the final trusted interval
    res.inclusion = ModuleMap(res.reduced, m, 0);
    res.retraction = ModuleMap(m, res.reduced, 0);
    for (int e = m->window().lo; e <= m->window().hi; ++e) {
        res.inclusion.set_block(e, inc.block(e));
        res.retraction.set_block(e, ret.block(e));
    }
    return res;
}

ModulePtr reduced(const GradedModule& m)
{
    return reduced_part(share(m)).reduced;
}

bool induces_stable_iso(const ModuleMap& f)
{
    const GradedModule& s = f.source();
    const GradedModule& t = f.target();
    bool any = false;
    for (int k = 0; k < 2; ++k) {
        MargolisHomology hs = margolis_homology(s, k);
        MargolisHomology ht = margolis_homology(t, k);
        Interval range = hs.trusted.intersect(ht.trusted.shifted(-f.shift()));
        if (range.empty())
            continue;
        any = true;
        int qd = q_degree(s.algebra(), k);
        for (int d = range.lo; d <= range.hi; ++d) {
            int e = d + f.shift();
            if (hs.dim(d) != ht.dim(e))
                return false;
            if (hs.dim(d) == 0)
                continue;
            Subspace acc(t.dim(e));
            acc.add_rows(q_matrix(t, k, e - qd).transpose());
            size_t base = acc.dim();
            BitMatrix fb = f.block(d);
            const BitMatrix& reps = hs.reps[d - hs.window.lo];
            for (size_t r = 0; r < reps.rows(); ++r)
                acc.add(fb * reps.row(r));
            if (acc.dim() - base != hs.dim(d))
                return false;
        }
    }
    if (!any)
        throw TrustError("induces_stable_iso: no trusted degrees to compare");
    return true;
}

bool stable_class_equal(ModulePtr m, ModulePtr n)
{
    if (&m->algebra() != &n->algebra())
        return false;
    ModulePtr rm = reduced(*m);
    ModulePtr rn = reduced(*n);
    Interval range = rm->trusted().intersect(rn->trusted());
    if (range.empty())
        throw TrustError("stable_class_equal: no common trusted degrees");
    if (!dims_equal(*rm, *rn, range.lo, range.hi))
        return false;
    for (int k = 0; k < 2; ++k) {
        auto hm = margolis_homology(*rm, k), hn = margolis_homology(*rn, k);
        Interval hr = hm.trusted.intersect(hn.trusted);
        for (int d = hr.lo; d <= hr.hi; ++d)
            if (hm.dim(d) != hn.dim(d))
                return false;
    }
    // local modules with one-dimensional homology are settled by their invariants
    for (int k = 0; k < 2; ++k) {
        auto pm = try_classify_local(*m, k);
        auto pn = try_classify_local(*n, k);
        if (pm && pn)
            return *pm == *pn;
    }
    size_t maxdim = 0;
    for (int d = range.lo; d <= range.hi; ++d)
        maxdim = std::max(maxdim, rm->dim(d));
    if (maxdim > 4)
        throw UnclassifiableError("stable_class_equal: reduced parts too large for the isomorphism search");
    return find_isomorphism(share(truncate(*rm, range.hi)), share(truncate(*rn, range.hi)), range.lo, range.hi)
        .has_value();
}

}  // namespace a1mod
