#include "a1mod/functors.hpp"
#include "a1mod/catalog.hpp"
#include "a1mod/margolis.hpp"

#include <algorithm>

namespace a1mod {

namespace {

constexpr int kFar = 1 << 28;

int trusted_top(const GradedModule& m)
{
    if (m.complete_top())
        return kFar;
    return m.trusted().empty() ? INT_MIN / 4 : m.trusted().hi;
}

/* offsets of the (a, i, j) blocks inside degree d of m (x) n */
struct TensorLayout
{
    int lo_a = 0;
    std::vector<size_t> offset;  // indexed a - lo_a, plus one past the end
};

TensorLayout layout(const GradedModule& m, const GradedModule& n, int d)
{
    TensorLayout l;
    l.lo_a = m.window().lo;
    size_t off = 0;
    for (int a = m.window().lo; a <= m.window().hi; ++a) {
        l.offset.push_back(off);
        off += m.dim(a) * n.dim(d - a);
    }
    l.offset.push_back(off);
    return l;
}

}  // namespace

size_t tensor_index(const GradedModule& m, const GradedModule& n, int a, size_t i, int b, size_t j)
{
    int d = a + b;
    size_t off = 0;
    for (int x = m.window().lo; x < a; ++x)
        off += m.dim(x) * n.dim(d - x);
    return off + i * n.dim(b) + j;
}

GradedModule tensor(const GradedModule& m, const GradedModule& n)
{
    if (&m.algebra() != &n.algebra())
        throw std::invalid_argument("tensor: algebra mismatch");
    const Algebra& alg = m.algebra();
    if (m.is_zero() || n.is_zero()) {
        GradedModule z = zero_module(alg, {m.window().lo + n.window().lo, m.window().lo + n.window().lo});
        return z;
    }
    int mb = m.bottom(), nb = n.bottom();
    Interval w{m.window().lo + n.window().lo, m.window().hi + n.window().hi};
    bool below = m.bounded_below() && n.bounded_below();
    bool complete = m.complete_top() && n.complete_top();
    long tt = std::min<long>(long(mb) + trusted_top(n), long(nb) + trusted_top(m));
    Interval trust = w;
    if (!complete) {
        if (tt < w.lo)
            throw TrustError("tensor: empty trusted interval");
        if (below)
            w.hi = std::min<long>(w.hi, tt);
        trust.hi = std::min<long>(w.hi, tt);
    }
    if (!below) {
        // a two-sided cut: only the part of the stored product coming from the cut modules is meaningful
        trust.lo = m.trusted().lo + n.trusted().lo;
        trust.hi = std::min(m.trusted().hi + nb, n.trusted().hi + mb);
    }

    std::vector<size_t> dims;
    std::vector<TensorLayout> lays;
    for (int d = w.lo; d <= w.hi; ++d) {
        lays.push_back(layout(m, n, d));
        dims.push_back(lays.back().offset.back());
    }
    GradedModule out(alg, w, dims);
    for (size_t g = 0; g < alg.num_gens(); ++g) {
        int gd = alg.gen_degrees[g];
        for (int d = w.lo; d <= w.hi; ++d) {
            int e = d + gd;
            BitMatrix act(out.dim(e), out.dim(d));
            if (e > w.hi || out.dim(d) == 0 || out.dim(e) == 0) {
                out.set_act(g, d, act);
                continue;
            }
            const TensorLayout& ls = lays[d - w.lo];
            const TensorLayout& lt = lays[e - w.lo];
            for (int a = m.window().lo; a <= m.window().hi; ++a) {
                int b = d - a;
                if (m.dim(a) == 0 || n.dim(b) == 0)
                    continue;
                size_t scol = ls.offset[a - ls.lo_a];
                for (const auto& [u, v] : alg.coproduct[g]) {
                    int a2 = a + alg.word_degree(u), b2 = b + alg.word_degree(v);
                    if (m.dim(a2) == 0 || n.dim(b2) == 0)
                        continue;
                    BitMatrix x = m.word(u, a), y = n.word(v, b);
                    size_t trow = lt.offset[a2 - lt.lo_a];
                    size_t nb2 = n.dim(b2), nbs = n.dim(b);
                    for (size_t r1 = 0; r1 < x.rows(); ++r1)
                        for (size_t c1 = 0; c1 < x.cols(); ++c1) {
                            if (!x.get(r1, c1))
                                continue;
                            for (size_t r2 = 0; r2 < y.rows(); ++r2)
                                for (size_t c2 = 0; c2 < y.cols(); ++c2)
                                    if (y.get(r2, c2))
                                        act.flip(trow + r1 * nb2 + r2, scol + c1 * nbs + c2);
                        }
                }
            }
            out.set_act(g, d, act);
        }
    }
    out.set_bounded_below(below);
    out.set_complete_top(complete);
    out.set_trusted(trust);
    return out;
}

Cover minimal_cover(ModulePtr mp)
{
    const GradedModule& m = *mp;
    const Algebra& alg = m.algebra();
    if (!m.bounded_below())
        throw UnboundedBelowError("minimal_cover needs a module bounded below");
    Interval w = m.window();
    Cover c;
    for (int d = w.lo; d <= w.hi; ++d) {
        if (m.dim(d) == 0)
            continue;
        Subspace dec(m.dim(d));
        for (size_t g = 0; g < m.num_gens(); ++g) {
            int src = d - m.gen_degree(g);
            if (src >= w.lo && m.dim(src))
                dec.add_rows(m.act(g, src).transpose());
        }
        for (size_t j : dec.non_pivots()) {
            BitVector v(m.dim(d));
            v.set(j);
            c.generator_degrees.push_back(d);
            c.generators.push_back(v);
        }
    }
    int fhi = w.hi;
    if (m.complete_top() && !c.generator_degrees.empty())
        fhi = std::max(fhi, c.generator_degrees.back() + alg.socle_degree);
    c.free = free_module(alg, c.generator_degrees, fhi);
    if (c.generator_degrees.empty())
        c.free.module = zero_module(alg, w);
    else if (!m.complete_top())
        c.free.module.set_complete_top(false);
    c.free.module.set_trusted(m.complete_top() ? c.free.module.window() : m.trusted().intersect(c.free.module.window()));
    ModulePtr fp = share(c.free.module);
    c.covering = ModuleMap(fp, mp, 0);
    Interval fw = fp->window();
    for (int d = fw.lo; d <= fw.hi && !c.generator_degrees.empty(); ++d) {
        BitMatrix b(m.dim(d), fp->dim(d));
        const auto& basis = c.free.basis[d - fw.lo];
        for (size_t j = 0; j < basis.size(); ++j) {
            auto [gi, ab] = basis[j];
            BitVector img = m.word(alg.basis[ab], c.generator_degrees[gi]) * c.generators[gi];
            for (size_t r = 0; r < img.size(); ++r)
                if (img.get(r))
                    b.set(r, j);
        }
        c.covering.set_block(d, b);
    }
    c.kernel = submodule(fp, kernel_of(c.covering));
    return c;
}

GradedModule loops(const GradedModule& m)
{
    Cover c = minimal_cover(share(m));
    GradedModule k = *c.kernel.inclusion.source_ptr();
    if (!m.complete_top()) {
        Interval t = m.trusted();
        t.hi -= m.algebra().socle_degree;
        if (t.empty())
            throw TrustError("loops: empty trusted interval");
        k.set_trusted(t.intersect(k.window()));
    }
    return k;
}

GradedModule loops(const GradedModule& m, int times)
{
    GradedModule cur = m;
    for (int i = 0; i < times; ++i)
        cur = loops(cur);
    return cur;
}

GradedModule inverse_loops(const GradedModule& m)
{
    GradedModule t = tensor(make_I_inv(m.algebra()), m);
    return *reduced(t);
}

Resolution minimal_resolution(ModulePtr m, int s_max)
{
    Resolution res;
    res.base = m;
    res.s_max = s_max;
    ModulePtr cur = m;
    int thi = trusted_top(*m);
    const int sd = m->algebra().socle_degree;
    for (int s = 0; s <= s_max; ++s) {
        Cover c = minimal_cover(cur);
        ResolutionStage st;
        st.s = s;
        st.generator_degrees = c.generator_degrees;
        if (s == 0) {
            st.generator_images = c.generators;
        } else {
            const ModuleMap& inc = res.stages.back().syzygy_inclusion;
            for (size_t i = 0; i < c.generators.size(); ++i)
                st.generator_images.push_back(inc.apply(c.generator_degrees[i], c.generators[i]));
        }
        st.free = c.free;
        st.syzygy = c.kernel.inclusion.source_ptr();
        st.syzygy_inclusion = c.kernel.inclusion;
        st.trusted_hi = thi;
        res.stages.push_back(st);
        if (!m->complete_top())
            thi -= sd;
        cur = st.syzygy;
        if (cur->is_zero() && cur->complete_top())
            break;
    }
    return res;
}

int ext_degree_needed(const GradedModule& n, int t)
{
    return n.is_zero() ? INT_MIN / 4 : n.top() + t;
}

namespace {

/* Hom(F_., n) in internal degree t */
struct HomComplex
{
    const Resolution& res;
    const GradedModule& n;
    int t;

    const std::vector<int>& gens(int k) const
    {
        static const std::vector<int> none;
        return (k >= 0 && k < int(res.stages.size())) ? res.stages[k].generator_degrees : none;
    }

    // generator gamma of stage k contributes n(g - t)
    std::vector<size_t> offsets(int k) const
    {
        std::vector<size_t> off;
        size_t o = 0;
        for (int g : gens(k)) {
            off.push_back(o);
            o += n.dim(g - t);
        }
        off.push_back(o);
        return off;
    }

    // d^k : C^k -> C^{k+1}
    BitMatrix differential(int k) const
    {
        const Algebra& alg = n.algebra();
        auto src = offsets(k), dst = offsets(k + 1);
        BitMatrix dm(dst.back(), src.back());
        if (k < 0 || k + 1 >= int(res.stages.size()) || dm.rows() == 0 || dm.cols() == 0)
            return dm;
        const ResolutionStage& up = res.stages[k + 1];
        const ResolutionStage& low = res.stages[k];
        const FreeModule& fm = low.free;
        int flo = fm.module.window().lo;
        for (size_t gp = 0; gp < up.generator_degrees.size(); ++gp) {
            int g2 = up.generator_degrees[gp];
            if (n.dim(g2 - t) == 0)
                continue;
            const BitVector& img = up.generator_images[gp];
            const auto& basis = fm.basis[g2 - flo];
            for (size_t j = 0; j < img.size(); ++j) {
                if (!img.get(j))
                    continue;
                auto [gi, b] = basis[j];
                int g1 = low.generator_degrees[gi];
                if (n.dim(g1 - t) == 0)
                    continue;
                BitMatrix blk = n.word(alg.basis[b], g1 - t);
                for (size_t r = 0; r < blk.rows(); ++r)
                    for (size_t c = 0; c < blk.cols(); ++c)
                        if (blk.get(r, c))
                            dm.flip(dst[gp] + r, src[gi] + c);
            }
        }
        return dm;
    }
};

void check_ext_request(const Resolution& res, const GradedModule& n, int s, int t)
{
    if (&res.base->algebra() != &n.algebra())
        throw std::invalid_argument("ext_dim: algebra mismatch");
    if (!n.complete_top())
        throw TrustError("ext_dim: target must be finite (truncate it explicitly)");
    int need = ext_degree_needed(n, t);
    auto stage_ok = [&](int k) {
        if (k < 0)
            return true;
        if (k >= int(res.stages.size()))
            return res.base->complete_top() && !res.stages.empty() && res.stages.back().syzygy->is_zero();
        return res.stages[k].trusted_hi >= need;
    };
    for (int k = s - 1; k <= s + 1; ++k)
        if (!stage_ok(k))
            throw TrustError("ext_dim: resolution not trusted far enough for (s,t)=(" + std::to_string(s) + "," +
                             std::to_string(t) + ")");
}

}  // namespace

size_t ext_dim(const Resolution& res, const GradedModule& n, int s, int t)
{
    check_ext_request(res, n, s, t);
    HomComplex c{res, n, t};
    size_t cs = c.offsets(s).back();
    size_t r_out = rank(c.differential(s));
    size_t r_in = s > 0 ? rank(c.differential(s - 1)) : 0;
    return cs - r_out - r_in;
}

size_t ext_dim_limit(const Resolution& res, const GradedModule& n, int s, int t, int h)
{
    check_ext_request(res, n, s, t);
    GradedModule small = truncate(n, h);
    small.set_complete_top(true);
    HomComplex big{res, n, t}, sm{res, small, t};
    BitMatrix z = kernel_basis(big.differential(s));  // rows: cocycles for n
    auto ob = big.offsets(s), os = sm.offsets(s);
    // restriction of cochains along n -> n_{<=h} keeps the components with g - t <= h
    std::vector<size_t> keep;
    const auto& g = big.gens(s);
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < os[i + 1] - os[i]; ++j)
            keep.push_back(ob[i] + j);
    Subspace acc(os.back());
    if (s > 0)
        acc.add_rows(sm.differential(s - 1).transpose());
    size_t boundaries = acc.dim();
    for (size_t r = 0; r < z.rows(); ++r) {
        BitVector v(os.back());
        for (size_t j = 0; j < keep.size(); ++j)
            if (z.get(r, keep[j]))
                v.set(j);
        acc.add(v);
    }
    return acc.dim() - boundaries;
}

size_t ext_dim(ModulePtr m, const GradedModule& n, int s, int t)
{
    return ext_dim(minimal_resolution(m, s + 1), n, s, t);
}

GradedModule localize(const GradedModule& m, int k, std::optional<int> hi)
{
    if (k != 0 && k != 1)
        throw std::invalid_argument("localize: k must be 0 or 1");
    if (m.is_zero())
        return m;
    const int sd = m.algebra().socle_degree;
    int target = hi ? *hi : (m.complete_top() ? m.top() + 30 : m.trusted().hi);
    int xhi = target + sd - m.bottom() + 2;
    GradedModule x = k == 0 ? suspend(make_R(xhi - 1), 1) : make_P0(xhi);
    if (m.algebra().name == AlgebraName::E1)
        x = restrict_to_e1(x);
    GradedModule mm = m;
    if (!m.complete_top() && m.trusted().hi > target + sd + 2 - x.bottom())
        mm = truncate(m, target + sd + 2 - x.bottom());
    GradedModule t = tensor(x, mm);
    ModulePtr r = reduced(t);
    GradedModule out = *r;
    if (out.window().hi > target) {
        Interval tr = out.trusted();
        out = truncate(out, target);
        out.set_trusted(tr.intersect(out.window()));
    }
    return out;
}

}  // namespace a1mod
