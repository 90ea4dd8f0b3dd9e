#include "a1mod/module.hpp"

#include <algorithm>
#include <random>

namespace a1mod {

namespace {

constexpr int kFar = 1 << 28;

}  // namespace

GradedModule::GradedModule(const Algebra& alg, Interval window, std::vector<size_t> dims)
    : alg_(&alg), window_(window), trusted_(window), dims_(std::move(dims))
{
    size_t n = window.empty() ? 0 : size_t(window.hi - window.lo + 1);
    if (dims_.size() != n)
        throw std::invalid_argument("GradedModule: dims length does not match window");
    actions_.assign(alg.num_gens(), {});
    for (size_t g = 0; g < alg.num_gens(); ++g)
        for (int d = window.lo; d <= window.hi; ++d)
            actions_[g].emplace_back(dim(d + alg.gen_degrees[g]), dim(d));
}

void GradedModule::set_trusted(Interval t)
{
    if (!t.empty() && (t.lo < window_.lo || t.hi > window_.hi))
        t = t.intersect(window_);
    trusted_ = t;
}

size_t GradedModule::total_dim() const
{
    size_t s = 0;
    for (size_t x : dims_)
        s += x;
    return s;
}

int GradedModule::bottom() const
{
    for (size_t i = 0; i < dims_.size(); ++i)
        if (dims_[i])
            return window_.lo + int(i);
    return INT_MAX;
}

int GradedModule::top() const
{
    for (size_t i = dims_.size(); i-- > 0;)
        if (dims_[i])
            return window_.lo + int(i);
    return INT_MIN;
}

const BitMatrix& GradedModule::act(size_t g, int d) const
{
    if (!window_.contains(d))
        throw std::out_of_range("GradedModule::act: degree outside window");
    return actions_[g][d - window_.lo];
}

BitMatrix GradedModule::act_or_zero(size_t g, int d) const
{
    if (window_.contains(d))
        return actions_[g][d - window_.lo];
    return BitMatrix(dim(d + alg_->gen_degrees[g]), dim(d));
}

void GradedModule::set_act(size_t g, int d, BitMatrix m)
{
    if (!window_.contains(d))
        throw std::out_of_range("GradedModule::set_act: degree outside window");
    if (m.rows() != dim(d + alg_->gen_degrees[g]) || m.cols() != dim(d))
        throw std::invalid_argument("GradedModule::set_act: action matrix has wrong shape");
    actions_[g][d - window_.lo] = std::move(m);
}

BitMatrix GradedModule::word(const Word& w, int d) const
{
    BitMatrix r = BitMatrix::identity(dim(d));
    int cur = d;
    for (size_t i = w.size(); i-- > 0;) {
        r = act_or_zero(w[i], cur) * r;
        cur += alg_->gen_degrees[w[i]];
    }
    return r;
}

std::string GradedModule::label(int d, size_t i) const
{
    if (window_.contains(d) && size_t(d - window_.lo) < labels_.size() && i < labels_[d - window_.lo].size())
        return labels_[d - window_.lo][i];
    return "e" + std::to_string(d) + "_" + std::to_string(i);
}

ModuleMap::ModuleMap(ModulePtr source, ModulePtr target, int shift)
    : source_(std::move(source)), target_(std::move(target)), shift_(shift)
{
    if (&source_->algebra() != &target_->algebra())
        throw std::invalid_argument("ModuleMap: algebra mismatch");
    Interval w = source_->window();
    for (int d = w.lo; d <= w.hi; ++d)
        blocks_.emplace_back(target_->dim(d + shift_), source_->dim(d));
}

BitMatrix ModuleMap::block(int d) const
{
    Interval w = source_->window();
    if (w.contains(d))
        return blocks_[d - w.lo];
    return BitMatrix(target_->dim(d + shift_), source_->dim(d));
}

void ModuleMap::set_block(int d, BitMatrix m)
{
    Interval w = source_->window();
    if (!w.contains(d))
        throw std::out_of_range("ModuleMap::set_block: degree outside source window");
    if (m.rows() != target_->dim(d + shift_) || m.cols() != source_->dim(d))
        throw std::invalid_argument("ModuleMap::set_block: wrong shape");
    blocks_[d - w.lo] = std::move(m);
}

ValidationReport validate(const GradedModule& m)
{
    ValidationReport rep;
    const Algebra& alg = m.algebra();
    Interval w = m.window();
    for (int d = w.lo; d <= w.hi; ++d) {
        for (size_t g = 0; g < m.num_gens(); ++g) {
            const BitMatrix& a = m.act(g, d);
            if (a.rows() != m.dim(d + m.gen_degree(g)) || a.cols() != m.dim(d))
                rep.violations.push_back({d, "shape:" + alg.gen_names[g]});
        }
        for (const auto& rel : alg.relations) {
            BitMatrix lhs = m.word(rel.lhs, d);
            BitMatrix rhs = rel.rhs ? m.word(*rel.rhs, d) : BitMatrix(lhs.rows(), lhs.cols());
            if (lhs != rhs)
                rep.violations.push_back({d, rel.name});
        }
    }
    return rep;
}

namespace {

GradedModule copy_shell(const GradedModule& m, const Algebra& alg, Interval window)
{
    std::vector<size_t> dims;
    for (int d = window.lo; d <= window.hi; ++d)
        dims.push_back(m.dim(d));
    GradedModule out(alg, window, dims);
    out.set_bounded_below(m.bounded_below());
    out.set_complete_top(m.complete_top());
    return out;
}

Interval effective_trusted(const GradedModule& m)
{
    Interval t = m.trusted();
    if (t.empty())
        return t;
    return {m.bounded_below() ? -kFar : t.lo, m.complete_top() ? kFar : t.hi};
}

}  // namespace

GradedModule suspend(const GradedModule& m, int k)
{
    Interval w = m.window().shifted(k);
    std::vector<size_t> dims = m.dims();
    GradedModule out(m.algebra(), w, dims);
    out.set_bounded_below(m.bounded_below());
    out.set_complete_top(m.complete_top());
    for (size_t g = 0; g < m.num_gens(); ++g)
        for (int d = m.window().lo; d <= m.window().hi; ++d)
            out.set_act(g, d + k, m.act(g, d));
    out.set_trusted(m.trusted().shifted(k));
    if (!m.labels().empty())
        out.set_labels(m.labels());
    return out;
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b)
{
    if (&a.algebra() != &b.algebra())
        throw std::invalid_argument("direct_sum: algebra mismatch");
    if (a.window().empty())
        return b;
    if (b.window().empty())
        return a;
    Interval w{std::min(a.window().lo, b.window().lo), std::max(a.window().hi, b.window().hi)};
    std::vector<size_t> dims;
    for (int d = w.lo; d <= w.hi; ++d)
        dims.push_back(a.dim(d) + b.dim(d));
    GradedModule out(a.algebra(), w, dims);
    for (size_t g = 0; g < a.num_gens(); ++g)
        for (int d = w.lo; d <= w.hi; ++d) {
            BitMatrix x = a.act_or_zero(g, d), y = b.act_or_zero(g, d);
            BitMatrix m(out.dim(d + a.gen_degree(g)), out.dim(d));
            if (out.window().contains(d + a.gen_degree(g))) {
                m.set_block(0, 0, x);
                m.set_block(x.rows(), x.cols(), y);
            }
            out.set_act(g, d, m);
        }
    out.set_bounded_below(a.bounded_below() && b.bounded_below());
    out.set_complete_top(a.complete_top() && b.complete_top());
    Interval t = effective_trusted(a).intersect(effective_trusted(b));
    out.set_trusted(t.intersect(w));
    return out;
}

GradedModule dual(const GradedModule& m)
{
    Interval w{-m.window().hi, -m.window().lo};
    std::vector<size_t> dims;
    for (int d = w.lo; d <= w.hi; ++d)
        dims.push_back(m.dim(-d));
    GradedModule out(m.algebra(), w, dims);
    for (size_t g = 0; g < m.num_gens(); ++g)
        for (int e = w.lo; e <= w.hi; ++e) {
            int d = -e - m.gen_degree(g);
            out.set_act(g, e, m.act_or_zero(g, d).transpose());
        }
    out.set_bounded_below(m.complete_top());
    out.set_complete_top(m.bounded_below());
    Interval t = m.trusted();
    out.set_trusted(t.empty() ? t : Interval{-t.hi, -t.lo});
    return out;
}

GradedModule restrict_to_e1(const GradedModule& m)
{
    if (m.algebra().name != AlgebraName::A1)
        throw std::invalid_argument("restrict_to_e1: module is not over A1");
    const Algebra& e1 = Algebra::E1();
    GradedModule out = copy_shell(m, e1, m.window());
    for (int d = m.window().lo; d <= m.window().hi; ++d) {
        out.set_act(0, d, m.act(0, d));
        out.set_act(1, d, m.word({0, 1}, d) + m.word({1, 0}, d));
    }
    out.set_trusted(m.trusted());
    if (!m.labels().empty())
        out.set_labels(m.labels());
    return out;
}

GradedModule truncate(const GradedModule& m, int hi)
{
    if (hi >= m.window().hi)
        return m;
    Interval w{m.window().lo, hi};
    GradedModule out = copy_shell(m, m.algebra(), w);
    for (size_t g = 0; g < m.num_gens(); ++g)
        for (int d = w.lo; d <= w.hi; ++d)
            if (d + m.gen_degree(g) <= hi)
                out.set_act(g, d, m.act(g, d));
    out.set_complete_top(m.complete_top() && m.top() <= hi);
    out.set_trusted(m.trusted().intersect(w));
    if (!m.labels().empty()) {
        auto l = m.labels();
        l.resize(w.empty() ? 0 : size_t(w.hi - w.lo + 1));
        out.set_labels(l);
    }
    return out;
}

GradedModule zero_module(const Algebra& alg, Interval window)
{
    std::vector<size_t> dims(window.empty() ? 0 : size_t(window.hi - window.lo + 1), 0);
    GradedModule out(alg, window, dims);
    out.set_complete_top(true);
    return out;
}

bool is_module_map(const ModuleMap& f)
{
    const GradedModule& s = f.source();
    const GradedModule& t = f.target();
    Interval w = s.window();
    for (int d = w.lo; d <= w.hi; ++d)
        for (size_t g = 0; g < s.num_gens(); ++g) {
            int e = d + s.gen_degree(g);
            if (e > w.hi || e + f.shift() > t.window().hi)
                continue;
            BitMatrix lhs = t.act_or_zero(g, d + f.shift()) * f.block(d);
            BitMatrix rhs = f.block(e) * s.act(g, d);
            if (lhs != rhs)
                return false;
        }
    return true;
}

ModuleMap identity_map(ModulePtr m)
{
    ModuleMap f(m, m, 0);
    for (int d = m->window().lo; d <= m->window().hi; ++d)
        f.set_block(d, BitMatrix::identity(m->dim(d)));
    return f;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f)
{
    ModuleMap h(f.source_ptr(), g.target_ptr(), f.shift() + g.shift());
    for (int d = f.source().window().lo; d <= f.source().window().hi; ++d) {
        BitMatrix gb = g.block(d + f.shift());
        BitMatrix fb = f.block(d);
        if (gb.cols() != fb.rows())
            throw std::invalid_argument("compose: middle modules differ");
        h.set_block(d, gb * fb);
    }
    return h;
}

bool maps_equal(const ModuleMap& f, const ModuleMap& g)
{
    if (f.shift() != g.shift())
        return false;
    Interval w = f.source().window();
    for (int d = w.lo; d <= w.hi; ++d)
        if (f.block(d) != g.block(d))
            return false;
    return true;
}

GradedSubspace closure(const GradedModule& m, const std::vector<GeneratorVector>& gens)
{
    Interval w = m.window();
    GradedSubspace s;
    for (int d = w.lo; d <= w.hi; ++d)
        s.emplace_back(m.dim(d));
    for (const auto& gv : gens)
        if (!w.contains(gv.degree))
            throw std::out_of_range("closure: generator outside window");
    for (int d = w.lo; d <= w.hi; ++d) {
        BitMatrix rows(0, m.dim(d));
        for (size_t g = 0; g < m.num_gens(); ++g) {
            int src = d - m.gen_degree(g);
            if (src < w.lo || s[src - w.lo].dim() == 0)
                continue;
            BitMatrix img = m.act(g, src) * s[src - w.lo].basis().transpose();
            rows = BitMatrix::vstack(rows, img.transpose());
        }
        for (const auto& gv : gens)
            if (gv.degree == d)
                rows.append_row(gv.vec);
        s[d - w.lo] = Subspace::span(rows);
    }
    return s;
}

Sub submodule(ModulePtr mp, const GradedSubspace& s)
{
    const GradedModule& m = *mp;
    Interval w = m.window();
    std::vector<size_t> dims;
    for (int d = w.lo; d <= w.hi; ++d)
        dims.push_back(s[d - w.lo].dim());
    GradedModule out(m.algebra(), w, dims);
    out.set_bounded_below(m.bounded_below());
    out.set_complete_top(m.complete_top());
    for (size_t g = 0; g < m.num_gens(); ++g)
        for (int d = w.lo; d <= w.hi; ++d) {
            int e = d + m.gen_degree(g);
            if (e > w.hi)
                continue;
            const Subspace& sd = s[d - w.lo];
            const Subspace& se = s[e - w.lo];
            BitMatrix a(se.dim(), sd.dim());
            const BitMatrix& act = m.act(g, d);
            for (size_t i = 0; i < sd.dim(); ++i) {
                BitVector img = act * sd.basis().row(i);
                if (!se.contains(img))
                    throw std::logic_error("submodule: subspace not closed under the action");
                BitVector c = se.coords(img);
                for (size_t r = 0; r < c.size(); ++r)
                    if (c.get(r))
                        a.set(r, i);
            }
            out.set_act(g, d, a);
        }
    out.set_trusted(m.trusted());
    auto outp = share(out);
    ModuleMap inc(outp, mp, 0);
    for (int d = w.lo; d <= w.hi; ++d)
        inc.set_block(d, s[d - w.lo].basis().transpose());
    return {*outp, inc};
}

Quot quotient(ModulePtr mp, const GradedSubspace& s)
{
    const GradedModule& m = *mp;
    Interval w = m.window();
    std::vector<size_t> dims;
    std::vector<std::vector<size_t>> np;
    for (int d = w.lo; d <= w.hi; ++d) {
        np.push_back(s[d - w.lo].non_pivots());
        dims.push_back(np.back().size());
    }
    GradedModule out(m.algebra(), w, dims);
    out.set_bounded_below(m.bounded_below());
    out.set_complete_top(m.complete_top());
    for (size_t g = 0; g < m.num_gens(); ++g)
        for (int d = w.lo; d <= w.hi; ++d) {
            int e = d + m.gen_degree(g);
            if (e > w.hi)
                continue;
            const BitMatrix& act = m.act(g, d);
            BitMatrix a(out.dim(e), out.dim(d));
            const auto& cols = np[d - w.lo];
            for (size_t j = 0; j < cols.size(); ++j) {
                BitVector c = s[e - w.lo].quotient_coords(act.col(cols[j]));
                for (size_t r = 0; r < c.size(); ++r)
                    if (c.get(r))
                        a.set(r, j);
            }
            out.set_act(g, d, a);
        }
    out.set_trusted(m.trusted());
    if (!m.labels().empty()) {
        std::vector<std::vector<std::string>> l;
        for (int d = w.lo; d <= w.hi; ++d) {
            l.emplace_back();
            for (size_t c : np[d - w.lo])
                l.back().push_back(m.label(d, c));
        }
        out.set_labels(l);
    }
    auto outp = share(out);
    ModuleMap proj(mp, outp, 0);
    for (int d = w.lo; d <= w.hi; ++d) {
        BitMatrix b(out.dim(d), m.dim(d));
        for (size_t i = 0; i < m.dim(d); ++i) {
            BitVector e(m.dim(d));
            e.set(i);
            BitVector c = s[d - w.lo].quotient_coords(e);
            for (size_t r = 0; r < c.size(); ++r)
                if (c.get(r))
                    b.set(r, i);
        }
        proj.set_block(d, b);
    }
    return {*outp, proj};
}

GradedSubspace kernel_of(const ModuleMap& f)
{
    GradedSubspace s;
    Interval w = f.source().window();
    for (int d = w.lo; d <= w.hi; ++d)
        s.push_back(Subspace::span(kernel_basis(f.block(d))));
    return s;
}

GradedSubspace image_of(const ModuleMap& f)
{
    GradedSubspace s;
    Interval w = f.target().window();
    for (int e = w.lo; e <= w.hi; ++e) {
        BitMatrix b = f.block(e - f.shift());
        Subspace sub(f.target().dim(e));
        sub.add_rows(b.transpose());
        s.push_back(sub);
    }
    return s;
}

std::optional<ModuleMap> extend_map(ModulePtr source, ModulePtr target, int shift,
                                    const std::vector<GeneratorImage>& gens)
{
    ModuleMap f(source, target, shift);
    const GradedModule& s = *source;
    const GradedModule& t = *target;
    Interval w = s.window();
    for (int d = w.lo; d <= w.hi; ++d) {
        size_t sd = s.dim(d), td = t.dim(d + shift);
        BitMatrix smat(sd, 0), tmat(td, 0);
        for (size_t g = 0; g < s.num_gens(); ++g) {
            int src = d - s.gen_degree(g);
            if (src < w.lo || s.dim(src) == 0)
                continue;
            smat = BitMatrix::hstack(smat, s.act(g, src));
            tmat = BitMatrix::hstack(tmat, t.act_or_zero(g, src + shift) * f.block(src));
        }
        for (const auto& gi : gens) {
            if (gi.degree != d)
                continue;
            BitMatrix sc(sd, 1), tc(td, 1);
            for (size_t i = 0; i < sd; ++i)
                sc.set(i, 0, gi.source.get(i));
            for (size_t i = 0; i < td; ++i)
                tc.set(i, 0, gi.target.get(i));
            smat = BitMatrix::hstack(smat, sc);
            tmat = BitMatrix::hstack(tmat, tc);
        }
        if (sd == 0)
            continue;
        if (rank(smat) != sd)
            return std::nullopt;
        auto x = solve_matrix(smat.transpose(), tmat.transpose());
        if (!x)
            return std::nullopt;
        f.set_block(d, x->transpose());
    }
    return f;
}

GradedModule regular_representation(const Algebra& alg)
{
    std::vector<size_t> dims(alg.socle_degree + 1, 0);
    std::vector<std::vector<std::string>> labels(alg.socle_degree + 1);
    std::vector<std::vector<int>> pos(alg.socle_degree + 1);
    std::vector<int> local(alg.dim());
    for (size_t b = 0; b < alg.dim(); ++b) {
        int d = alg.basis_degree[b];
        local[b] = int(dims[d]++);
        labels[d].push_back(alg.word_name(alg.basis[b]));
    }
    GradedModule m(alg, {0, alg.socle_degree}, dims);
    for (size_t g = 0; g < alg.num_gens(); ++g)
        for (int d = 0; d <= alg.socle_degree; ++d) {
            BitMatrix a(m.dim(d + alg.gen_degrees[g]), m.dim(d));
            for (int b : alg.basis_in_degree(d)) {
                int p = alg.left_mult(g, b);
                if (p >= 0)
                    a.set(local[p], local[b]);
            }
            m.set_act(g, d, a);
        }
    m.set_labels(labels);
    m.set_complete_top(true);
    return m;
}

FreeModule free_module(const Algebra& alg, const std::vector<int>& gen_degrees, int hi)
{
    FreeModule fm;
    fm.gen_degrees = gen_degrees;
    int lo = gen_degrees.empty() ? hi + 1 : *std::min_element(gen_degrees.begin(), gen_degrees.end());
    if (gen_degrees.empty())
        lo = 0, hi = -1;
    Interval w{lo, hi};
    std::vector<size_t> dims;
    std::vector<std::vector<std::string>> labels;
    for (int d = lo; d <= hi; ++d) {
        fm.basis.emplace_back();
        labels.emplace_back();
        for (size_t i = 0; i < gen_degrees.size(); ++i)
            for (int b : alg.basis_in_degree(d - gen_degrees[i])) {
                fm.basis.back().push_back({int(i), b});
                labels.back().push_back(alg.word_name(alg.basis[b]) + "g" + std::to_string(i));
            }
        dims.push_back(fm.basis.back().size());
    }
    GradedModule m(alg, w, dims);
    for (size_t g = 0; g < alg.num_gens(); ++g)
        for (int d = lo; d <= hi; ++d) {
            int e = d + alg.gen_degrees[g];
            if (e > hi)
                continue;
            BitMatrix a(m.dim(e), m.dim(d));
            const auto& src = fm.basis[d - lo];
            const auto& dst = fm.basis[e - lo];
            for (size_t j = 0; j < src.size(); ++j) {
                int p = alg.left_mult(g, src[j].second);
                if (p < 0)
                    continue;
                auto it = std::find(dst.begin(), dst.end(), std::make_pair(src[j].first, p));
                a.set(it - dst.begin(), j);
            }
            m.set_act(g, d, a);
        }
    int maxg = gen_degrees.empty() ? INT_MIN : *std::max_element(gen_degrees.begin(), gen_degrees.end());
    m.set_complete_top(gen_degrees.empty() || maxg + alg.socle_degree <= hi);
    m.set_labels(labels);
    fm.module = std::move(m);
    return fm;
}

GradedModule cyclic_quotient(const Algebra& alg, const std::vector<Word>& rels, int shift)
{
    auto reg = share(regular_representation(alg));
    std::vector<GeneratorVector> gens;
    for (const auto& r : rels) {
        int b = alg.normal_form(r);
        if (b < 0)
            continue;
        int d = alg.basis_degree[b];
        auto inds = alg.basis_in_degree(d);
        BitVector v(inds.size());
        v.set(std::find(inds.begin(), inds.end(), b) - inds.begin());
        gens.push_back({d, v});
    }
    Quot q = quotient(reg, closure(*reg, gens));
    GradedModule out = suspend(q.module, shift);
    out.set_complete_top(true);
    return out;
}

HomSpace hom_space(const GradedModule& m, const GradedModule& n, int lo, int hi)
{
    HomSpace h;
    h.lo = lo;
    h.hi = hi;
    size_t nv = 0;
    for (int d = lo; d <= hi; ++d) {
        h.offsets.push_back(nv);
        nv += m.dim(d) * n.dim(d);
    }
    h.offsets.push_back(nv);
    auto var = [&](int d, size_t r, size_t c) { return h.offsets[d - lo] + r * m.dim(d) + c; };
    std::vector<BitVector> eqs;
    for (size_t g = 0; g < m.num_gens(); ++g)
        for (int d = lo; d <= hi; ++d) {
            int e = d + m.gen_degree(g);
            if (e > hi)
                continue;
            BitMatrix ng = n.act_or_zero(g, d), mg = m.act_or_zero(g, d);
            for (size_t r = 0; r < n.dim(e); ++r)
                for (size_t c = 0; c < m.dim(d); ++c) {
                    BitVector eq(nv);
                    for (size_t k = 0; k < n.dim(d); ++k)
                        if (ng.get(r, k))
                            eq.flip(var(d, k, c));
                    for (size_t k = 0; k < m.dim(e); ++k)
                        if (mg.get(k, c))
                            eq.flip(var(e, r, k));
                    if (!eq.is_zero())
                        eqs.push_back(eq);
                }
        }
    h.basis = kernel_basis(BitMatrix::from_row_vectors(eqs, nv));
    return h;
}

std::optional<ModuleMap> find_isomorphism(ModulePtr m, ModulePtr n, int lo, int hi, unsigned seed, int tries)
{
    if (&m->algebra() != &n->algebra())
        return std::nullopt;
    for (int d = lo; d <= hi; ++d)
        if (m->dim(d) != n->dim(d))
            return std::nullopt;
    HomSpace h = hom_space(*m, *n, lo, hi);
    if (h.basis.rows() == 0) {
        for (int d = lo; d <= hi; ++d)
            if (m->dim(d))
                return std::nullopt;
    }
    std::mt19937 rng(seed);
    for (int t = 0; t < tries; ++t) {
        BitVector x(h.basis.cols());
        for (size_t r = 0; r < h.basis.rows(); ++r)
            if (t == 0 || (rng() & 1))
                x ^= h.basis.row(r);
        bool ok = true;
        ModuleMap f(m, n, 0);
        for (int d = lo; d <= hi && ok; ++d) {
            size_t k = m->dim(d);
            BitMatrix b(k, k);
            for (size_t r = 0; r < k; ++r)
                for (size_t c = 0; c < k; ++c)
                    if (x.get(h.offsets[d - lo] + r * k + c))
                        b.set(r, c);
            if (rank(b) != k)
                ok = false;
            else if (m->window().contains(d))
                f.set_block(d, b);
        }
        if (ok)
            return f;
    }
    return std::nullopt;
}

bool dims_equal(const GradedModule& a, const GradedModule& b, int lo, int hi)
{
    for (int d = lo; d <= hi; ++d)
        if (a.dim(d) != b.dim(d))
            return false;
    return true;
}

}  // namespace a1mod
