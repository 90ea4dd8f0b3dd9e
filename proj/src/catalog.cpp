#include "a1mod/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace a1mod {

bool binom_mod2(long n, long k)
{
    if (k < 0)
        return false;
    // two's complement carries the 2-adic expansion of negative n
    return (k & ~n) == 0;
}

namespace {

int floor_div(int a, int b)
{
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

GradedModule monomial_module(const std::function<bool(long)>& in, int lo, int hi)
{
    const Algebra& alg = Algebra::A1();
    std::vector<size_t> dims;
    std::vector<std::vector<std::string>> labels;
    for (int d = lo; d <= hi; ++d) {
        dims.push_back(in(d) ? 1 : 0);
        labels.emplace_back();
        if (in(d))
            labels.back().push_back("x^" + std::to_string(d));
    }
    GradedModule m(alg, {lo, hi}, dims);
    for (size_t g = 0; g < 2; ++g)
        for (int d = lo; d <= hi; ++d) {
            int e = d + alg.gen_degrees[g];
            BitMatrix a(m.dim(e), m.dim(d));
            if (m.dim(d) && m.dim(e) && binom_mod2(d, alg.gen_degrees[g]))
                a.set(0, 0);
            m.set_act(g, d, a);
        }
    m.set_labels(labels);
    return m;
}

/* copy m onto window [lo, hi]; m must vanish below lo */
GradedModule rewindow(const GradedModule& m, int lo, int hi)
{
    if (!m.is_zero() && m.bottom() < lo)
        throw std::out_of_range("catalog: window lower bound " + std::to_string(lo) + " is above the module bottom " +
                                std::to_string(m.bottom()));
    GradedModule t = truncate(m, hi);
    std::vector<size_t> dims;
    std::vector<std::vector<std::string>> labels;
    for (int d = lo; d <= hi; ++d) {
        dims.push_back(t.dim(d));
        labels.emplace_back();
        for (size_t i = 0; i < t.dim(d); ++i)
            labels.back().push_back(t.label(d, i));
    }
    GradedModule out(m.algebra(), {lo, hi}, dims);
    for (size_t g = 0; g < m.num_gens(); ++g)
        for (int d = lo; d <= hi; ++d)
            if (t.window().contains(d))
                out.set_act(g, d, t.act_or_zero(g, d));
    out.set_labels(labels);
    out.set_bounded_below(m.bounded_below());
    out.set_complete_top(m.complete_top() && (m.is_zero() || m.top() <= hi));
    Interval tr = t.trusted();
    if (m.bounded_below() && !tr.empty())
        tr.lo = lo;
    if (out.complete_top())
        tr.hi = hi;
    out.set_trusted(tr.intersect(out.window()));
    return out;
}

/*
 * Extension 0 -> m -> E -> q -> 0 with Sq1 of the bottom class of q equal to the
 * element of m in the next degree. The remaining cross terms are solved for.
 */
GradedModule nontrivial_extension(const GradedModule& m, const GradedModule& q)
{
    const Algebra& alg = m.algebra();
    Interval w{std::min(m.window().lo, q.window().lo), std::max(m.window().hi, q.window().hi)};
    std::vector<size_t> dims;
    for (int d = w.lo; d <= w.hi; ++d)
        dims.push_back(m.dim(d) + q.dim(d));

    struct Unknown
    {
        size_t g;
        int d;
        size_t r, c;
    };
    std::vector<Unknown> unk;
    for (size_t g = 0; g < alg.num_gens(); ++g)
        for (int d = w.lo; d <= w.hi; ++d) {
            int e = d + alg.gen_degrees[g];
            for (size_t r = 0; r < m.dim(e); ++r)
                for (size_t c = 0; c < q.dim(d); ++c)
                    unk.push_back({g, d, r, c});
        }
    int qb = q.bottom();
    size_t fixed = unk.size();
    for (size_t i = 0; i < unk.size(); ++i)
        if (unk[i].g == 0 && unk[i].d == qb && unk[i].c == 0 && unk[i].r == 0)
            fixed = i;
    if (fixed == unk.size() || m.dim(qb + 1) != 1)
        throw std::logic_error("nontrivial_extension: no class for Sq1 of the bottom");

    auto build = [&](const std::vector<char>& val) {
        GradedModule e(alg, w, dims);
        for (size_t g = 0; g < alg.num_gens(); ++g)
            for (int d = w.lo; d <= w.hi; ++d) {
                int t = d + alg.gen_degrees[g];
                BitMatrix a(e.dim(t), e.dim(d));
                if (t <= w.hi) {
                    a.set_block(0, 0, m.act_or_zero(g, d));
                    a.set_block(m.dim(t), m.dim(d), q.act_or_zero(g, d));
                }
                e.set_act(g, d, a);
            }
        for (size_t i = 0; i < unk.size(); ++i)
            if (val[i]) {
                const Unknown& u = unk[i];
                BitMatrix a = e.act(u.g, u.d);
                a.set(u.r, m.dim(u.d) + u.c);
                e.set_act(u.g, u.d, a);
            }
        return e;
    };
    auto defects = [&](const GradedModule& e) {
        std::vector<bool> bits;
        for (int d = w.lo; d <= w.hi; ++d)
            for (const auto& rel : alg.relations) {
                BitMatrix l = e.word(rel.lhs, d);
                BitMatrix r = rel.rhs ? e.word(*rel.rhs, d) : BitMatrix(l.rows(), l.cols());
                l += r;
                for (size_t i = 0; i < l.rows(); ++i)
                    for (size_t j = 0; j < l.cols(); ++j)
                        bits.push_back(l.get(i, j));
            }
        return bits;
    };
    std::vector<std::vector<bool>> cols;
    for (size_t i = 0; i < unk.size(); ++i) {
        std::vector<char> v(unk.size(), 0);
        v[i] = 1;
        cols.push_back(defects(build(v)));
    }
    size_t neq = cols[0].size();
    BitMatrix a(neq, unk.size() - 1);
    BitVector b(neq);
    for (size_t i = 0, k = 0; i < unk.size(); ++i) {
        for (size_t r = 0; r < neq; ++r) {
            if (i == fixed) {
                if (cols[i][r])
                    b.set(r);
            } else if (cols[i][r]) {
                a.set(r, k);
            }
        }
        if (i != fixed)
            ++k;
    }
    auto x = solve(a, b);
    if (!x)
        throw std::logic_error("nontrivial_extension: no cocycle with the required Sq1");
    std::vector<char> val(unk.size(), 0);
    val[fixed] = 1;
    for (size_t i = 0, k = 0; i < unk.size(); ++i)
        if (i != fixed)
            val[i] = x->get(k++);
    GradedModule e = build(val);
    std::vector<std::vector<std::string>> labels;
    for (int d = w.lo; d <= w.hi; ++d) {
        labels.emplace_back();
        for (size_t i = 0; i < m.dim(d); ++i)
            labels.back().push_back("m:" + m.label(d, i));
        for (size_t i = 0; i < q.dim(d); ++i)
            labels.back().push_back("q:" + q.label(d, i));
    }
    e.set_labels(labels);
    return e;
}

/* degrees >= d of m, always a submodule */
GradedModule above(const GradedModule& m, int d)
{
    auto mp = share(m);
    GradedSubspace s;
    for (int e = m.window().lo; e <= m.window().hi; ++e)
        s.push_back(e >= d ? Subspace::whole(m.dim(e)) : Subspace(m.dim(e)));
    Sub sub = submodule(mp, s);
    GradedModule out = sub.module;
    out.set_labels(m.labels());
    return out;
}

}  // namespace

GradedModule make_P0(int hi)
{
    return monomial_module([](long n) { return n >= -1; }, -1, hi);
}

GradedModule make_P1(int hi)
{
    return monomial_module([](long n) { return n >= 1; }, 1, hi);
}

GradedModule make_R(int hi)
{
    return monomial_module([](long n) { return n == -1 || n >= 1; }, -1, hi);
}

GradedModule make_laurent(int lo, int hi)
{
    if (lo >= hi)
        throw std::invalid_argument("laurent_window: need lo < hi");
    GradedModule m = monomial_module([](long) { return true; }, lo, hi);
    m.set_bounded_below(false);
    int s = Algebra::A1().socle_degree;
    m.set_trusted({lo + s, hi - s});
    return m;
}

GradedModule make_F2(const Algebra& alg)
{
    GradedModule m(alg, {0, 0}, {1});
    m.set_complete_top(true);
    m.set_labels({{"1"}});
    return m;
}

GradedModule make_I_aug(const Algebra& alg)
{
    GradedModule m = above(regular_representation(alg), 1);
    m.set_complete_top(true);
    return m;
}

GradedModule make_I_inv(const Algebra& alg)
{
    GradedModule r = regular_representation(alg);
    GradedModule t = truncate(r, alg.socle_degree - 1);
    GradedModule out = suspend(t, -alg.socle_degree);
    out.set_complete_top(true);
    out.set_trusted(out.window());
    return out;
}

GradedModule make_M(int i)
{
    const Algebra& alg = Algebra::A1();
    int q = floor_div(i, 4), r = i - 4 * q;
    GradedModule m;
    switch (r) {
    case 0:
        m = make_F2(alg);
        break;
    case 1:
        m = cyclic_quotient(alg, {{1}}, 1);
        break;
    case 2:
        m = cyclic_quotient(alg, {{0, 1}}, 2);
        break;
    default:
        m = cyclic_quotient(alg, {{0}, {1, 0, 1}}, 4);
        break;
    }
    return suspend(m, 8 * q);
}

GradedModule make_J()
{
    return suspend(make_M(2), -4);
}

GradedModule make_Fseq(int i)
{
    const Algebra& alg = Algebra::A1();
    int q = floor_div(i, 4), r = i - 4 * q;
    GradedModule m;
    switch (r) {
    case 0:
        m = cyclic_quotient(alg, {{0}}, 0);
        break;
    case 1:
        m = suspend(regular_representation(alg), 2);
        break;
    case 2:
        m = suspend(regular_representation(alg), 4);
        break;
    default:
        m = cyclic_quotient(alg, {{0}}, 7);
        break;
    }
    return suspend(m, 12 * q);
}

GradedModule make_P(int n, int hi)
{
    int q = floor_div(n, 4), r = n - 4 * q;
    int h = hi - 8 * q;
    GradedModule m;
    switch (r) {
    case 0:
        m = make_P0(h);
        break;
    case 1:
        m = make_P1(h);
        break;
    default: {
        GradedModule mi = make_M(r);
        GradedModule q4 = suspend(make_R(h - 4), 4);
        m = truncate(nontrivial_extension(mi, q4), h);
        break;
    }
    }
    m.set_complete_top(false);
    m.set_trusted(m.window());
    return suspend(m, 8 * q);
}

// ---------------------------------------------------------------- polynomials

int PolyElement::degree() const
{
    if (terms.empty())
        return 0;
    int s = 0;
    for (int e : terms.begin()->first)
        s += e;
    return s;
}

PolyElement& PolyElement::operator+=(const PolyElement& o)
{
    if (nvars == 0)
        nvars = o.nvars;
    for (const auto& [mono, c] : o.terms) {
        (void)c;
        auto it = terms.find(mono);
        if (it == terms.end())
            terms.emplace(mono, true);
        else
            terms.erase(it);
    }
    return *this;
}

PolyElement PolyElement::operator+(const PolyElement& o) const
{
    PolyElement r = *this;
    r += o;
    return r;
}

std::string PolyElement::to_string() const
{
    if (terms.empty())
        return "0";
    std::string s;
    for (const auto& [mono, c] : terms) {
        (void)c;
        if (!s.empty())
            s += "+";
        bool small = std::all_of(mono.begin(), mono.end(), [](int e) { return e >= 0 && e < 10; });
        for (size_t i = 0; i < mono.size(); ++i) {
            if (!small && i)
                s += ".";
            s += std::to_string(mono[i]);
        }
    }
    return s;
}

PolyElement PolyElement::monomial(const Monomial& e)
{
    PolyElement p;
    p.nvars = int(e.size());
    p.terms.emplace(e, true);
    return p;
}

PolyElement PolyElement::parse(const std::string& s)
{
    PolyElement p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '+')) {
        Monomial m;
        for (char ch : tok) {
            if (std::isspace(static_cast<unsigned char>(ch)))
                continue;
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw std::invalid_argument("PolyElement::parse: bad character in '" + s + "'");
            m.push_back(ch - '0');
        }
        if (m.empty())
            continue;
        if (p.nvars && int(m.size()) != p.nvars)
            throw std::invalid_argument("PolyElement::parse: terms with different variable counts");
        p += monomial(m);
    }
    return p;
}

PolyElement outer(const PolyElement& a, const PolyElement& b)
{
    PolyElement r;
    r.nvars = a.nvars + b.nvars;
    for (const auto& [x, c1] : a.terms)
        for (const auto& [y, c2] : b.terms) {
            (void)c1, (void)c2;
            Monomial m = x;
            m.insert(m.end(), y.begin(), y.end());
            r += PolyElement::monomial(m);
        }
    r.nvars = a.nvars + b.nvars;
    return r;
}

PolyElement orbit_sum(const Monomial& exponents, int n)
{
    if (int(exponents.size()) > n)
        throw std::invalid_argument("orbit_sum: more exponents than variables");
    Monomial m = exponents;
    m.resize(n, 0);
    std::sort(m.begin(), m.end());
    PolyElement p;
    p.nvars = n;
    do
        p += PolyElement::monomial(m);
    while (std::next_permutation(m.begin(), m.end()));
    return p;
}

PolyElement sq(const PolyElement& p, int i)
{
    PolyElement r;
    r.nvars = p.nvars;
    for (const auto& [e, c] : p.terms) {
        (void)c;
        size_t n = e.size();
        if (i == 1) {
            for (size_t k = 0; k < n; ++k)
                if (e[k] & 1) {
                    Monomial m = e;
                    m[k] += 1;
                    r += PolyElement::monomial(m);
                }
        } else if (i == 2) {
            for (size_t k = 0; k < n; ++k)
                if (binom_mod2(e[k], 2)) {
                    Monomial m = e;
                    m[k] += 2;
                    r += PolyElement::monomial(m);
                }
            for (size_t k = 0; k < n; ++k)
                for (size_t l = k + 1; l < n; ++l)
                    if ((e[k] & 1) && (e[l] & 1)) {
                        Monomial m = e;
                        m[k] += 1;
                        m[l] += 1;
                        r += PolyElement::monomial(m);
                    }
        } else {
            throw std::invalid_argument("sq: only Sq1 and Sq2");
        }
    }
    r.nvars = p.nvars;
    return r;
}

namespace {

void compositions(int d, int n, Monomial& cur, std::vector<Monomial>& out)
{
    if (n == 0) {
        if (d == 0)
            out.push_back(cur);
        return;
    }
    for (int e = 1; e <= d - (n - 1); ++e) {
        cur.push_back(e);
        compositions(d - e, n - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

PolyTensor::PolyTensor(int nvars, int hi) : n_(nvars)
{
    if (nvars < 1)
        throw std::invalid_argument("PolyTensor: need at least one variable");
    const Algebra& alg = Algebra::A1();
    Interval w{nvars, std::max(hi, nvars)};
    std::vector<size_t> dims;
    std::vector<std::vector<std::string>> labels;
    for (int d = w.lo; d <= w.hi; ++d) {
        basis_.emplace_back();
        Monomial cur;
        compositions(d, nvars, cur, basis_.back());
        index_.emplace_back();
        labels.emplace_back();
        for (size_t i = 0; i < basis_.back().size(); ++i) {
            index_.back()[basis_.back()[i]] = i;
            labels.back().push_back(PolyElement::monomial(basis_.back()[i]).to_string());
        }
        dims.push_back(basis_.back().size());
    }
    module_ = GradedModule(alg, w, dims);
    for (size_t g = 0; g < 2; ++g)
        for (int d = w.lo; d <= w.hi; ++d) {
            int e = d + alg.gen_degrees[g];
            BitMatrix a(module_.dim(e), module_.dim(d));
            if (e <= w.hi) {
                const auto& src = basis_[d - w.lo];
                for (size_t j = 0; j < src.size(); ++j) {
                    PolyElement img = sq(PolyElement::monomial(src[j]), alg.gen_degrees[g]);
                    for (const auto& [mono, c] : img.terms) {
                        (void)c;
                        a.set(index_[e - w.lo].at(mono), j);
                    }
                }
            }
            module_.set_act(g, d, a);
        }
    module_.set_labels(labels);
    ptr_ = share(module_);
}

BitVector PolyTensor::vec(const PolyElement& p) const
{
    if (p.is_zero())
        throw std::invalid_argument("PolyTensor::vec: zero element has no degree");
    int d = p.degree();
    Interval w = module_.window();
    if (!w.contains(d))
        throw std::out_of_range("PolyTensor::vec: element outside window");
    BitVector v(module_.dim(d));
    for (const auto& [mono, c] : p.terms) {
        (void)c;
        if (int(mono.size()) != n_)
            throw std::invalid_argument("PolyTensor::vec: wrong number of variables");
        auto it = index_[d - w.lo].find(mono);
        if (it == index_[d - w.lo].end())
            throw std::invalid_argument("PolyTensor::vec: monomial not in the ambient (exponent 0?)");
        v.flip(it->second);
    }
    return v;
}

PolyElement PolyTensor::element(int d, const BitVector& v) const
{
    PolyElement p;
    p.nvars = n_;
    for (size_t i = 0; i < v.size(); ++i)
        if (v.get(i))
            p += PolyElement::monomial(basis(d)[i]);
    return p;
}

PolyElement periodicity_class()
{
    return PolyElement::parse("2222") + orbit_sum({1, 1, 2, 4}, 4);
}

std::vector<PolyElement> embedded_generators(int n, int hi, int alpha)
{
    auto P = [](const std::string& s) { return PolyElement::parse(s); };
    auto mono = [](Monomial m) { return PolyElement::monomial(m); };
    std::vector<PolyElement> g;
    switch (n) {
    case 1:
        for (int i = 1; i <= hi; ++i)
            g.push_back(mono({i}));
        break;
    case 2:
        g = {P("11"), orbit_sum({1, 2}, 2), P("22"), orbit_sum({1, 4}, 2), orbit_sum({2, 4}, 2), P("21")};
        for (int i = 1; 4 + i <= hi; ++i)
            g.push_back(mono({4, i}));
        break;
    case 3:
        g = {orbit_sum({1, 1, 2}, 3),
             P("222") + orbit_sum({1, 1, 4}, 3),
             orbit_sum({1, 2, 4}, 3),
             P("111"),
             orbit_sum({1, 2, 2}, 3),
             P("222"),
             orbit_sum({2, 2, 4}, 3),
             P("124+142+421")};
        for (int i = 1; 8 + i <= hi; ++i)
            g.push_back(mono({4, 4, i}));
        break;
    case 4: {
        PolyElement seven = P("2221") + orbit_sum({1, 1, 1, 4}, 4);
        if (alpha & 1)
            seven += orbit_sum({2, 2, 2, 1}, 4);
        if (alpha & 2)
            seven += P("1114") + outer(orbit_sum({1, 1, 2}, 3), mono({3}));
        g = {periodicity_class(), seven};
        if (alpha == 0) {
            g.push_back(outer(orbit_sum({1, 2, 2}, 3), mono({4})) + outer(orbit_sum({1, 2, 4}, 3), mono({2})));
            g.push_back(P("2224"));
        } else {
            // for alpha = 0 these are exactly the two listed classes
            g.push_back(sq(seven, 2));
            g.push_back(sq(sq(seven, 2), 1));
        }
        // 224i for i = 1, 2 lies outside P_4, so start at 3
        for (int i = 3; 8 + i <= hi; ++i)
            g.push_back(outer(orbit_sum({2, 2, 4}, 3), mono({i})));
        break;
    }
    default:
        if (n < 1)
            throw std::invalid_argument("embedded_generators: n must be positive");
        return embedded_generators(n - 4, hi - 8, alpha);
    }
    std::vector<PolyElement> out;
    for (auto& p : g)
        if (!p.is_zero() && p.degree() <= hi)
            out.push_back(p);
    return out;
}

EmbeddedP embedded_p(int n, int hi, int alpha)
{
    if (n < 1)
        throw std::invalid_argument("embedded_p: n must be positive");
    EmbeddedP e;
    e.n = n;
    int base = n;
    while (base > 4) {
        base -= 4;
        e.ambient_shift += 8;
    }
    int h = hi - e.ambient_shift;
    if (h < base)
        throw std::out_of_range("embedded_p: window too small");
    e.ambient = std::make_shared<PolyTensor>(base, h);
    e.generators = embedded_generators(base, h, alpha);
    std::vector<GeneratorVector> gv;
    for (const auto& p : e.generators)
        gv.push_back({p.degree(), e.ambient->vec(p)});
    e.sub = submodule(e.ambient->ptr(), closure(e.ambient->module(), gv));
    if (e.ambient_shift) {
        // B (x) P_base: B is annihilated, so this is the suspension
        auto amb = share(suspend(e.ambient->module(), e.ambient_shift));
        auto sp = share(suspend(e.sub.module, e.ambient_shift));
        ModuleMap inc(sp, amb, 0);
        for (int d = sp->window().lo; d <= sp->window().hi; ++d)
            inc.set_block(d, e.sub.inclusion.block(d - e.ambient_shift));
        e.sub = {*sp, inc};
    }
    return e;
}

Sub submodule_generated(ModulePtr m, const std::vector<GeneratorVector>& gens)
{
    return submodule(m, closure(*m, gens));
}

// ---------------------------------------------------------------- keys

namespace {

const std::vector<std::string> kPlainNames = {"F2", "B_regular", "A0", "A1modA0", "I_aug", "I_inv", "R", "J", "Laurent"};
const std::vector<std::string> kIndexed = {"P", "M", "Fseq", "PolyTensor", "EmbeddedP"};

}  // namespace

CatalogKey CatalogKey::parse(const std::string& s0)
{
    CatalogKey k;
    std::string s = s0;
    auto bad = [&]() { return std::invalid_argument("unknown catalog key '" + s0 + "'"); };
    if (s.rfind("S^", 0) == 0) {
        size_t pos = 2;
        size_t used = 0;
        try {
            k.suspension = std::stoi(s.substr(pos), &used);
        } catch (const std::exception&) {
            throw bad();
        }
        s = s.substr(pos + used);
        if (!s.empty() && (s[0] == '.' || s[0] == ' '))
            s = s.substr(1);
    }
    for (const auto& n : kPlainNames)
        if (s == n) {
            k.name = n;
            return k;
        }
    for (const auto& n : kIndexed) {
        if (s.rfind(n, 0) != 0)
            continue;
        std::string rest = s.substr(n.size());
        if (rest.empty())
            continue;
        if (rest.front() == '(' && rest.back() == ')')
            rest = rest.substr(1, rest.size() - 2);
        else if (rest.front() == ':')
            rest = rest.substr(1);
        size_t used = 0;
        try {
            k.arg = std::stoi(rest, &used);
        } catch (const std::exception&) {
            continue;
        }
        if (used != rest.size())
            continue;
        k.name = n;
        return k;
    }
    throw bad();
}

std::string CatalogKey::to_string() const
{
    std::string s = suspension ? "S^" + std::to_string(suspension) + "." : "";
    s += name;
    if (std::find(kIndexed.begin(), kIndexed.end(), name) != kIndexed.end())
        s += "(" + std::to_string(arg) + ")";
    return s;
}

GradedModule make(const CatalogKey& key, AlgebraName algname, int lo, int hi)
{
    const Algebra& alg = Algebra::get(algname);
    const Algebra& a1 = Algebra::A1();
    int ulo = lo == kAutoLow ? kAutoLow : lo - key.suspension;
    int uhi = hi - key.suspension;
    GradedModule m;
    bool over_a1 = true;  // built over A1, restricted afterwards if needed
    const std::string& n = key.name;
    if (n == "F2" || n == "B_regular" || n == "I_aug" || n == "I_inv") {
        over_a1 = false;
        if (n == "F2")
            m = make_F2(alg);
        else if (n == "B_regular")
            m = regular_representation(alg);
        else if (n == "I_aug")
            m = make_I_aug(alg);
        else
            m = make_I_inv(alg);
    } else if (n == "A0") {
        GradedModule a(a1, {0, 1}, {1, 1});
        a.set_act(0, 0, BitMatrix::identity(1));
        a.set_complete_top(true);
        a.set_labels({{"1"}, {"Sq1"}});
        m = a;
    } else if (n == "A1modA0") {
        m = make_Fseq(0);
    } else if (n == "R") {
        m = make_R(uhi);
    } else if (n == "P") {
        m = make_P(key.arg, uhi);
    } else if (n == "M") {
        m = make_M(key.arg);
    } else if (n == "J") {
        m = make_J();
    } else if (n == "Fseq") {
        m = make_Fseq(key.arg);
    } else if (n == "Laurent") {
        int l = ulo == kAutoLow ? -uhi : ulo;
        m = make_laurent(l, uhi);
        ulo = l;
    } else if (n == "PolyTensor") {
        m = PolyTensor(key.arg, uhi).module();
    } else if (n == "EmbeddedP") {
        m = embedded_p(key.arg, uhi).sub.module;
    } else {
        throw std::invalid_argument("unknown catalog key '" + key.to_string() + "'");
    }
    if (ulo == kAutoLow)
        ulo = m.is_zero() ? -2 : std::min(-2 - key.suspension, m.bottom());
    if (m.bounded_below())
        m = rewindow(m, ulo, uhi);
    if (over_a1 && algname == AlgebraName::E1)
        m = restrict_to_e1(m);
    return key.suspension ? suspend(m, key.suspension) : m;
}

GradedModule make(const std::string& key, AlgebraName alg, int lo, int hi)
{
    return make(CatalogKey::parse(key), alg, lo, hi);
}

// ---------------------------------------------------------------- maps

namespace {

BitVector unit(size_t n, size_t i)
{
    BitVector v(n);
    v.set(i);
    return v;
}

}  // namespace

ModuleMap f_map(int i)
{
    const Algebra& alg = Algebra::A1();
    int r = i - 4 * floor_div(i, 4);
    static const std::vector<Word> words = {{1}, {1}, {0, 1}, {1, 0, 1}};
    auto src = share(make_Fseq(i + 1));
    auto dst = share(make_Fseq(i));
    int sb = src->bottom(), tb = dst->bottom();
    BitVector img = dst->word(words[r], tb) * unit(dst->dim(tb), 0);
    if (sb != tb + alg.word_degree(words[r]))
        throw std::logic_error("f_map: degree mismatch");
    auto f = extend_map(src, dst, 0, {{sb, unit(src->dim(sb), 0), img}});
    if (!f)
        throw std::logic_error("f_map: generator image does not extend");
    return *f;
}

ModuleMap eta_map(int hi)
{
    auto f2 = share(make_F2());
    auto p0 = share(make_P0(hi));
    ModuleMap f(f2, p0, 0);
    f.set_block(0, BitMatrix::identity(1));
    return f;
}

ModuleMap epsilon_map(int hi)
{
    auto sr = share(suspend(make_R(hi - 1), 1));
    auto f2 = share(make_F2());
    ModuleMap f(sr, f2, 0);
    f.set_block(0, BitMatrix::identity(1));
    return f;
}

ShortExact ses_main(int i, int hi)
{
    if (i < 0 || i > 3)
        throw std::invalid_argument("ses_main: i must be in 0..3");
    auto mi = share(make_M(i));
    auto pi = share(make_P(i, hi));
    int b = mi->bottom();
    ShortExact out;
    bool found = false;
    size_t n = pi->dim(b);
    for (size_t bits = 1; bits < (size_t(1) << n) && !found; ++bits) {
        BitVector img(n);
        for (size_t j = 0; j < n; ++j)
            if (bits >> j & 1)
                img.set(j);
        auto f = extend_map(mi, pi, 0, {{b, unit(mi->dim(b), 0), img}});
        if (!f || !is_module_map(*f))
            continue;
        bool inj = true;
        for (int d = mi->window().lo; d <= mi->window().hi && inj; ++d)
            inj = rank(f->block(d)) == mi->dim(d);
        if (!inj)
            continue;
        Quot q = quotient(pi, image_of(*f));
        GradedModule rr = i == 0 ? make_R(hi) : suspend(make_R(hi - 4), 4);
        auto qp = q.projection.target_ptr();
        auto rp = share(rewindow(rr, qp->window().lo, qp->window().hi));
        auto iso = find_isomorphism(qp, rp, qp->window().lo, qp->window().hi);
        if (!iso)
            continue;
        out.incl = *f;
        out.proj = compose(*iso, q.projection);
        found = true;
    }
    if (!found)
        throw std::logic_error("ses_main: no embedding with the expected quotient");
    return out;
}

}  // namespace a1mod
