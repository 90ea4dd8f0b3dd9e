#include "a1mod/picard.hpp"
#include "a1mod/catalog.hpp"
#include "a1mod/functors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace a1mod {

std::string PicClass::to_string() const
{
    std::string s = (k == 0 ? "S^" + std::to_string(shift) + " R" : "S^" + std::to_string(shift) + " P");
    if (k == 1)
        s += std::to_string(n.value_or(0));
    return s + (algebra == AlgebraName::A1 ? " over A1" : " over E1");
}

int d_invariant(const GradedModule& m, int k)
{
    MargolisHomology h = margolis_homology(m, k);
    if (h.total_trusted() != 1)
        throw NotLocalError("d_invariant: Q" + std::to_string(k) + " homology has dimension " +
                            std::to_string(h.total_trusted()) + " in trusted degrees, not 1");
    return h.trusted_degrees().front();
}

int t1_invariant(const GradedModule& m)
{
    if (m.algebra().name != AlgebraName::A1)
        throw std::invalid_argument("t1_invariant: A1 modules only");
    int d1 = d_invariant(m, 1);
    ModulePtr r = reduced(m);
    int c = r->bottom();
    if (c == INT_MAX)
        throw NotLocalError("t1_invariant: reduced part is zero");
    int e = int(rank(r->act_or_zero(1, c)));
    int f = int(rank(r->word({1, 1}, c)));
    int t = (d1 - c - e + f) % 4;
    return t < 0 ? t + 4 : t;
}

namespace {

void require_local(const GradedModule& m, int k)
{
    if (margolis_homology(m, 1 - k).total_trusted() != 0)
        throw NotLocalError("classify_local: module is not Q" + std::to_string(k) + "-local");
}

}  // namespace

GradedModule pic_representative(const PicClass& c, int hi)
{
    GradedModule m;
    if (c.k == 0)
        m = suspend(make_R(hi - c.shift), c.shift);
    else
        m = suspend(make_P(c.n.value_or(0), hi - c.shift), c.shift);
    if (c.algebra == AlgebraName::E1)
        m = restrict_to_e1(m);
    return m;
}

PicClass classify_local(const GradedModule& m, int k)
{
    if (k != 0 && k != 1)
        throw std::invalid_argument("classify_local: k must be 0 or 1");
    require_local(m, k);
    PicClass c;
    c.algebra = m.algebra().name;
    c.k = k;
    int d = d_invariant(m, k);
    if (k == 0) {
        c.inv.d0 = d;
        c.shift = d + 1;
    } else if (c.algebra == AlgebraName::E1) {
        c.inv.d1 = d;
        c.shift = d;
    } else {
        ModulePtr r = reduced(m);
        int cc = r->bottom();
        int e = int(rank(r->act_or_zero(1, cc)));
        int f = int(rank(r->word({1, 1}, cc)));
        int t = ((d - cc - e + f) % 4 + 4) % 4;
        c.inv.d1 = d;
        c.inv.c = cc;
        c.inv.e = e;
        c.inv.f = f;
        c.inv.t1 = t;
        c.n = t;
        c.shift = d - 2 * t;
    }
    // the reduced model must match the representative degree by degree
    ModulePtr rm = reduced(m);
    Interval tr = rm->trusted();
    int hi = rm->complete_top() ? rm->window().hi + 8 : tr.hi;
    ModulePtr rr = reduced(pic_representative(c, hi + 8));
    Interval both = tr.intersect(rr->trusted());
    if (!both.empty() && !dims_equal(*rm, *rr, both.lo, both.hi))
        throw std::logic_error("classify_local: reduced dims differ from the representative " + c.to_string());
    return c;
}

std::optional<PicClass> try_classify_local(const GradedModule& m, int k)
{
    try {
        return classify_local(m, k);
    } catch (const NotLocalError&) {
        return std::nullopt;
    } catch (const TrustError&) {
        return std::nullopt;
    } catch (const UnboundedBelowError&) {
        return std::nullopt;
    }
}

// ---------------------------------------------------------------- Smith normal form

SmithForm smith_normal_form(std::vector<std::vector<long>> a)
{
    SmithForm s;
    s.rows = a.size();
    size_t R = a.size(), C = R ? a[0].size() : 0;
    size_t t = 0;
    while (t < R && t < C) {
        // smallest nonzero entry in the remaining block as pivot
        long best = 0;
        size_t pr = 0, pc = 0;
        for (size_t i = t; i < R; ++i)
            for (size_t j = t; j < C; ++j)
                if (a[i][j] != 0 && (best == 0 || std::labs(a[i][j]) < best)) {
                    best = std::labs(a[i][j]);
                    pr = i;
                    pc = j;
                }
        if (best == 0)
            break;
        std::swap(a[t], a[pr]);
        for (auto& row : a)
            std::swap(row[t], row[pc]);
        bool clean = true;
        for (size_t i = t + 1; i < R; ++i) {
            long q = a[i][t] / a[t][t];
            for (size_t j = t; j < C; ++j)
                a[i][j] -= q * a[t][j];
            if (a[i][t] != 0)
                clean = false;
        }
        for (size_t j = t + 1; j < C; ++j) {
            long q = a[t][j] / a[t][t];
            for (size_t i = t; i < R; ++i)
                a[i][j] -= q * a[i][t];
            if (a[t][j] != 0)
                clean = false;
        }
        if (!clean)
            continue;
        // divisibility: fold any entry not divisible by the pivot into the pivot row
        bool divides = true;
        for (size_t i = t + 1; i < R && divides; ++i)
            for (size_t j = t + 1; j < C; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    for (size_t jj = t; jj < C; ++jj)
                        a[t][jj] += a[i][jj];
                    divides = false;
                    break;
                }
        if (!divides)
            continue;
        s.diagonal.push_back(std::labs(a[t][t]));
        ++t;
    }
    return s;
}

std::string cokernel_string(const SmithForm& s)
{
    std::vector<std::string> parts;
    for (long d : s.diagonal)
        if (d != 1)
            parts.push_back("Z/" + std::to_string(d));
    for (size_t i = s.diagonal.size(); i < s.rows; ++i)
        parts.push_back("Z");
    if (parts.empty())
        return "0";
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i)
        out += (i ? " + " : "") + parts[i];
    return out;
}

LocalizationMatrix pic_localization_matrix(AlgebraName algname)
{
    const Algebra& alg = Algebra::get(algname);
    const int hi = 40;
    std::vector<std::pair<std::string, GradedModule>> basis;
    basis.push_back({"Sigma F2", suspend(make_F2(alg), 1)});
    basis.push_back({"Omega F2", loops(make_F2(alg))});
    if (algname == AlgebraName::A1)
        basis.push_back({"J", make_J()});

    LocalizationMatrix out;
    IntMatrix& mat = out.matrix;
    mat.row_labels = {"d0 L0", "d1 L1"};
    mat.row_modulus = {0, 0};
    if (algname == AlgebraName::A1) {
        mat.row_labels.push_back("t1 L1");
        mat.row_modulus.push_back(4);
    }
    mat.a.assign(mat.row_labels.size(), std::vector<long>(basis.size(), 0));
    for (size_t j = 0; j < basis.size(); ++j) {
        mat.col_labels.push_back(basis[j].first);
        GradedModule l0 = localize(basis[j].second, 0, hi);
        GradedModule l1 = localize(basis[j].second, 1, hi);
        mat.a[0][j] = d_invariant(l0, 0);
        mat.a[1][j] = d_invariant(l1, 1);
        if (algname == AlgebraName::A1)
            mat.a[2][j] = t1_invariant(l1);
    }
    // target Z + Z (+ Z/4): append relation columns for the torsion rows
    std::vector<std::vector<long>> pres = mat.a;
    for (size_t i = 0; i < mat.rows(); ++i)
        if (mat.row_modulus[i])
            for (size_t r = 0; r < pres.size(); ++r)
                pres[r].push_back(r == i ? mat.row_modulus[i] : 0);
    out.snf = smith_normal_form(pres);
    out.cokernel = cokernel_string(out.snf);
    return out;
}

// ---------------------------------------------------------------- idempotents

std::string witness_name(IdempotentWitness w)
{
    switch (w) {
    case IdempotentWitness::Zero:
        return "0";
    case IdempotentWitness::F2:
        return "F2";
    case IdempotentWitness::P0:
        return "P0";
    case IdempotentWitness::SigmaR:
        return "Sigma R";
    case IdempotentWitness::P0PlusSigmaR:
        return "P0 + Sigma R";
    default:
        return "none";
    }
}

IdempotentResult is_idempotent(const GradedModule& m)
{
    IdempotentResult res;
    MargolisHomology h[2] = {margolis_homology(m, 0), margolis_homology(m, 1)};
    if (h[0].trusted.empty() && h[1].trusted.empty())
        throw TrustError("is_idempotent: empty trusted range");
    for (int k = 0; k < 2; ++k) {
        if (h[k].total_trusted() > 1) {
            res.reason = "H(M,Q" + std::to_string(k) + ") has dimension > 1";
            return res;
        }
        for (int d : h[k].trusted_degrees())
            if (d != 0) {
                res.reason = "H(M,Q" + std::to_string(k) + ") sits in degree " + std::to_string(d) + ", not 0";
                return res;
            }
    }
    ModulePtr rm = reduced(m);
    ModulePtr rmm = reduced(tensor(m, m));
    Interval range = rm->trusted().intersect(rmm->trusted());
    if (range.empty())
        throw TrustError("is_idempotent: empty trusted range");
    if (rm->complete_top() && rmm->complete_top())
        range = {std::min(rm->window().lo, rmm->window().lo), std::max(rm->window().hi, rmm->window().hi)};
    if (!dims_equal(*rm, *rmm, range.lo, range.hi)) {
        res.reason = "reduced dims of M and M (x) M differ";
        return res;
    }
    bool q0 = h[0].total_trusted() == 1, q1 = h[1].total_trusted() == 1;
    res.idempotent = true;
    if (!q0 && !q1)
        res.witness = IdempotentWitness::Zero;
    else if (q0 && !q1)
        res.witness = IdempotentWitness::SigmaR;
    else if (!q0 && q1)
        res.witness = IdempotentWitness::P0;
    else {
        size_t tot = 0;
        for (int d = range.lo; d <= range.hi; ++d)
            tot += rm->dim(d);
        bool f2 = tot == 1 && rm->dim(0) == 1;
        res.witness = f2 ? IdempotentWitness::F2 : IdempotentWitness::P0PlusSigmaR;
    }
    return res;
}

IdempotenceWitnesses explicit_idempotence_witnesses(int hi)
{
    IdempotenceWitnesses w;
    // Sigma R with Sigma x^n in degree n+1
    auto sr = share(suspend(make_R(hi - 1), 1));
    auto srsr = share(tensor(*sr, *sr));
    auto in_r = [](int e) { return e == -1 || e >= 1; };

    w.diagonal = ModuleMap(sr, srsr, 0);
    for (int n = -1; n + 1 <= sr->window().hi; ++n) {
        if (!in_r(n) || !srsr->window().contains(n + 1))
            continue;
        BitMatrix b(srsr->dim(n + 1), 1);
        for (int i = -1; i <= n; ++i) {
            int j = n - 1 - i;
            if (!in_r(i) || !in_r(j))
                continue;
            b.flip(tensor_index(*sr, *sr, i + 1, 0, j + 1, 0), 0);
        }
        w.diagonal.set_block(n + 1, b);
    }
    // eps (x) 1 and 1 (x) eps, identifying F2 (x) Sigma R with Sigma R
    w.eps_left = ModuleMap(srsr, sr, 0);
    w.eps_right = ModuleMap(srsr, sr, 0);
    for (int d = srsr->window().lo; d <= srsr->window().hi; ++d) {
        BitMatrix l(sr->dim(d), srsr->dim(d)), r(sr->dim(d), srsr->dim(d));
        if (sr->dim(d)) {
            if (sr->dim(0))
                l.set(0, tensor_index(*sr, *sr, 0, 0, d, 0));
            r.set(0, tensor_index(*sr, *sr, d, 0, 0, 0));
        }
        if (sr->window().contains(d)) {
            w.eps_left.set_block(d, l);
            w.eps_right.set_block(d, r);
        }
    }

    auto p0 = share(make_P0(hi));
    auto pp = share(tensor(*p0, *p0));
    auto pt = share(truncate(*p0, pp->window().hi));
    w.collapse = ModuleMap(pp, pt, 0);
    auto mod = [](int a, int m) { return ((a % m) + m) % m; };
    for (int d = pp->window().lo; d <= pp->window().hi; ++d) {
        BitMatrix b(pt->dim(d), pp->dim(d));
        for (int i = -1; i <= d + 1; ++i) {
            int j = d - i;
            if (j < -1 || !p0->window().contains(i) || !p0->window().contains(j))
                continue;
            if (mod(i, 4) == 3 && mod(j, 2) == 1)
                continue;
            if (pt->dim(d))
                b.set(0, tensor_index(*p0, *p0, i, 0, j, 0));
        }
        w.collapse.set_block(d, b);
    }
    return w;
}

}  // namespace a1mod
