#include "a1mod/algebra.hpp"
#include "a1mod/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace a1mod {

namespace {

std::optional<Word> rewrite(Word w, const std::vector<Relation>& rels)
{
    for (int iter = 0; iter < 4096; ++iter) {
        bool changed = false;
        for (const auto& rel : rels) {
            auto it = std::search(w.begin(), w.end(), rel.lhs.begin(), rel.lhs.end());
            if (it == w.end())
                continue;
            if (!rel.rhs)
                return std::nullopt;
            size_t p = it - w.begin();
            Word nw(w.begin(), w.begin() + p);
            nw.insert(nw.end(), rel.rhs->begin(), rel.rhs->end());
            nw.insert(nw.end(), w.begin() + p + rel.lhs.size(), w.end());
            w = std::move(nw);
            changed = true;
            break;
        }
        if (!changed)
            return w;
    }
    throw std::logic_error("rewriting did not terminate");
}

}  // namespace

Algebra Algebra::make_a1()
{
    Algebra a;
    a.name = AlgebraName::A1;
    a.label = "A1";
    a.gen_names = {"Sq1", "Sq2"};
    a.gen_degrees = {1, 2};
    a.relations = {
        {"Sq1Sq1", {0, 0}, std::nullopt},
        {"Sq2Sq2=Sq1Sq2Sq1", {1, 1}, Word{0, 1, 0}},
        {"Sq2Sq1Sq2Sq1=Sq1Sq2Sq1Sq2", {1, 0, 1, 0}, Word{0, 1, 0, 1}},
    };
    a.coproduct = {
        {{Word{0}, Word{}}, {Word{}, Word{0}}},
        {{Word{1}, Word{}}, {Word{0}, Word{0}}, {Word{}, Word{1}}},
    };
    a.socle_degree = 6;
    a.finish();
    return a;
}

Algebra Algebra::make_e1()
{
    Algebra a;
    a.name = AlgebraName::E1;
    a.label = "E1";
    a.gen_names = {"Q0", "Q1"};
    a.gen_degrees = {1, 3};
    a.relations = {
        {"Q0Q0", {0, 0}, std::nullopt},
        {"Q1Q1", {1, 1}, std::nullopt},
        {"Q0Q1=Q1Q0", {1, 0}, Word{0, 1}},
    };
    a.coproduct = {
        {{Word{0}, Word{}}, {Word{}, Word{0}}},
        {{Word{1}, Word{}}, {Word{}, Word{1}}},
    };
    a.socle_degree = 4;
    a.finish();
    return a;
}

void Algebra::finish()
{
    std::vector<Word> found = {Word{}};
    for (size_t i = 0; i < found.size(); ++i) {
        for (size_t g = 0; g < num_gens(); ++g) {
            Word w = {int(g)};
            w.insert(w.end(), found[i].begin(), found[i].end());
            auto nf = rewrite(w, relations);
            if (nf && std::find(found.begin(), found.end(), *nf) == found.end())
                found.push_back(*nf);
        }
    }
    std::sort(found.begin(), found.end(), [this](const Word& x, const Word& y) {
        int dx = word_degree(x), dy = word_degree(y);
        return dx != dy ? dx < dy : x < y;
    });
    basis = found;
    basis_degree.clear();
    for (const auto& w : basis)
        basis_degree.push_back(word_degree(w));
    if (basis_degree.back() != socle_degree)
        throw std::logic_error("algebra top degree mismatch");
    top_index = int(basis.size()) - 1;

    left_mult_.assign(num_gens(), std::vector<int>(basis.size(), -1));
    for (size_t g = 0; g < num_gens(); ++g)
        for (size_t b = 0; b < basis.size(); ++b) {
            Word w = {int(g)};
            w.insert(w.end(), basis[b].begin(), basis[b].end());
            left_mult_[g][b] = normal_form(w);
        }

    pairing_inv_.assign(socle_degree + 1, {});
    for (int k = 0; k <= socle_degree; ++k) {
        auto as = basis_in_degree(k), xs = basis_in_degree(socle_degree - k);
        BitMatrix p(xs.size(), as.size());
        for (size_t i = 0; i < xs.size(); ++i)
            for (size_t j = 0; j < as.size(); ++j)
                if (product(xs[i], as[j]) == top_index)
                    p.set(i, j);
        auto inv = solve_matrix(p, BitMatrix::identity(xs.size()));
        if (!inv || as.size() != xs.size())
            throw std::logic_error("Frobenius pairing is degenerate");
        pairing_inv_[k].assign(as.size(), std::vector<int>(xs.size(), 0));
        for (size_t j = 0; j < as.size(); ++j)
            for (size_t i = 0; i < xs.size(); ++i)
                pairing_inv_[k][j][i] = inv->get(j, i);
    }
}

int Algebra::word_degree(const Word& w) const
{
    int d = 0;
    for (int g : w)
        d += gen_degrees[g];
    return d;
}

int Algebra::normal_form(const Word& w) const
{
    auto nf = rewrite(w, relations);
    if (!nf)
        return -1;
    auto it = std::find(basis.begin(), basis.end(), *nf);
    if (it == basis.end())
        throw std::logic_error("word " + word_name(w) + " has no normal form in the basis");
    return int(it - basis.begin());
}

int Algebra::product(int a, int b) const
{
    if (a < 0 || b < 0)
        return -1;
    Word w = basis[a];
    w.insert(w.end(), basis[b].begin(), basis[b].end());
    return normal_form(w);
}

std::vector<int> Algebra::basis_in_degree(int d) const
{
    std::vector<int> out;
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis_degree[i] == d)
            out.push_back(int(i));
    return out;
}

std::string Algebra::word_name(const Word& w) const
{
    if (w.empty())
        return "1";
    std::string s;
    for (int g : w)
        s += gen_names[g];
    return s;
}

std::vector<int> Algebra::poincare_series() const
{
    std::vector<int> p(socle_degree + 1, 0);
    for (int d : basis_degree)
        ++p[d];
    return p;
}

int Algebra::gen_index(const std::string& n) const
{
    for (size_t i = 0; i < gen_names.size(); ++i)
        if (gen_names[i] == n)
            return int(i);
    throw std::invalid_argument("unknown generator " + n + " for " + label);
}

const Algebra& Algebra::A1()
{
    static const Algebra a = make_a1();
    return a;
}

const Algebra& Algebra::E1()
{
    static const Algebra a = make_e1();
    return a;
}

const Algebra& Algebra::get(AlgebraName n)
{
    return n == AlgebraName::A1 ? A1() : E1();
}

const Algebra& Algebra::by_label(const std::string& s)
{
    if (s == "A1")
        return A1();
    if (s == "E1")
        return E1();
    throw std::invalid_argument("unknown algebra " + s);
}

}  // namespace a1mod
