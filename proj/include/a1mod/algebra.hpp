#pragma once

#include <optional>
#include <string>
#include <vector>

namespace a1mod {

enum class AlgebraName { A1, E1 };

/* w = {g1, ..., gk} stands for the composite g1 g2 ... gk, so gk acts first */
using Word = std::vector<int>;

struct Relation
{
    std::string name;
    Word lhs;
    std::optional<Word> rhs;  // nullopt means lhs = 0
};

class Algebra
{
public:
    AlgebraName name;
    std::string label;
    std::vector<std::string> gen_names;
    std::vector<int> gen_degrees;
    std::vector<Relation> relations;
    /* coproduct[g] lists the terms u (x) v of Delta(g) */
    std::vector<std::vector<std::pair<Word, Word>>> coproduct;

    std::vector<Word> basis;
    std::vector<int> basis_degree;
    int socle_degree = 0;
    int top_index = 0;

    static const Algebra& get(AlgebraName n);
    static const Algebra& A1();
    static const Algebra& E1();
    static const Algebra& by_label(const std::string& s);

    size_t num_gens() const { return gen_names.size(); }
    size_t dim() const { return basis.size(); }
    int word_degree(const Word& w) const;
    /* normal form index of a word, or -1 if it is zero */
    int normal_form(const Word& w) const;
    int product(int a, int b) const;
    int left_mult(size_t g, int b) const { return left_mult_[g][b]; }
    std::vector<int> basis_in_degree(int d) const;
    std::string word_name(const Word& w) const;
    std::vector<int> poincare_series() const;
    /* pairing_inverse(k)[a][x] for a in degree k, x in degree socle-k */
    const std::vector<std::vector<int>>& pairing_inverse(int k) const { return pairing_inv_[k]; }
    int gen_index(const std::string& n) const;

private:
    std::vector<std::vector<int>> left_mult_;
    std::vector<std::vector<std::vector<int>>> pairing_inv_;
    void finish();
    static Algebra make_a1();
    static Algebra make_e1();
};

}  // namespace a1mod
