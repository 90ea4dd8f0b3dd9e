#pragma once

#include "a1mod/module.hpp"

#include <map>
#include <string>
#include <vector>

namespace a1mod {

/* binom(n, k) mod 2 for k >= 0 and any integer n (2-adic Lucas) */
bool binom_mod2(long n, long k);

struct CatalogKey
{
    std::string name;  // F2, B_regular, A0, A1modA0, I_aug, I_inv, R, P, M, J, Fseq, Laurent, PolyTensor, EmbeddedP
    int arg = 0;
    int suspension = 0;

    static CatalogKey parse(const std::string& s);
    std::string to_string() const;
};

/* lo = kAutoLow picks min(-2, bottom of the module) */
constexpr int kAutoLow = INT_MIN;
GradedModule make(const CatalogKey& key, AlgebraName alg = AlgebraName::A1, int lo = kAutoLow, int hi = 48);
GradedModule make(const std::string& key, AlgebraName alg = AlgebraName::A1, int lo = kAutoLow, int hi = 48);

/* modules built from monomials x^e, e in the listed exponent range */
GradedModule make_P0(int hi);
GradedModule make_P1(int hi);
GradedModule make_R(int hi);
GradedModule make_P(int n, int hi);
GradedModule make_M(int i);
GradedModule make_J();
GradedModule make_F2(const Algebra& alg = Algebra::A1());
GradedModule make_Fseq(int i);
GradedModule make_laurent(int lo, int hi);
GradedModule make_I_aug(const Algebra& alg = Algebra::A1());
GradedModule make_I_inv(const Algebra& alg = Algebra::A1());

/* polynomial elements in F_2[x_1..x_n], exponents >= 1 */
using Monomial = std::vector<int>;

struct PolyElement
{
    int nvars = 0;
    std::map<Monomial, bool> terms;

    int degree() const;
    bool is_zero() const { return terms.empty(); }
    PolyElement& operator+=(const PolyElement& o);
    PolyElement operator+(const PolyElement& o) const;
    bool operator==(const PolyElement& o) const { return nvars == o.nvars && terms == o.terms; }
    std::string to_string() const;

    static PolyElement monomial(const Monomial& e);
    /* e.g. "2221+1114" with single-digit exponents */
    static PolyElement parse(const std::string& s);
};

/* x^e (x) y^f in disjoint variables */
PolyElement outer(const PolyElement& a, const PolyElement& b);
PolyElement orbit_sum(const Monomial& exponents, int n);
PolyElement sq(const PolyElement& p, int i);

class PolyTensor
{
public:
    PolyTensor(int nvars, int hi);

    int nvars() const { return n_; }
    const GradedModule& module() const { return module_; }
    ModulePtr ptr() const { return ptr_; }
    const std::vector<Monomial>& basis(int d) const { return basis_[d - module_.window().lo]; }
    BitVector vec(const PolyElement& p) const;
    PolyElement element(int d, const BitVector& v) const;

private:
    int n_;
    GradedModule module_;
    ModulePtr ptr_;
    std::vector<std::vector<Monomial>> basis_;
    std::vector<std::map<Monomial, size_t>> index_;
};

struct EmbeddedP
{
    int n = 0;
    /* ambient is P^(x)n for n <= 4; for n > 4 it is B (x) P^(x)(n-4), stored as Sigma^8 P^(x)(n-4) */
    std::shared_ptr<PolyTensor> ambient;
    int ambient_shift = 0;
    std::vector<PolyElement> generators;
    Sub sub;  // the generated submodule with its inclusion into the ambient
};

Sub submodule_generated(ModulePtr m, const std::vector<GeneratorVector>& gens);

/* alpha selects the degree-7 class for n = 4 (bit 0 = alpha0, bit 1 = alpha1) */
EmbeddedP embedded_p(int n, int hi, int alpha = 0);
std::vector<PolyElement> embedded_generators(int n, int hi, int alpha = 0);
/* the periodicity class 2222 + orbit(1124), killed by Sq1 and Sq2 */
PolyElement periodicity_class();

/* named maps */
ModuleMap f_map(int i);              // F_{i+1} -> F_i
ModuleMap eta_map(int hi);           // F2 -> P0
ModuleMap epsilon_map(int hi);       // Sigma R -> F2

struct ShortExact
{
    ModuleMap incl;  // M_i -> P_i
    ModuleMap proj;  // P_i -> Sigma^4 R  (R for i = 0)
};
ShortExact ses_main(int i, int hi);

}  // namespace a1mod
