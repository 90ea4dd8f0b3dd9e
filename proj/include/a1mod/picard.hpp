#pragma once

#include "a1mod/margolis.hpp"

#include <optional>
#include <string>

namespace a1mod {

struct PicInvariants
{
    std::optional<int> d0, d1, c, e, f, t1;
};

struct PicClass
{
    AlgebraName algebra = AlgebraName::A1;
    int k = 0;
    int shift = 0;
    std::optional<int> n;  // A1, k = 1 only
    PicInvariants inv;

    bool operator==(const PicClass& o) const
    {
        return algebra == o.algebra && k == o.k && shift == o.shift && n == o.n;
    }
    std::string to_string() const;
};

class NotLocalError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/* degree of the unique Q_k homology class; throws unless it is one-dimensional */
int d_invariant(const GradedModule& m, int k);
/* t1 = d1 - c - e + f mod 4, read off the reduced part */
int t1_invariant(const GradedModule& m);
PicClass classify_local(const GradedModule& m, int k);
/* nullopt instead of an exception when m is not Q_k-local with 1-dimensional homology */
std::optional<PicClass> try_classify_local(const GradedModule& m, int k);
/* reduced model of the class representative on [lo, hi] */
GradedModule pic_representative(const PicClass& c, int hi);

struct IntMatrix
{
    std::vector<std::vector<long>> a;
    std::vector<std::string> row_labels, col_labels;
    std::vector<long> row_modulus;  // 0 = integer row

    size_t rows() const { return a.size(); }
    size_t cols() const { return a.empty() ? 0 : a[0].size(); }
    bool operator==(const IntMatrix& o) const { return a == o.a; }
};

struct SmithForm
{
    std::vector<long> diagonal;  // nonzero invariant factors
    size_t rows = 0;
};

SmithForm smith_normal_form(std::vector<std::vector<long>> a);
/* e.g. "Z/2", "0", "Z/4 + Z" */
std::string cokernel_string(const SmithForm& s);

struct LocalizationMatrix
{
    IntMatrix matrix;
    SmithForm snf;
    std::string cokernel;
};

LocalizationMatrix pic_localization_matrix(AlgebraName alg);

enum class IdempotentWitness { None, Zero, F2, P0, SigmaR, P0PlusSigmaR };
std::string witness_name(IdempotentWitness w);

struct IdempotentResult
{
    bool idempotent = false;
    IdempotentWitness witness = IdempotentWitness::None;
    std::string reason;
};

IdempotentResult is_idempotent(const GradedModule& m);

struct IdempotenceWitnesses
{
    ModuleMap diagonal;  // Sigma R -> Sigma R (x) Sigma R
    ModuleMap collapse;  // P0 (x) P0 -> P0
    ModuleMap eps_left, eps_right;  // eps (x) 1 and 1 (x) eps on Sigma R (x) Sigma R
};

IdempotenceWitnesses explicit_idempotence_witnesses(int hi);

}  // namespace a1mod
