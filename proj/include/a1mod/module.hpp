#pragma once

#include "a1mod/algebra.hpp"
#include "a1mod/gf2.hpp"

#include <climits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace a1mod {

struct Interval
{
    int lo = 0;
    int hi = -1;

    bool empty() const { return lo > hi; }
    bool contains(int d) const { return lo <= d && d <= hi; }
    Interval intersect(const Interval& o) const { return {std::max(lo, o.lo), std::min(hi, o.hi)}; }
    Interval shifted(int k) const { return {lo + k, hi + k}; }
    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

class TrustError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/*
 * A graded module stored on a finite window [lo, hi]. Everything above hi is
 * dropped, so the stored object is always an honest module (a quotient of the
 * true one when the true module extends past hi). `trusted` marks the degrees
 * in which dims and actions agree with the intended infinite module.
 */
class GradedModule
{
public:
    GradedModule() = default;
    GradedModule(const Algebra& alg, Interval window, std::vector<size_t> dims);

    const Algebra& algebra() const { return *alg_; }
    Interval window() const { return window_; }
    Interval trusted() const { return trusted_; }
    void set_trusted(Interval t);
    /* false for two-sided cuts of modules unbounded below (the Laurent window) */
    bool bounded_below() const { return bounded_below_; }
    void set_bounded_below(bool b) { bounded_below_ = b; }
    /* true when the module is zero above the window, i.e. nothing was cut off */
    bool complete_top() const { return complete_top_; }
    void set_complete_top(bool b) { complete_top_ = b; }

    size_t dim(int d) const { return window_.contains(d) ? dims_[d - window_.lo] : 0; }
    const std::vector<size_t>& dims() const { return dims_; }
    size_t total_dim() const;
    /* first / last degree with nonzero dimension; INT_MAX / INT_MIN when zero */
    int bottom() const;
    int top() const;
    bool is_zero() const { return bottom() == INT_MAX; }

    /* generator g from degree d, shape dim(d+|g|) x dim(d) */
    const BitMatrix& act(size_t g, int d) const;
    BitMatrix act_or_zero(size_t g, int d) const;
    void set_act(size_t g, int d, BitMatrix m);
    BitMatrix word(const Word& w, int d) const;
    BitMatrix element(int b, int d) const { return word(alg_->basis[b], d); }

    const std::vector<std::vector<std::string>>& labels() const { return labels_; }
    void set_labels(std::vector<std::vector<std::string>> l) { labels_ = std::move(l); }
    std::string label(int d, size_t i) const;

    int gen_degree(size_t g) const { return alg_->gen_degrees[g]; }
    size_t num_gens() const { return alg_->num_gens(); }

private:
    const Algebra* alg_ = nullptr;
    Interval window_;
    Interval trusted_;
    bool bounded_below_ = true;
    bool complete_top_ = false;
    std::vector<size_t> dims_;
    std::vector<std::vector<BitMatrix>> actions_;
    std::vector<std::vector<std::string>> labels_;
};

using ModulePtr = std::shared_ptr<const GradedModule>;

inline ModulePtr share(GradedModule m)
{
    return std::make_shared<const GradedModule>(std::move(m));
}

/* degree-homogeneous map, degree d of the source to degree d+shift of the target */
class ModuleMap
{
public:
    ModuleMap() = default;
    ModuleMap(ModulePtr source, ModulePtr target, int shift);

    const GradedModule& source() const { return *source_; }
    const GradedModule& target() const { return *target_; }
    ModulePtr source_ptr() const { return source_; }
    ModulePtr target_ptr() const { return target_; }
    int shift() const { return shift_; }

    BitMatrix block(int d) const;
    void set_block(int d, BitMatrix m);
    BitVector apply(int d, const BitVector& v) const { return block(d) * v; }

private:
    ModulePtr source_, target_;
    int shift_ = 0;
    std::vector<BitMatrix> blocks_;
};

struct Violation
{
    int degree;
    std::string relation;
};

struct ValidationReport
{
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const GradedModule& m);
GradedModule suspend(const GradedModule& m, int k);
GradedModule direct_sum(const GradedModule& a, const GradedModule& b);
GradedModule dual(const GradedModule& m);
GradedModule restrict_to_e1(const GradedModule& m);
/* drop everything above hi */
GradedModule truncate(const GradedModule& m, int hi);
GradedModule zero_module(const Algebra& alg, Interval window);

bool is_module_map(const ModuleMap& f);
ModuleMap identity_map(ModulePtr m);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
bool maps_equal(const ModuleMap& f, const ModuleMap& g);

/* per-degree subspaces, indexed by d - window.lo */
using GradedSubspace = std::vector<Subspace>;

struct Sub
{
    GradedModule module;
    ModuleMap inclusion;
};

struct Quot
{
    GradedModule module;
    ModuleMap projection;
};

struct GeneratorVector
{
    int degree;
    BitVector vec;
};

GradedSubspace closure(const GradedModule& m, const std::vector<GeneratorVector>& gens);
Sub submodule(ModulePtr m, const GradedSubspace& s);
Quot quotient(ModulePtr m, const GradedSubspace& s);
GradedSubspace kernel_of(const ModuleMap& f);
GradedSubspace image_of(const ModuleMap& f);

/*
 * Builds the module map determined by its values on a generating set. Returns
 * nullopt when the prescription is inconsistent or the set does not generate.
 */
struct GeneratorImage
{
    int degree;
    BitVector source;
    BitVector target;
};
std::optional<ModuleMap> extend_map(ModulePtr source, ModulePtr target, int shift,
                                    const std::vector<GeneratorImage>& gens);

/* the algebra acting on itself; window [0, socle] unless widened */
GradedModule regular_representation(const Algebra& alg);

struct FreeModule
{
    GradedModule module;
    std::vector<int> gen_degrees;
    /* basis element i of degree d is (generator, algebra basis index) */
    std::vector<std::vector<std::pair<int, int>>> basis;
};

/* free module on generators in the given (sorted) degrees, cut at hi */
FreeModule free_module(const Algebra& alg, const std::vector<int>& gen_degrees, int hi);

/* A/(left ideal generated by relation words), suspended by shift */
GradedModule cyclic_quotient(const Algebra& alg, const std::vector<Word>& rels, int shift);

/* all module maps of degree 0 restricted to degrees [lo,hi]: rows of kernel give a basis */
struct HomSpace
{
    int lo = 0, hi = -1;
    std::vector<size_t> offsets;
    BitMatrix basis;  // each row a map, entries packed degree by degree
};
HomSpace hom_space(const GradedModule& m, const GradedModule& n, int lo, int hi);
/* seeded random search for a degree-preserving isomorphism on [lo,hi] */
std::optional<ModuleMap> find_isomorphism(ModulePtr m, ModulePtr n, int lo, int hi, unsigned seed = 1,
                                          int tries = 64);
bool dims_equal(const GradedModule& a, const GradedModule& b, int lo, int hi);

}  // namespace a1mod
