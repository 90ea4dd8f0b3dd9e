#pragma once

#include "a1mod/module.hpp"

namespace a1mod {

struct MargolisHomology
{
    int k = 0;
    Interval window;
    Interval trusted;
    std::vector<size_t> dims;     // indexed d - window.lo
    std::vector<BitMatrix> reps;  // rows are cycle representatives

    size_t dim(int d) const { return window.contains(d) ? dims[d - window.lo] : 0; }
    size_t total_trusted() const;
    std::vector<int> trusted_degrees() const;
};

class UnboundedBelowError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class UnclassifiableError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

int q_degree(const Algebra& alg, int k);
/* Q_k from degree d, shape dim(d+|Q_k|) x dim(d) */
BitMatrix q_matrix(const GradedModule& m, int k, int d);
ModuleMap q_operator(ModulePtr m, int k);
MargolisHomology margolis_homology(const GradedModule& m, int k);

/* throws UnboundedBelowError on two-sided windows */
bool is_stably_free(const GradedModule& m);

struct SplitResult
{
    std::vector<int> free_generator_degrees;
    ModulePtr reduced;
    ModuleMap inclusion;   // reduced -> m
    ModuleMap retraction;  // m -> reduced
    /* free generators found at or below this degree are exact */
    int free_trusted_hi = 0;
};

SplitResult reduced_part(ModulePtr m);
ModulePtr reduced(const GradedModule& m);

bool induces_stable_iso(const ModuleMap& f);

/* partial decision procedure; throws UnclassifiableError outside its reach */
bool stable_class_equal(ModulePtr m, ModulePtr n);

}  // namespace a1mod
