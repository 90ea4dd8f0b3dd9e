#pragma once

#include "a1mod/module.hpp"

#include <optional>

namespace a1mod {

GradedModule tensor(const GradedModule& m, const GradedModule& n);
/* index of (basis i of m in degree a) (x) (basis j of n in degree b) in degree a+b of tensor(m, n) */
size_t tensor_index(const GradedModule& m, const GradedModule& n, int a, size_t i, int b, size_t j);

struct Cover
{
    std::vector<int> generator_degrees;
    /* generator i as a vector of m in degree generator_degrees[i] */
    std::vector<BitVector> generators;
    FreeModule free;
    ModuleMap covering;  // free -> m
    Sub kernel;          // kernel with its inclusion into the free module
};

Cover minimal_cover(ModulePtr m);
GradedModule loops(const GradedModule& m);
GradedModule loops(const GradedModule& m, int times);
GradedModule inverse_loops(const GradedModule& m);

struct ResolutionStage
{
    int s = 0;
    std::vector<int> generator_degrees;
    /* image of each generator in the previous free module (stage 0: in the base module) */
    std::vector<BitVector> generator_images;
    FreeModule free;
    ModulePtr syzygy;
    ModuleMap syzygy_inclusion;  // syzygy -> free
    /* generators in degrees <= trusted_hi are exact */
    int trusted_hi = 0;
};

struct Resolution
{
    ModulePtr base;
    std::vector<ResolutionStage> stages;
    int s_max = 0;
};

Resolution minimal_resolution(ModulePtr m, int s_max);

/*
 * dim Ext^{s,t}(m, n): H^s of Hom(F_., n) where a stage-s generator in degree g
 * contributes n(g - t). Throws TrustError when the resolution does not reach far enough.
 */
size_t ext_dim(const Resolution& res, const GradedModule& n, int s, int t);
size_t ext_dim(ModulePtr m, const GradedModule& n, int s, int t);
/*
 * dim of the image of Ext^{s,t}(m, n) -> Ext^{s,t}(m, n_{<=h}). With n a deep truncation of an
 * infinite module of finite type this is the inverse-limit value, free of truncation artifacts.
 */
size_t ext_dim_limit(const Resolution& res, const GradedModule& n, int s, int t, int h);
/* the generator degree up to which stages s-1..s+1 must be exact for ext_dim(.., n, s, t) */
int ext_degree_needed(const GradedModule& n, int t);

/* k = 0: (Sigma R (x) m)^red ; k = 1: (P0 (x) m)^red. hi is the top degree wanted for the result */
GradedModule localize(const GradedModule& m, int k, std::optional<int> hi = std::nullopt);

}  // namespace a1mod
