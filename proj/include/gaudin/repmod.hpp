#pragma once

#include <string>
#include <vector>

#include "gaudin/liealg.hpp"
#include "gaudin/ratmat.hpp"

namespace gaudin {

// sl2: {lambda}; sl3: {p, q} (highest-weight eigenvalues of h resp. h1, h2).
struct WeightLabel {
    Algebra alg;
    std::vector<long long> w;

    bool operator==(const WeightLabel&) const = default;
};

// Exact generator matrices of one finite-dimensional irreducible
// highest-weight module. Columns act on basis coordinates; the highest-weight
// vector is basis index 0.
struct ModuleRep {
    WeightLabel weight;
    int dim = 0;
    std::vector<RatMat> mats;  // indexed by generator id
    int hw_index = 0;

    const RatMat& mat(Gen g) const;
};

ModuleRep build_sl2_module(long long lambda);
ModuleRep build_sl3_module(long long p, long long q);
ModuleRep build_module(const WeightLabel& w);

long long weyl_dim_sl3(long long p, long long q);

// Scalar c with Casimir matrix == c * identity; throws inconsistency_error
// when the Casimir fails to be scalar (broken construction).
Rat casimir_scalar(const ModuleRep& m);

// Plain-text dump (one generator per block, row-major "a/b" entries) for
// external cross-checking.
std::string dump_module(const ModuleRep& m);

}  // namespace gaudin
