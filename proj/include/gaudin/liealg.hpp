#pragma once

#include <array>
#include <vector>

#include "gaudin/types.hpp"

namespace gaudin {

enum class Algebra { sl2, sl3 };

// Generator labels. sl2: e, f, h. sl3: e1, e2, e3, f1, f2, f3, h1, h2 with
// e1 = e12, e2 = e23, e3 = e13 = [e1,e2], f1 = e21, f2 = e32, f3 = e31 = [f2,f1],
// h1 = e11 - e22, h2 = e22 - e33.
struct Gen {
    Algebra alg;
    int id;

    bool operator==(const Gen&) const = default;
};

namespace sl2gen {
inline constexpr int e = 0, f = 1, h = 2, count = 3;
}
namespace sl3gen {
inline constexpr int e1 = 0, e2 = 1, e3 = 2, f1 = 3, f2 = 4, f3 = 5, h1 = 6, h2 = 7,
                     count = 8;
}

int generator_count(Algebra alg);
const char* generator_name(Gen g);
Gen generator_by_name(Algebra alg, const std::string& name);
bool is_raising(Gen g);
bool is_lowering(Gen g);
bool is_cartan(Gen g);

// One term of an integer linear combination of generators.
struct BracketTerm {
    long long coeff;
    Gen gen;
};

// Exact bracket [a, b] as stored in the structure-constant table.
std::vector<BracketTerm> commutator(Gen a, Gen b);

// One term coeff * a * b of a quadratic expression in the universal
// enveloping algebra.
struct CasTerm {
    Rat coeff;
    Gen a;
    Gen b;
};

// The quadratic Casimir as an ordered product sum:
// sl2: ef + fe + (1/2) h^2; sl3: sum_a (e_a f_a + f_a e_a) + (2/3)(h1^2 + h1 h2 + h2^2).
std::vector<CasTerm> casimir_terms(Algebra alg);

// The polarized (symmetric two-site) form used for Omega_ij: same e/f terms,
// Cartan block (2/3) h1 x h1 + (1/3) h1 x h2 + (1/3) h2 x h1 + (2/3) h2 x h2.
std::vector<CasTerm> casimir_pairing(Algebra alg);

// The 3x3 defining matrix of an sl3 generator (exact integer entries) and its
// dual x -> -x^T. Row/column convention: entry(i,j) multiplies u_j -> u_i.
std::array<std::array<long long, 3>, 3> sl3_defining_matrix(int gen_id);
std::array<std::array<long long, 3>, 3> sl3_dual_matrix(int gen_id);

}  // namespace gaudin
