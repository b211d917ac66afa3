#include <doctest.h>

#include <map>

#include "gaudin/liealg.hpp"

using namespace gaudin;

namespace {

std::map<int, long long> as_map(const std::vector<BracketTerm>& ts) {
    std::map<int, long long> m;
    for (const BracketTerm& t : ts) m[t.gen.id] += t.coeff;
    for (auto it = m.begin(); it != m.end();)
        it = it->second == 0 ? m.erase(it) : std::next(it);
    return m;
}

// acc += c * [a, [b_terms]]
void accumulate_nested(Algebra alg, int a, const std::vector<BracketTerm>& inner,
                       std::map<int, long long>& acc) {
    for (const BracketTerm& t : inner)
        for (const BracketTerm& o : commutator(Gen{alg, a}, t.gen))
            acc[o.gen.id] += t.coeff * o.coeff;
}

}  // namespace

TEST_CASE("bracket table is antisymmetric") {
    for (Algebra alg : {Algebra::sl2, Algebra::sl3}) {
        const int n = generator_count(alg);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                auto ab = as_map(commutator(Gen{alg, a}, Gen{alg, b}));
                auto ba = as_map(commutator(Gen{alg, b}, Gen{alg, a}));
                for (auto& [id, c] : ba) c = -c;
                CHECK(ab == ba);
            }
    }
}

TEST_CASE("bracket table satisfies the Jacobi identity") {
    for (Algebra alg : {Algebra::sl2, Algebra::sl3}) {
        const int n = generator_count(alg);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    std::map<int, long long> acc;
                    accumulate_nested(alg, a, commutator(Gen{alg, b}, Gen{alg, c}), acc);
                    accumulate_nested(alg, b, commutator(Gen{alg, c}, Gen{alg, a}), acc);
                    accumulate_nested(alg, c, commutator(Gen{alg, a}, Gen{alg, b}), acc);
                    for (const auto& [id, v] : acc) CHECK(v == 0);
                }
    }
}

TEST_CASE("fixed sl2 brackets") {
    using namespace sl2gen;
    auto m = as_map(commutator(Gen{Algebra::sl2, e}, Gen{Algebra::sl2, f}));
    CHECK(m == std::map<int, long long>{{h, 1}});
    m = as_map(commutator(Gen{Algebra::sl2, h}, Gen{Algebra::sl2, e}));
    CHECK(m == std::map<int, long long>{{e, 2}});
    m = as_map(commutator(Gen{Algebra::sl2, h}, Gen{Algebra::sl2, f}));
    CHECK(m == std::map<int, long long>{{f, -2}});
}

TEST_CASE("fixed sl3 brackets") {
    using namespace sl3gen;
    auto br = [](int a, int b) { return as_map(commutator(Gen{Algebra::sl3, a}, Gen{Algebra::sl3, b})); };
    CHECK(br(e1, f1) == std::map<int, long long>{{h1, 1}});
    CHECK(br(e2, f2) == std::map<int, long long>{{h2, 1}});
    CHECK(br(e3, f3) == std::map<int, long long>{{h1, 1}, {h2, 1}});
    CHECK(br(e1, e2) == std::map<int, long long>{{e3, 1}});
    CHECK(br(f2, f1) == std::map<int, long long>{{f3, 1}});
    CHECK(br(h1, e1) == std::map<int, long long>{{e1, 2}});
    CHECK(br(h1, e2) == std::map<int, long long>{{e2, -1}});
    CHECK(br(h2, e1) == std::map<int, long long>{{e1, -1}});
    CHECK(br(h2, e2) == std::map<int, long long>{{e2, 2}});
    CHECK(br(h1, e3) == std::map<int, long long>{{e3, 1}});
    CHECK(br(h2, e3) == std::map<int, long long>{{e3, 1}});
    CHECK(br(e1, f3) == std::map<int, long long>{{f2, -1}});
    CHECK(br(e2, f3) == std::map<int, long long>{{f1, 1}});
    CHECK(br(e1, f2).empty());
    CHECK(br(e2, f1).empty());
    CHECK(br(h1, h2).empty());
}

TEST_CASE("defining matrices realize the table brackets") {
    using M3 = std::array<std::array<long long, 3>, 3>;
    auto mul = [](const M3& a, const M3& b) {
        M3 c{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
        return c;
    };
    for (auto matrix_of : {sl3_defining_matrix, sl3_dual_matrix}) {
        for (int a = 0; a < sl3gen::count; ++a)
            for (int b = 0; b < sl3gen::count; ++b) {
                const M3 A = matrix_of(a), B = matrix_of(b);
                M3 lhs = mul(A, B);
                const M3 BA = mul(B, A);
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) lhs[i][j] -= BA[i][j];
                for (const BracketTerm& t : commutator(Gen{Algebra::sl3, a}, Gen{Algebra::sl3, b})) {
                    const M3 Z = matrix_of(t.gen.id);
                    for (int i = 0; i < 3; ++i)
                        for (int j = 0; j < 3; ++j) lhs[i][j] -= t.coeff * Z[i][j];
                }
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) CHECK(lhs[i][j] == 0);
            }
    }
}

TEST_CASE("generator classification and names round-trip") {
    for (Algebra alg : {Algebra::sl2, Algebra::sl3}) {
        int raising = 0, lowering = 0, cartan = 0;
        for (int a = 0; a < generator_count(alg); ++a) {
            const Gen g{alg, a};
            raising += is_raising(g);
            lowering += is_lowering(g);
            cartan += is_cartan(g);
            CHECK(generator_by_name(alg, generator_name(g)) == g);
        }
        if (alg == Algebra::sl2) {
            CHECK(raising == 1);
            CHECK(lowering == 1);
            CHECK(cartan == 1);
        } else {
            CHECK(raising == 3);
            CHECK(lowering == 3);
            CHECK(cartan == 2);
        }
    }
}

TEST_CASE("casimir term lists") {
    // sl2: ef + fe + (1/2) h^2
    auto terms = casimir_terms(Algebra::sl2);
    Rat hh;
    int ef = 0;
    for (const CasTerm& t : terms) {
        if (is_cartan(t.a) && is_cartan(t.b)) hh += t.coeff;
        else ++ef;
    }
    CHECK(hh == Rat(1, 2));
    CHECK(ef == 2);

    // sl3 pairing carries the 2/3,1/3,1/3,2/3 Cartan block
    Rat diag, off;
    for (const CasTerm& t : casimir_pairing(Algebra::sl3)) {
        if (!is_cartan(t.a) || !is_cartan(t.b)) continue;
        if (t.a.id == t.b.id) diag += t.coeff;
        else off += t.coeff;
    }
    CHECK(diag == Rat(4, 3));
    CHECK(off == Rat(2, 3));
}
