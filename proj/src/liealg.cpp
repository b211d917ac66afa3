#include "gaudin/liealg.hpp"

#include <stdexcept>

namespace gaudin {

namespace {

using Mat3 = std::array<std::array<long long, 3>, 3>;

Mat3 elementary(int i, int j) {
    Mat3 m{};
    m[i][j] = 1;
    return m;
}

Mat3 sub(const Mat3& a, const Mat3& b) {
    Mat3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] = a[i][j] - b[i][j];
    return out;
}

Mat3 mul(const Mat3& a, const Mat3& b) {
    Mat3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
    return out;
}

Mat3 defining(int id) {
    switch (id) {
        case sl3gen::e1: return elementary(0, 1);
        case sl3gen::e2: return elementary(1, 2);
        case sl3gen::e3: return elementary(0, 2);
        case sl3gen::f1: return elementary(1, 0);
        case sl3gen::f2: return elementary(2, 1);
        case sl3gen::f3: return elementary(2, 0);
        case sl3gen::h1: return sub(elementary(0, 0), elementary(1, 1));
        case sl3gen::h2: return sub(elementary(1, 1), elementary(2, 2));
        default: throw std::invalid_argument("sl3 generator id out of range");
    }
}

// Decompose a traceless 3x3 integer matrix in the sl3 basis. Off-diagonal
// entries pick out e/f generators; the diagonal part diag(d1,d2,d3) with
// d1+d2+d3=0 is d1*h1 - d3*h2.
std::vector<BracketTerm> decompose_sl3(const Mat3& m) {
    std::vector<BracketTerm> out;
    auto push = [&out](long long c, int id) {
        if (c != 0) out.push_back({c, Gen{Algebra::sl3, id}});
    };
    push(m[0][1], sl3gen::e1);
    push(m[1][2], sl3gen::e2);
    push(m[0][2], sl3gen::e3);
    push(m[1][0], sl3gen::f1);
    push(m[2][1], sl3gen::f2);
    push(m[2][0], sl3gen::f3);
    if (m[0][0] + m[1][1] + m[2][2] != 0)
        throw std::logic_error("sl3 bracket left the traceless subspace");
    push(m[0][0], sl3gen::h1);
    push(-m[2][2], sl3gen::h2);
    return out;
}

}  // namespace

int generator_count(Algebra alg) {
    return alg == Algebra::sl2 ? sl2gen::count : sl3gen::count;
}

const char* generator_name(Gen g) {
    static const char* sl2_names[] = {"e", "f", "h"};
    static const char* sl3_names[] = {"e1", "e2", "e3", "f1", "f2", "f3", "h1", "h2"};
    if (g.alg == Algebra::sl2) {
        if (g.id < 0 || g.id >= sl2gen::count) throw std::invalid_argument("bad sl2 generator id");
        return sl2_names[g.id];
    }
    if (g.id < 0 || g.id >= sl3gen::count) throw std::invalid_argument("bad sl3 generator id");
    return sl3_names[g.id];
}

Gen generator_by_name(Algebra alg, const std::string& name) {
    for (int id = 0; id < generator_count(alg); ++id) {
        Gen g{alg, id};
        if (name == generator_name(g)) return g;
    }
    throw std::invalid_argument("unknown generator name: " + name);
}

bool is_raising(Gen g) {
    return g.alg == Algebra::sl2 ? g.id == sl2gen::e
                                 : (g.id == sl3gen::e1 || g.id == sl3gen::e2 || g.id == sl3gen::e3);
}

bool is_lowering(Gen g) {
    return g.alg == Algebra::sl2 ? g.id == sl2gen::f
                                 : (g.id == sl3gen::f1 || g.id == sl3gen::f2 || g.id == sl3gen::f3);
}

bool is_cartan(Gen g) {
    return g.alg == Algebra::sl2 ? g.id == sl2gen::h
                                 : (g.id == sl3gen::h1 || g.id == sl3gen::h2);
}

std::vector<BracketTerm> commutator(Gen a, Gen b) {
    if (a.alg != b.alg) throw std::invalid_argument("commutator of mixed-algebra generators");
    if (a.alg == Algebra::sl2) {
        // [e,f]=h, [h,e]=2e, [h,f]=-2f
        using namespace sl2gen;
        auto one = [](long long c, int id) {
            return std::vector<BracketTerm>{{c, Gen{Algebra::sl2, id}}};
        };
        if (a.id == b.id) return {};
        if (a.id == e && b.id == f) return one(1, h);
        if (a.id == f && b.id == e) return one(-1, h);
        if (a.id == h && b.id == e) return one(2, e);
        if (a.id == e && b.id == h) return one(-2, e);
        if (a.id == h && b.id == f) return one(-2, f);
        if (a.id == f && b.id == h) return one(2, f);
        throw std::invalid_argument("bad sl2 generator pair");
    }
    return decompose_sl3(sub(mul(defining(a.id), defining(b.id)),
                             mul(defining(b.id), defining(a.id))));
}

std::vector<CasTerm> casimir_terms(Algebra alg) {
    std::vector<CasTerm> out;
    if (alg == Algebra::sl2) {
        using namespace sl2gen;
        auto G = [](int id) { return Gen{Algebra::sl2, id}; };
        out.push_back({Rat(1), G(e), G(f)});
        out.push_back({Rat(1), G(f), G(e)});
        out.push_back({Rat(1, 2), G(h), G(h)});
        return out;
    }
    using namespace sl3gen;
    auto G = [](int id) { return Gen{Algebra::sl3, id}; };
    for (int a = 0; a < 3; ++a) {
        out.push_back({Rat(1), G(e1 + a), G(f1 + a)});
        out.push_back({Rat(1), G(f1 + a), G(e1 + a)});
    }
    out.push_back({Rat(2, 3), G(h1), G(h1)});
    out.push_back({Rat(2, 3), G(h1), G(h2)});
    out.push_back({Rat(2, 3), G(h2), G(h2)});
    return out;
}

std::vector<CasTerm> casimir_pairing(Algebra alg) {
    if (alg == Algebra::sl2) return casimir_terms(Algebra::sl2);
    using namespace sl3gen;
    auto G = [](int id) { return Gen{Algebra::sl3, id}; };
    std::vector<CasTerm> out;
    for (int a = 0; a < 3; ++a) {
        out.push_back({Rat(1), G(e1 + a), G(f1 + a)});
        out.push_back({Rat(1), G(f1 + a), G(e1 + a)});
    }
    out.push_back({Rat(2, 3), G(h1), G(h1)});
    out.push_back({Rat(1, 3), G(h1), G(h2)});
    out.push_back({Rat(1, 3), G(h2), G(h1)});
    out.push_back({Rat(2, 3), G(h2), G(h2)});
    return out;
}

std::array<std::array<long long, 3>, 3> sl3_defining_matrix(int gen_id) {
    return defining(gen_id);
}

std::array<std::array<long long, 3>, 3> sl3_dual_matrix(int gen_id) {
    Mat3 d = defining(gen_id);
    Mat3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] = -d[j][i];
    return out;
}

}  // namespace gaudin
