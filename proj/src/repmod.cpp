#include "gaudin/repmod.hpp"

#include <deque>
#include <sstream>

namespace gaudin {

const RatMat& ModuleRep::mat(Gen g) const {
    if (g.alg != weight.alg) throw std::invalid_argument("generator/module algebra mismatch");
    return mats.at(static_cast<size_t>(g.id));
}

ModuleRep build_sl2_module(long long lambda) {
    if (lambda < 0) throw std::invalid_argument("sl2 weight must be a nonnegative integer");
    const int n = static_cast<int>(lambda) + 1;
    ModuleRep m;
    m.weight = {Algebra::sl2, {lambda}};
    m.dim = n;
    m.mats.assign(sl2gen::count, RatMat(n, n));
    // h v_j = (lambda - 2j) v_j, f v_j = v_{j+1}, e v_j = j(lambda - j + 1) v_{j-1}
    for (int j = 0; j < n; ++j) {
        m.mats[sl2gen::h](j, j) = lambda - 2LL * j;
        if (j + 1 < n) m.mats[sl2gen::f](j + 1, j) = 1;
        if (j > 0) m.mats[sl2gen::e](j - 1, j) = Rat(j) * Rat(lambda - j + 1);
    }
    return m;
}

long long weyl_dim_sl3(long long p, long long q) {
    return (p + 1) * (q + 1) * (p + q + 2) / 2;
}

namespace {

// Kronecker-lift generator g to factor `site` of an n-fold product of
// 3-dimensional representations (fundamental for the first p factors, dual
// for the rest), acting on coordinate vectors of length 3^n.
RatMat site_matrix_3n(int gen_id, int site, int n, int p) {
    const auto entries = site < p ? sl3_defining_matrix(gen_id) : sl3_dual_matrix(gen_id);
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    RatMat out(static_cast<int>(total), static_cast<int>(total));
    long long stride = 1;
    for (int i = site + 1; i < n; ++i) stride *= 3;
    for (long long base = 0; base < total; ++base) {
        const int digit = static_cast<int>((base / stride) % 3);
        for (int to = 0; to < 3; ++to) {
            const long long c = entries[to][digit];
            if (c == 0) continue;
            const long long target = base + (to - digit) * stride;
            out(static_cast<int>(target), static_cast<int>(base)) += c;
        }
    }
    return out;
}

}  // namespace

ModuleRep build_sl3_module(long long p, long long q) {
    if (p < 0 || q < 0) throw std::invalid_argument("sl3 weights must be nonnegative integers");
    if (p + q > 5)
        throw std::invalid_argument("sl3 weights with p+q > 5 exceed the exact construction cap");
    const int n = static_cast<int>(p + q);
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    const int D = static_cast<int>(total);

    // generator action on the full tensor power
    std::vector<RatMat> big(sl3gen::count, RatMat(D, D));
    for (int g = 0; g < sl3gen::count; ++g)
        for (int s = 0; s < n; ++s) big[static_cast<size_t>(g)] = big[static_cast<size_t>(g)] + site_matrix_3n(g, s, n, static_cast<int>(p));

    // top vector: u1 in each fundamental factor (flat digit 0), u3 in each
    // dual factor (digit 2)
    long long top = 0;
    {
        long long stride = 1;
        for (int s = n - 1; s >= 0; --s) {
            if (s >= p) top += 2 * stride;
            stride *= 3;
        }
    }
    std::vector<Rat> topv(static_cast<size_t>(D));
    if (D > 0) topv[static_cast<size_t>(top)] = 1;

    // breadth-first closure under f1, f2 (f1 before f2 at each step)
    RowBasis basis(D);
    basis.add(topv);
    std::deque<std::vector<Rat>> frontier{topv};
    const int lowering[2] = {sl3gen::f1, sl3gen::f2};
    while (!frontier.empty()) {
        std::vector<Rat> v = std::move(frontier.front());
        frontier.pop_front();
        for (int fgen : lowering) {
            std::vector<Rat> image = big[static_cast<size_t>(fgen)].apply(v);
            bool nonzero = false;
            for (const Rat& x : image)
                if (x != 0) { nonzero = true; break; }
            if (nonzero && basis.add(image)) frontier.push_back(std::move(image));
        }
    }

    const int dim = basis.size();
    if (dim != weyl_dim_sl3(p, q))
        throw inconsistency_error("sl3 module dimension " + std::to_string(dim) +
                                  " does not match the Weyl value " +
                                  std::to_string(weyl_dim_sl3(p, q)));

    ModuleRep m;
    m.weight = {Algebra::sl3, {p, q}};
    m.dim = dim;
    m.mats.assign(sl3gen::count, RatMat(dim, dim));
    for (int g = 0; g < sl3gen::count; ++g) {
        for (int j = 0; j < dim; ++j) {
            std::vector<Rat> image = big[static_cast<size_t>(g)].apply(basis.row(j));
            std::vector<Rat> coords = basis.coordinates(image);
            for (int i = 0; i < dim; ++i) m.mats[static_cast<size_t>(g)](i, j) = coords[static_cast<size_t>(i)];
        }
    }
    return m;
}

ModuleRep build_module(const WeightLabel& w) {
    if (w.alg == Algebra::sl2) {
        if (w.w.size() != 1) throw std::invalid_argument("sl2 weight label needs one entry");
        return build_sl2_module(w.w[0]);
    }
    if (w.w.size() != 2) throw std::invalid_argument("sl3 weight label needs two entries");
    return build_sl3_module(w.w[0], w.w[1]);
}

Rat casimir_scalar(const ModuleRep& m) {
    RatMat cas(m.dim, m.dim);
    for (const CasTerm& t : casimir_terms(m.weight.alg))
        cas = cas + m.mat(t.a) * m.mat(t.b) * t.coeff;
    Rat c;
    if (!cas.is_scalar_multiple_of_identity(&c))
        throw inconsistency_error("Casimir matrix is not scalar on the constructed module");
    return c;
}

std::string dump_module(const ModuleRep& m) {
    std::ostringstream os;
    os << (m.weight.alg == Algebra::sl2 ? "sl2" : "sl3") << " weight";
    for (long long v : m.weight.w) os << ' ' << v;
    os << " dim " << m.dim << "\n";
    for (int g = 0; g < generator_count(m.weight.alg); ++g) {
        os << generator_name(Gen{m.weight.alg, g}) << "\n";
        for (int i = 0; i < m.dim; ++i) {
            for (int j = 0; j < m.dim; ++j) {
                if (j) os << ' ';
                os << m.mats[static_cast<size_t>(g)](i, j);
            }
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace gaudin
