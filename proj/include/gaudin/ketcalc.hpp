#pragma once

#include <map>
#include <string>
#include <vector>

#include "gaudin/tensorspace.hpp"
#include "gaudin/types.hpp"

namespace gaudin {

// Scalar policy for the formal-ket calculus. Complex labels support the
// numeric pipeline; rational labels give the exact fixture mode.
template <class S>
struct ket_scalar;

template <>
struct ket_scalar<Cplx> {
    static bool less(const Cplx& a, const Cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    }
    static bool is_zero(const Cplx& v) { return v == 0.0; }
    static double magnitude(const Cplx& v) { return std::abs(v); }
    // drop numerically-dead terms relative to the largest coefficient
    static bool drop(const Cplx& v, double max_mag) { return std::abs(v) < 1e-15 * max_mag; }
    static Cplx from_ratio(long long num, long long den) {
        return Cplx(static_cast<double>(num) / static_cast<double>(den), 0.0);
    }
};

template <>
struct ket_scalar<Rat> {
    static bool less(const Rat& a, const Rat& b) { return a < b; }
    static bool is_zero(const Rat& v) { return v == 0; }
    static double magnitude(const Rat& v) { return std::abs(rat_to_double(v)); }
    static bool drop(const Rat& v, double) { return v == 0; }
    static Rat from_ratio(long long num, long long den) { return Rat(num, den); }
};

// Label of a formal ket: three root lists, stored canonically sorted.
// Entries are only ever copied from input lists and evaluation points, never
// produced by arithmetic, so exact scalar comparison is a sound map key.
template <class S>
struct KetLabel {
    std::vector<S> w1, w2, w3;

    KetLabel() = default;
    KetLabel(std::vector<S> a, std::vector<S> b, std::vector<S> c)
        : w1(std::move(a)), w2(std::move(b)), w3(std::move(c)) {
        canonicalize(w1);
        canonicalize(w2);
        canonicalize(w3);
        for (const S& x : w1)
            for (const S& y : w2)
                if (x == y) throw collision_error("ket label: first and second lists intersect");
    }

    int k() const { return static_cast<int>(w1.size()); }
    int l() const { return static_cast<int>(w2.size()); }
    int m() const { return static_cast<int>(w3.size()); }

  private:
    static void canonicalize(std::vector<S>& v) {
        std::sort(v.begin(), v.end(), ket_scalar<S>::less);
        for (size_t i = 1; i < v.size(); ++i)
            if (v[i - 1] == v[i]) throw collision_error("ket label: coinciding entries in a list");
    }
};

template <class S>
struct KetLabelLess {
    bool operator()(const KetLabel<S>& a, const KetLabel<S>& b) const {
        return list_less(a.w1, b.w1) ? true
               : list_less(b.w1, a.w1) ? false
               : list_less(a.w2, b.w2) ? true
               : list_less(b.w2, a.w2) ? false
                                       : list_less(a.w3, b.w3);
    }

  private:
    static bool list_less(const std::vector<S>& a, const std::vector<S>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = 0; i < a.size(); ++i) {
            if (ket_scalar<S>::less(a[i], b[i])) return true;
            if (ket_scalar<S>::less(b[i], a[i])) return false;
        }
        return false;
    }
};

template <class S>
struct FormalKetSum {
    std::map<KetLabel<S>, S, KetLabelLess<S>> terms;

    void add(const KetLabel<S>& lab, const S& coeff) {
        auto [it, fresh] = terms.emplace(lab, coeff);
        if (!fresh) it->second += coeff;
    }
    FormalKetSum& operator+=(const FormalKetSum& o) {
        for (const auto& [lab, c] : o.terms) add(lab, c);
        return *this;
    }
    void scale_by(const S& c) {
        for (auto& [lab, v] : terms) v *= c;
    }
    double max_coeff() const {
        double mx = 0.0;
        for (const auto& [lab, c] : terms) mx = std::max(mx, ket_scalar<S>::magnitude(c));
        return mx;
    }
    void cleanup() {
        const double mx = max_coeff();
        for (auto it = terms.begin(); it != terms.end();)
            it = ket_scalar<S>::drop(it->second, mx) ? terms.erase(it) : std::next(it);
    }
    size_t size() const { return terms.size(); }
};

template <class S>
FormalKetSum<S> single_ket(const KetLabel<S>& lab) {
    FormalKetSum<S> s;
    s.add(lab, S(1));
    return s;
}

// Largest coefficient magnitude of the difference a - b, over the union of
// labels. Labels never disagree by rounding because both sides copy from the
// same source lists.
template <class S>
double max_coeff_diff(const FormalKetSum<S>& a, const FormalKetSum<S>& b) {
    double mx = 0.0;
    for (const auto& [lab, c] : a.terms) {
        auto it = b.terms.find(lab);
        const S d = it == b.terms.end() ? c : S(c - it->second);
        mx = std::max(mx, ket_scalar<S>::magnitude(d));
    }
    for (const auto& [lab, c] : b.terms)
        if (a.terms.find(lab) == a.terms.end())
            mx = std::max(mx, ket_scalar<S>::magnitude(c));
    return mx;
}

// Tolerance-based label equality used by tests: entrywise within
// rel_tol * (largest entry magnitude across both labels).
bool labels_close(const KetLabel<Cplx>& a, const KetLabel<Cplx>& b, double rel_tol = 1e-12);

namespace ketdetail {

template <class S>
std::vector<S> without(const std::vector<S>& v, size_t idx) {
    std::vector<S> out;
    out.reserve(v.size() - 1);
    for (size_t i = 0; i < v.size(); ++i)
        if (i != idx) out.push_back(v[i]);
    return out;
}

template <class S>
std::vector<S> without2(const std::vector<S>& v, size_t i, size_t j) {
    std::vector<S> out;
    out.reserve(v.size() - 2);
    for (size_t t = 0; t < v.size(); ++t)
        if (t != i && t != j) out.push_back(v[t]);
    return out;
}

template <class S>
std::vector<S> with(const std::vector<S>& v, const S& x) {
    std::vector<S> out(v);
    out.push_back(x);
    return out;
}

template <class S>
S ginv(const S& d) {
    if (ket_scalar<S>::is_zero(d)) throw collision_error("vanishing denominator in ket formula");
    return S(1) / d;
}

}  // namespace ketdetail

// P |w1,w2,w3> = sum_{r,s} |w1 - w1_r, w2 - w2_s, w3 + w1_r> / (w2_s - w1_r);
// zero when either of the first two lists is empty.
template <class S>
FormalKetSum<S> apply_P(const KetLabel<S>& lab) {
    using namespace ketdetail;
    FormalKetSum<S> out;
    for (size_t r = 0; r < lab.w1.size(); ++r)
        for (size_t s = 0; s < lab.w2.size(); ++s)
            out.add(KetLabel<S>(without(lab.w1, r), without(lab.w2, s), with(lab.w3, lab.w1[r])),
                    ginv<S>(lab.w2[s] - lab.w1[r]));
    return out;
}

template <class S>
FormalKetSum<S> apply_P(const FormalKetSum<S>& s) {
    FormalKetSum<S> out;
    for (const auto& [lab, c] : s.terms) {
        FormalKetSum<S> img = apply_P(lab);
        img.scale_by(c);
        out += img;
    }
    out.cleanup();
    return out;
}

// P^n |w1,w2,{}> as one sum over ordered index sets R_n, S_n with weight
// 1/W_n, W_n = prod_k (w2_{s_k} - w1_{r_k}). Out-of-range n gives the zero sum.
template <class S>
FormalKetSum<S> p_power_closed(const std::vector<S>& w1, const std::vector<S>& w2, int n) {
    using namespace ketdetail;
    FormalKetSum<S> out;
    const int k = static_cast<int>(w1.size()), l = static_cast<int>(w2.size());
    if (n < 0 || n > std::min(k, l)) return out;
    std::vector<size_t> rs(static_cast<size_t>(n)), ss(static_cast<size_t>(n));
    std::vector<bool> used_r(static_cast<size_t>(k), false), used_s(static_cast<size_t>(l), false);
    auto emit = [&] {
        std::vector<S> rem1, rem2, moved;
        for (size_t i = 0; i < w1.size(); ++i) (used_r[i] ? moved : rem1).push_back(w1[i]);
        for (size_t i = 0; i < w2.size(); ++i)
            if (!used_s[i]) rem2.push_back(w2[i]);
        S coeff = S(1);
        for (int j = 0; j < n; ++j) coeff *= ginv<S>(w2[ss[static_cast<size_t>(j)]] - w1[rs[static_cast<size_t>(j)]]);
        out.add(KetLabel<S>(std::move(rem1), std::move(rem2), std::move(moved)), coeff);
    };
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            emit();
            return;
        }
        for (size_t r = 0; r < w1.size(); ++r) {
            if (used_r[r]) continue;
            used_r[r] = true;
            for (size_t s = 0; s < w2.size(); ++s) {
                if (used_s[s]) continue;
                used_s[s] = true;
                rs[static_cast<size_t>(depth)] = r;
                ss[static_cast<size_t>(depth)] = s;
                self(self, depth + 1);
                used_s[s] = false;
            }
            used_r[r] = false;
        }
    };
    rec(rec, 0);
    return out;
}

// |w1,w2) = sum_{n=0}^{min(k,l)} P^n/n! |w1,w2,{}>. Finite because P strictly
// shrinks both lists.
template <class S>
FormalKetSum<S> p_series(const std::vector<S>& w1, const std::vector<S>& w2) {
    FormalKetSum<S> cur = single_ket(KetLabel<S>(w1, w2, {}));
    FormalKetSum<S> total = cur;
    long long fact = 1;
    const int nmax = static_cast<int>(std::min(w1.size(), w2.size()));
    for (int n = 1; n <= nmax; ++n) {
        cur = apply_P(cur);
        fact *= n;
        FormalKetSum<S> term = cur;
        term.scale_by(ket_scalar<S>::from_ratio(1, fact));
        total += term;
    }
    total.cleanup();
    return total;
}

// Pole/weight description of the two weight functions lambda_1, lambda_2;
// lambda_3 = lambda_1 + lambda_2 throughout.
template <class S>
struct WeightFunctions {
    std::vector<S> poles;
    std::vector<S> m1, m2;

    S lambda(int a, const S& u) const {
        using namespace ketdetail;
        S v1 = S(0), v2 = S(0);
        for (size_t i = 0; i < poles.size(); ++i) {
            const S q = ginv<S>(u - poles[i]);
            v1 += m1[i] * q;
            v2 += m2[i] * q;
        }
        return a == 1 ? v1 : a == 2 ? v2 : S(v1 + v2);
    }
    S lambda_prime(int a, const S& u) const {
        using namespace ketdetail;
        S v1 = S(0), v2 = S(0);
        for (size_t i = 0; i < poles.size(); ++i) {
            const S q = ginv<S>(u - poles[i]);
            v1 -= m1[i] * q * q;
            v2 -= m2[i] * q * q;
        }
        return a == 1 ? v1 : a == 2 ? v2 : S(v1 + v2);
    }
    S vacuum_tau(const S& u) const {
        const S l1 = lambda(1, u), l2 = lambda(2, u);
        return S(l1 * l1 + l1 * l2 + l2 * l2) * ket_scalar<S>::from_ratio(1, 3) -
               lambda_prime(1, u) - lambda_prime(2, u);
    }
};

// Weight functions of an sl3 tensor space.
WeightFunctions<Cplx> weight_functions(const TensorSpace& T);

// Eigenvalue form on an excited configuration: the spectral variable enters
// through lambda_a(u), the pairwise sums stay at the roots.
template <class S>
S excited_tau(const S& u, const std::vector<S>& w1, const std::vector<S>& w2,
              const WeightFunctions<S>& wf) {
    using namespace ketdetail;
    S out = wf.vacuum_tau(u);
    const S l1u = wf.lambda(1, u), l2u = wf.lambda(2, u);
    for (size_t r = 0; r < w1.size(); ++r) {
        S br = l1u;
        for (size_t rh = 0; rh < w1.size(); ++rh)
            if (rh != r) br -= S(2) * ginv<S>(w1[r] - w1[rh]);
        for (const S& s : w2) br += ginv<S>(w1[r] - s);
        out -= br * ginv<S>(u - w1[r]);
    }
    for (size_t s = 0; s < w2.size(); ++s) {
        S br = l2u;
        for (const S& r : w1) br += ginv<S>(w2[s] - r);
        for (size_t sh = 0; sh < w2.size(); ++sh)
            if (sh != s) br -= S(2) * ginv<S>(w2[s] - w2[sh]);
        out -= br * ginv<S>(u - w2[s]);
    }
    return out;
}

enum class Component { I1_0, I1_m, I2_0, I2_m, I2_p, I3_0, I3_p, I0_0, I0_p };

inline constexpr Component kAllComponents[] = {
    Component::I1_0, Component::I1_m, Component::I2_0, Component::I2_m, Component::I2_p,
    Component::I3_0, Component::I3_p, Component::I0_0, Component::I0_p};

const char* component_name(Component c);
Component parse_component(const std::string& name);

namespace ketdetail {

template <class S>
FormalKetSum<S> comp_I1_0(const S& u, const KetLabel<S>& L, const WeightFunctions<S>& wf) {
    FormalKetSum<S> out;
    for (size_t r = 0; r < L.w1.size(); ++r) {
        S br = wf.lambda(1, L.w1[r]);
        for (size_t rh = 0; rh < L.w1.size(); ++rh)
            if (rh != r) br -= S(2) * ginv<S>(L.w1[r] - L.w1[rh]);
        for (const S& s : L.w2) br += ginv<S>(L.w1[r] - s);
        for (const S& t : L.w3) br -= ginv<S>(L.w1[r] - t);
        out.add(KetLabel<S>(with(without(L.w1, r), u), L.w2, L.w3), br * ginv<S>(u - L.w1[r]));
    }
    for (size_t r = 0; r < L.w1.size(); ++r)
        for (size_t s = 0; s < L.w2.size(); ++s)
            out.add(KetLabel<S>(with(without(L.w1, r), u), with(without(L.w2, s), L.w1[r]), L.w3),
                    -ginv<S>(u - L.w1[r]) * ginv<S>(L.w1[r] - L.w2[s]));
    for (size_t r = 0; r < L.w1.size(); ++r)
        for (size_t t = 0; t < L.w3.size(); ++t)
            out.add(KetLabel<S>(with(without(L.w1, r), u), L.w2, with(without(L.w3, t), L.w1[r])),
                    -ginv<S>(u - L.w3[t]) * ginv<S>(L.w3[t] - L.w1[r]));
    return out;
}

template <class S>
FormalKetSum<S> comp_I1_m(const S& u, const KetLabel<S>& L, const WeightFunctions<S>&) {
    FormalKetSum<S> out;
    for (size_t t = 0; t < L.w3.size(); ++t)
        out.add(KetLabel<S>(with(L.w1, u), with(L.w2, L.w3[t]), without(L.w3, t)),
                -ginv<S>(u - L.w3[t]));
    return out;
}

template <class S>
FormalKetSum<S> comp_I2_0(const S& u, const KetLabel<S>& L, const WeightFunctions<S>& wf) {
    FormalKetSum<S> out;
    for (size_t s = 0; s < L.w2.size(); ++s) {
        S br = wf.lambda(2, L.w2[s]);
        for (const S& r : L.w1) br += ginv<S>(u - r);
        for (size_t sh = 0; sh < L.w2.size(); ++sh)
            if (sh != s) br -= S(2) * ginv<S>(L.w2[s] - L.w2[sh]);
        for (const S& t : L.w3) br -= ginv<S>(u - t);
        out.add(KetLabel<S>(L.w1, with(without(L.w2, s), u), L.w3), br * ginv<S>(u - L.w2[s]));
    }
    return out;
}

template <class S>
FormalKetSum<S> comp_I2_m(const S& u, const KetLabel<S>& L, const WeightFunctions<S>&) {
    FormalKetSum<S> out;
    for (size_t t = 0; t < L.w3.size(); ++t)
        out.add(KetLabel<S>(with(L.w1, L.w3[t]), with(L.w2, u), without(L.w3, t)),
                ginv<S>(u - L.w3[t]));
    return out;
}

template <class S>
FormalKetSum<S> comp_I2_p(const S& u, const KetLabel<S>& L, const WeightFunctions<S>&) {
    FormalKetSum<S> out;
    for (size_t r = 0; r < L.w1.size(); ++r)
        for (size_t s = 0; s < L.w2.size(); ++s)
            for (size_t sh = 0; sh < L.w2.size(); ++sh) {
                if (sh == s) continue;
                out.add(KetLabel<S>(without(L.w1, r), with(without2(L.w2, s, sh), u),
                                    with(L.w3, L.w1[r])),
                        -ginv<S>(u - L.w1[r]) * ginv<S>(u - L.w2[s]) * ginv<S>(u - L.w2[sh]));
            }
    return out;
}

template <class S>
FormalKetSum<S> comp_I3_0(const S& u, const KetLabel<S>& L, const WeightFunctions<S>& wf) {
    FormalKetSum<S> out;
    for (size_t t = 0; t < L.w3.size(); ++t) {
        S br = wf.lambda(3, L.w3[t]);
        for (const S& r : L.w1) br -= ginv<S>(L.w3[t] - r);
        for (const S& s : L.w2) br -= ginv<S>(L.w3[t] - s);
        for (size_t th = 0; th < L.w3.size(); ++th)
            if (th != t) br -= S(2) * ginv<S>(L.w3[t] - L.w3[th]);
        out.add(KetLabel<S>(L.w1, L.w2, with(without(L.w3, t), u)), br * ginv<S>(u - L.w3[t]));
    }
    for (size_t r = 0; r < L.w1.size(); ++r)
        for (size_t t = 0; t < L.w3.size(); ++t)
            out.add(KetLabel<S>(with(without(L.w1, r), L.w3[t]), L.w2, with(without(L.w3, t), u)),
                    -ginv<S>(u - L.w1[r]) * ginv<S>(L.w1[r] - L.w3[t]));
    for (size_t s = 0; s < L.w2.size(); ++s)
        for (size_t t = 0; t < L.w3.size(); ++t)
            out.add(KetLabel<S>(L.w1, with(without(L.w2, s), L.w3[t]), with(without(L.w3, t), u)),
                    ginv<S>(u - L.w3[t]) * ginv<S>(L.w3[t] - L.w2[s]));
    return out;
}

template <class S>
FormalKetSum<S> comp_I3_p(const S& u, const KetLabel<S>& L, const WeightFunctions<S>& wf) {
    FormalKetSum<S> out;
    for (size_t r = 0; r < L.w1.size(); ++r)
        for (size_t s = 0; s < L.w2.size(); ++s)
            out.add(KetLabel<S>(without(L.w1, r), without(L.w2, s), with(L.w3, u)),
                    (wf.lambda(2, L.w1[r]) - wf.lambda(2, L.w2[s])) * ginv<S>(u - L.w1[r]) *
                        ginv<S>(L.w1[r] - L.w2[s]));
    for (size_t r = 0; r < L.w1.size(); ++r)
        for (size_t s = 0; s < L.w2.size(); ++s)
            for (size_t sh = 0; sh < L.w2.size(); ++sh) {
                if (sh == s) continue;
                out.add(KetLabel<S>(without(L.w1, r), without(L.w2, s), with(L.w3, u)),
                        S(-2) * ginv<S>(u - L.w1[r]) * ginv<S>(L.w1[r] - L.w2[sh]) *
                            ginv<S>(L.w2[sh] - L.w2[s]));
                out.add(KetLabel<S>(without(L.w1, r), with(without2(L.w2, s, sh), L.w1[r]),
                                    with(L.w3, u)),
                        ginv<S>(u - L.w1[r]) * ginv<S>(L.w1[r] - L.w2[s]) *
                            ginv<S>(L.w1[r] - L.w2[sh]));
            }
    return out;
}

template <class S>
FormalKetSum<S> comp_I0_0(const S& u, const KetLabel<S>& L, const WeightFunctions<S>& wf) {
    FormalKetSum<S> out;
    S diag = wf.vacuum_tau(u);
    const S l1u = wf.lambda(1, u), l2u = wf.lambda(2, u), l3u = wf.lambda(3, u);
    for (size_t r = 0; r < L.w1.size(); ++r) {
        S br = l1u;
        for (size_t rh = 0; rh < L.w1.size(); ++rh)
            if (rh != r) br -= S(2) * ginv<S>(L.w1[r] - L.w1[rh]);
        for (const S& s : L.w2) br += ginv<S>(L.w1[r] - s);
        for (const S& t : L.w3) br -= ginv<S>(L.w1[r] - t);
        diag -= br * ginv<S>(u - L.w1[r]);
    }
    for (size_t s = 0; s < L.w2.size(); ++s) {
        S br = l2u;
        for (const S& r : L.w1) br += ginv<S>(L.w2[s] - r);
        for (size_t sh = 0; sh < L.w2.size(); ++sh)
            if (sh != s) br -= S(2) * ginv<S>(L.w2[s] - L.w2[sh]);
        for (const S& t : L.w3) br -= ginv<S>(L.w2[s] - t);
        diag -= br * ginv<S>(u - L.w2[s]);
    }
    for (size_t t = 0; t < L.w3.size(); ++t) {
        S br = l3u;
        for (const S& r : L.w1) br -= ginv<S>(L.w3[t] - r);
        for (const S& s : L.w2) br -= ginv<S>(L.w3[t] - s);
        for (size_t th = 0; th < L.w3.size(); ++th)
            if (th != t) br -= S(2) * ginv<S>(L.w3[t] - L.w3[th]);
        diag -= br * ginv<S>(u - L.w3[t]);
    }
    out.add(L, diag);
    for (size_t r = 0; r < L.w1.size(); ++r)
        for (size_t t = 0; t < L.w3.size(); ++t)
            out.add(KetLabel<S>(with(without(L.w1, r), L.w3[t]), L.w2,
                                with(without(L.w3, t), L.w1[r])),
                    ginv<S>(u - L.w1[r]) * ginv<S>(u - L.w3[t]));
    return out;
}

template <class S>
FormalKetSum<S> comp_I0_p(const S& u, const KetLabel<S>& L, const WeightFunctions<S>& wf) {
    FormalKetSum<S> out;
    const S l2u = wf.lambda(2, u);
    for (size_t r = 0; r < L.w1.size(); ++r)
        for (size_t s = 0; s < L.w2.size(); ++s)
            out.add(KetLabel<S>(without(L.w1, r), without(L.w2, s), with(L.w3, L.w1[r])),
                    -(l2u - wf.lambda(2, L.w2[s])) * ginv<S>(u - L.w1[r]) *
                        ginv<S>(u - L.w2[s]));
    for (size_t r = 0; r < L.w1.size(); ++r)
        for (size_t s = 0; s < L.w2.size(); ++s)
            for (size_t sh = 0; sh < L.w2.size(); ++sh) {
                if (sh == s) continue;
                out.add(KetLabel<S>(without(L.w1, r), without(L.w2, s), with(L.w3, L.w1[r])),
                        S(2) * ginv<S>(u - L.w1[r]) * ginv<S>(u - L.w2[sh]) *
                            ginv<S>(L.w2[sh] - L.w2[s]));
            }
    return out;
}

}  // namespace ketdetail

// Action of one graded component of the generating operator on a labeled ket,
// as transcribed from the component displays; lambda_3 = lambda_1 + lambda_2.
template <class S>
FormalKetSum<S> apply_I_component(Component c, const S& u, const KetLabel<S>& L,
                                  const WeightFunctions<S>& wf) {
    using namespace ketdetail;
    switch (c) {
        case Component::I1_0: return comp_I1_0(u, L, wf);
        case Component::I1_m: return comp_I1_m(u, L, wf);
        case Component::I2_0: return comp_I2_0(u, L, wf);
        case Component::I2_m: return comp_I2_m(u, L, wf);
        case Component::I2_p: return comp_I2_p(u, L, wf);
        case Component::I3_0: return comp_I3_0(u, L, wf);
        case Component::I3_p: return comp_I3_p(u, L, wf);
        case Component::I0_0: return comp_I0_0(u, L, wf);
        case Component::I0_p: return comp_I0_p(u, L, wf);
    }
    throw std::invalid_argument("unknown component");
}

template <class S>
FormalKetSum<S> apply_I_component(Component c, const S& u, const FormalKetSum<S>& s,
                                  const WeightFunctions<S>& wf) {
    FormalKetSum<S> out;
    for (const auto& [lab, coeff] : s.terms) {
        FormalKetSum<S> img = apply_I_component(c, u, lab, wf);
        img.scale_by(coeff);
        out += img;
    }
    return out;
}

// Concrete vector of a formal sum: each label contributes
// coeff * F1(w1_1)..F1(w1_k) F2(..) F3(..) |0> with the lowering currents of
// the space. sl3 spaces only.
VectorXcd evaluate(const FormalKetSum<Cplx>& s, const TensorSpace& T);

// Deterministic listing, one "coeff * |{...},{...},{...}>" line per term.
std::string format_ket_sum(const FormalKetSum<Cplx>& s);

}  // namespace gaudin
