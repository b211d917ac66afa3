#include "gaudin/betheroots.hpp"

#include <Eigen/LU>

#include <cmath>
#include <limits>

namespace gaudin {

namespace {

struct PoleFamily {
    std::vector<Cplx> poles;
    std::vector<double> weights;
};

// Two root families with self-interaction coefficient -2 and cross
// coefficient +1; the second family may be absent. sl2 and the
// first-family-only solve are the one-family special cases.
struct BetheSystem {
    PoleFamily fam1, fam2;
    std::vector<Cplx> fixed_points;  // every point a root must stay clear of
    Cplx center = 0.0;
    double escape_radius = 0.0;
    double coll_tol = 0.0;
};

PoleFamily weighted_family(const TensorSpace& T, int a) {
    PoleFamily f;
    f.poles = T.marked_points();
    for (int i = 0; i < T.num_sites(); ++i) f.weights.push_back(T.site_weight(a, i));
    return f;
}

BetheSystem make_system(const TensorSpace& T, bool with_second_family) {
    BetheSystem S;
    S.fam1 = weighted_family(T, 1);
    if (with_second_family) S.fam2 = weighted_family(T, 2);
    S.fixed_points = T.marked_points();
    S.center = T.z_mean();
    S.escape_radius = 8.0 * std::max(T.z_spread(), 1.0);
    S.coll_tol = T.collision_tol();
    return S;
}

// One residual row r_row = sum_f coef_f / (x - a_f): the weighted poles of the
// family, the other roots of the same family (coef -2), and the roots of the
// other family (coef +1). All solver formulas below are driven by this list.
struct RowTerms {
    std::vector<Cplx> a;
    std::vector<double> coef;
    std::vector<int> col;  // unknown index the point a_f occupies, -1 if fixed
};

RowTerms row_terms(const BetheSystem& S, bool first_family, int r,
                   const std::vector<Cplx>& x1, const std::vector<Cplx>& x2) {
    const PoleFamily& fam = first_family ? S.fam1 : S.fam2;
    const std::vector<Cplx>& self = first_family ? x1 : x2;
    const std::vector<Cplx>& other = first_family ? x2 : x1;
    const int self_base = first_family ? 0 : static_cast<int>(x1.size());
    const int other_base = first_family ? static_cast<int>(x1.size()) : 0;
    RowTerms t;
    for (size_t j = 0; j < fam.poles.size(); ++j) {
        if (fam.weights[j] == 0.0) continue;
        t.a.push_back(fam.poles[j]);
        t.coef.push_back(fam.weights[j]);
        t.col.push_back(-1);
    }
    for (int s = 0; s < static_cast<int>(self.size()); ++s) {
        if (s == r) continue;
        t.a.push_back(self[static_cast<size_t>(s)]);
        t.coef.push_back(-2.0);
        t.col.push_back(self_base + s);
    }
    for (int s = 0; s < static_cast<int>(other.size()); ++s) {
        t.a.push_back(other[static_cast<size_t>(s)]);
        t.coef.push_back(1.0);
        t.col.push_back(other_base + s);
    }
    return t;
}

Cplx rational_row(const RowTerms& t, Cplx x) {
    Cplx out = 0.0;
    for (size_t f = 0; f < t.a.size(); ++f) out += t.coef[f] / (x - t.a[f]);
    return out;
}

// Denominator-cleared row: sum_f coef_f * prod_{g != f} (x - a_g). Finite
// everywhere, and its zeros off the factor points are exactly the zeros of
// the rational row.
Cplx cleared_row(const RowTerms& t, Cplx x, std::vector<Cplx>* excl_out = nullptr) {
    const size_t m = t.a.size();
    std::vector<Cplx> excl(m);
    for (size_t f = 0; f < m; ++f) {
        Cplx p = 1.0;
        for (size_t g = 0; g < m; ++g)
            if (g != f) p *= x - t.a[g];
        excl[f] = p;
    }
    Cplx out = 0.0;
    for (size_t f = 0; f < m; ++f) out += t.coef[f] * excl[f];
    if (excl_out) *excl_out = std::move(excl);
    return out;
}

int total_roots(const std::vector<Cplx>& x1, const std::vector<Cplx>& x2) {
    return static_cast<int>(x1.size() + x2.size());
}

Cplx root_at(const std::vector<Cplx>& x1, const std::vector<Cplx>& x2, int i) {
    return i < static_cast<int>(x1.size()) ? x1[static_cast<size_t>(i)]
                                           : x2[static_cast<size_t>(i) - x1.size()];
}

VectorXcd sys_rational(const BetheSystem& S, const std::vector<Cplx>& x1,
                       const std::vector<Cplx>& x2) {
    VectorXcd r(total_roots(x1, x2));
    for (int i = 0; i < static_cast<int>(x1.size()); ++i)
        r(i) = rational_row(row_terms(S, true, i, x1, x2), x1[static_cast<size_t>(i)]);
    for (int i = 0; i < static_cast<int>(x2.size()); ++i)
        r(static_cast<int>(x1.size()) + i) =
            rational_row(row_terms(S, false, i, x1, x2), x2[static_cast<size_t>(i)]);
    return r;
}

MatrixXcd sys_rational_jacobian(const BetheSystem& S, const std::vector<Cplx>& x1,
                                const std::vector<Cplx>& x2) {
    const int n = total_roots(x1, x2);
    MatrixXcd J = MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const bool first = i < static_cast<int>(x1.size());
        const int r = first ? i : i - static_cast<int>(x1.size());
        const RowTerms t = row_terms(S, first, r, x1, x2);
        const Cplx x = root_at(x1, x2, i);
        for (size_t f = 0; f < t.a.size(); ++f) {
            const Cplx d = x - t.a[f];
            const Cplx q = t.coef[f] / (d * d);
            J(i, i) -= q;
            if (t.col[f] >= 0) J(i, t.col[f]) += q;
        }
    }
    return J;
}

VectorXcd sys_cleared(const BetheSystem& S, const std::vector<Cplx>& x1,
                      const std::vector<Cplx>& x2) {
    const int n = total_roots(x1, x2);
    VectorXcd R(n);
    for (int i = 0; i < n; ++i) {
        const bool first = i < static_cast<int>(x1.size());
        const int r = first ? i : i - static_cast<int>(x1.size());
        R(i) = cleared_row(row_terms(S, first, r, x1, x2), root_at(x1, x2, i));
    }
    return R;
}

// d(r*P)/dy = (dr/dy) P + r dP/dy with P the factor product of the row.
MatrixXcd sys_cleared_jacobian(const BetheSystem& S, const std::vector<Cplx>& x1,
                               const std::vector<Cplx>& x2) {
    const int n = total_roots(x1, x2);
    const MatrixXcd Jr = sys_rational_jacobian(S, x1, x2);
    MatrixXcd J = MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const bool first = i < static_cast<int>(x1.size());
        const int r = first ? i : i - static_cast<int>(x1.size());
        const RowTerms t = row_terms(S, first, r, x1, x2);
        const Cplx x = root_at(x1, x2, i);
        std::vector<Cplx> excl;
        cleared_row(t, x, &excl);
        Cplx P = 1.0;
        for (const Cplx& a : t.a) P *= x - a;
        const Cplx rr = rational_row(t, x);
        for (int c = 0; c < n; ++c) J(i, c) = Jr(i, c) * P;
        Cplx dP_self = 0.0;
        for (size_t f = 0; f < t.a.size(); ++f) {
            dP_self += excl[f];
            if (t.col[f] >= 0) J(i, t.col[f]) -= rr * excl[f];
        }
        J(i, i) += rr * dP_self;
    }
    return J;
}

bool roots_clear(const BetheSystem& S, const std::vector<Cplx>& x1,
                 const std::vector<Cplx>& x2) {
    std::vector<Cplx> all(x1);
    all.insert(all.end(), x2.begin(), x2.end());
    for (size_t i = 0; i < all.size(); ++i) {
        for (size_t j = 0; j < i; ++j)
            if (std::abs(all[i] - all[j]) <= S.coll_tol) return false;
        for (const Cplx& p : S.fixed_points)
            if (std::abs(all[i] - p) <= S.coll_tol) return false;
        for (const Cplx& p : S.fam1.poles)
            if (std::abs(all[i] - p) <= S.coll_tol) return false;
    }
    return true;
}

struct IterOutcome {
    bool converged = false;
    int iterations = 0;
    double residual_inf = std::numeric_limits<double>::infinity();
};

double inf_norm(const VectorXcd& v) {
    return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
}

IterOutcome damped_newton(const BetheSystem& S, std::vector<Cplx>& x1,
                          std::vector<Cplx>& x2, int max_iter, double tol) {
    IterOutcome out;
    const int n = total_roots(x1, x2);
    if (n == 0) {
        out.converged = true;
        out.residual_inf = 0.0;
        return out;
    }
    auto rational_now = [&] {
        const VectorXcd r = sys_rational(S, x1, x2);
        const double v = inf_norm(r);
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };
    out.residual_inf = rational_now();
    if (out.residual_inf <= tol && roots_clear(S, x1, x2)) {
        out.converged = true;
        return out;
    }
    for (int iter = 1; iter <= max_iter; ++iter) {
        const VectorXcd R = sys_cleared(S, x1, x2);
        const MatrixXcd J = sys_cleared_jacobian(S, x1, x2);
        if (!R.allFinite() || !J.allFinite())
            throw singular_jacobian_error("Newton step not finite");
        Eigen::FullPivLU<MatrixXcd> lu(J);
        if (!lu.isInvertible()) throw singular_jacobian_error("Newton Jacobian is singular");
        const VectorXcd dx = lu.solve(-R);
        if (!dx.allFinite()) throw singular_jacobian_error("Newton step not finite");
        const double R0 = inf_norm(R);
        double t = 1.0;
        bool accepted = false;
        std::vector<Cplx> y1 = x1, y2 = x2;
        for (int halve = 0; halve <= 20; ++halve, t *= 0.5) {
            for (int i = 0; i < n; ++i) {
                const Cplx xi = root_at(x1, x2, i) + t * dx(i);
                if (i < static_cast<int>(x1.size()))
                    y1[static_cast<size_t>(i)] = xi;
                else
                    y2[static_cast<size_t>(i) - x1.size()] = xi;
            }
            const double Rc = inf_norm(sys_cleared(S, y1, y2));
            if (std::isfinite(Rc) && Rc < R0) {
                accepted = true;
                break;
            }
        }
        out.iterations = iter;
        if (!accepted) {
            out.residual_inf = rational_now();
            return out;  // stalled
        }
        x1 = y1;
        x2 = y2;
        for (int i = 0; i < n; ++i)
            if (std::abs(root_at(x1, x2, i) - S.center) > S.escape_radius) {
                out.residual_inf = rational_now();
                return out;  // root escaping toward infinity
            }
        out.residual_inf = rational_now();
        if (out.residual_inf <= tol) {
            out.converged = roots_clear(S, x1, x2);
            return out;
        }
    }
    return out;
}

void check_list_separation(const std::vector<Cplx>& v, double tol, const char* what) {
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (std::abs(v[i] - v[j]) <= tol)
                throw collision_error(std::string(what) + ": coinciding roots");
}

bool match_one_list(const std::vector<Cplx>& a, const std::vector<Cplx>& b, double tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const Cplx& x : a) {
        bool found = false;
        for (size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(x - b[j]) <= tol) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace

void validate_bethe_config(const BetheConfig& cfg, const TensorSpace& T) {
    if (T.algebra() == Algebra::sl2 && !cfg.w2.empty())
        throw std::invalid_argument("sl2 configurations carry a single root list");
    const double tol = T.collision_tol();
    check_list_separation(cfg.w1, tol, "first root list");
    check_list_separation(cfg.w2, tol, "second root list");
    for (const Cplx& a : cfg.w1)
        for (const Cplx& b : cfg.w2)
            if (std::abs(a - b) <= tol) throw collision_error("root lists intersect");
    for (const Cplx& z : T.marked_points()) {
        for (const Cplx& a : cfg.w1)
            if (std::abs(a - z) <= tol) throw collision_error("root meets a marked point");
        for (const Cplx& a : cfg.w2)
            if (std::abs(a - z) <= tol) throw collision_error("root meets a marked point");
    }
}

VectorXcd residual_sl2(const BetheConfig& cfg, const TensorSpace& T) {
    if (T.algebra() != Algebra::sl2) throw std::invalid_argument("residual_sl2 needs an sl2 space");
    validate_bethe_config(cfg, T);
    return sys_rational(make_system(T, false), cfg.w1, {});
}

VectorXcd residual_sl3(const BetheConfig& cfg, const TensorSpace& T) {
    if (T.algebra() != Algebra::sl3) throw std::invalid_argument("residual_sl3 needs an sl3 space");
    validate_bethe_config(cfg, T);
    return sys_rational(make_system(T, true), cfg.w1, cfg.w2);
}

VectorXcd bethe_residual(const BetheConfig& cfg, const TensorSpace& T) {
    return T.algebra() == Algebra::sl2 ? residual_sl2(cfg, T) : residual_sl3(cfg, T);
}

MatrixXcd jacobian_sl2(const BetheConfig& cfg, const TensorSpace& T) {
    if (T.algebra() != Algebra::sl2) throw std::invalid_argument("jacobian_sl2 needs an sl2 space");
    validate_bethe_config(cfg, T);
    return sys_rational_jacobian(make_system(T, false), cfg.w1, {});
}

MatrixXcd jacobian_sl3(const BetheConfig& cfg, const TensorSpace& T) {
    if (T.algebra() != Algebra::sl3) throw std::invalid_argument("jacobian_sl3 needs an sl3 space");
    validate_bethe_config(cfg, T);
    return sys_rational_jacobian(make_system(T, true), cfg.w1, cfg.w2);
}

MatrixXcd bethe_jacobian(const BetheConfig& cfg, const TensorSpace& T) {
    return T.algebra() == Algebra::sl2 ? jacobian_sl2(cfg, T) : jacobian_sl3(cfg, T);
}

SolveReport newton_solve(const BetheConfig& initial, const TensorSpace& T, int max_iter,
                         double tol) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    if (T.algebra() == Algebra::sl2 && !initial.w2.empty())
        throw std::invalid_argument("sl2 configurations carry a single root list");
    const BetheSystem S = make_system(T, T.algebra() == Algebra::sl3);
    SolveReport rep;
    rep.cfg = initial;
    const IterOutcome o = damped_newton(S, rep.cfg.w1, rep.cfg.w2, max_iter, tol);
    rep.converged = o.converged;
    rep.residual_inf = o.residual_inf;
    rep.iterations = o.iterations;
    rep.n_distinct = o.converged ? 1 : 0;
    return rep;
}

std::vector<SolveReport> multistart_solve(const TensorSpace& T, int k, int l,
                                          unsigned long long seed, int attempts, int max_iter,
                                          double tol) {
    if (k < 0 || l < 0) throw std::invalid_argument("root counts must be nonnegative");
    if (T.algebra() == Algebra::sl2 && l != 0)
        throw std::invalid_argument("sl2 configurations carry a single root list");
    std::mt19937_64 rng(seed);
    const double spread = T.z_spread();
    const double radius = 2.0 * (spread > 0.0 ? spread : 1.0);
    const double sep = 0.01 * radius;
    const std::vector<Cplx> avoid = T.marked_points();
    std::vector<SolveReport> found;
    for (int a = 0; a < attempts; ++a) {
        const std::vector<Cplx> pts = sample_points(rng, k + l, T.z_mean(), radius, avoid, sep);
        BetheConfig cfg;
        cfg.w1.assign(pts.begin(), pts.begin() + k);
        cfg.w2.assign(pts.begin() + k, pts.end());
        SolveReport rep;
        try {
            rep = newton_solve(cfg, T, max_iter, tol);
        } catch (const singular_jacobian_error&) {
            continue;
        }
        if (!rep.converged) continue;
        bool dup = false;
        for (const SolveReport& r : found)
            if (same_solution(r.cfg, rep.cfg)) {
                dup = true;
                break;
            }
        if (!dup) found.push_back(std::move(rep));
    }
    for (SolveReport& r : found) r.n_distinct = static_cast<int>(found.size());
    return found;
}

SolveReport solve_b1_given_w2(const TensorSpace& T, int k, const std::vector<Cplx>& w2,
                              unsigned long long seed, int attempts, int max_iter, double tol) {
    if (T.algebra() != Algebra::sl3) throw std::invalid_argument("first-family solve needs sl3");
    BetheSystem S = make_system(T, false);
    for (const Cplx& w : w2) {
        S.fam1.poles.push_back(w);
        S.fam1.weights.push_back(1.0);
        S.fixed_points.push_back(w);
    }
    std::mt19937_64 rng(seed);
    const double spread = T.z_spread();
    const double radius = 2.0 * (spread > 0.0 ? spread : 1.0);
    std::vector<Cplx> avoid = T.marked_points();
    avoid.insert(avoid.end(), w2.begin(), w2.end());
    SolveReport rep;
    for (int a = 0; a < attempts; ++a) {
        std::vector<Cplx> x1 = sample_points(rng, k, T.z_mean(), radius, avoid, 0.01 * radius);
        std::vector<Cplx> x2;
        try {
            const IterOutcome o = damped_newton(S, x1, x2, max_iter, tol);
            if (!o.converged) continue;
            rep.converged = true;
            rep.cfg.w1 = x1;
            rep.cfg.w2 = w2;
            rep.residual_inf = o.residual_inf;
            rep.iterations = o.iterations;
            rep.n_distinct = 1;
            return rep;
        } catch (const singular_jacobian_error&) {
            continue;
        }
    }
    rep.cfg.w2 = w2;
    return rep;
}

Cplx eigenvalue_sl2(Cplx u, const BetheConfig& cfg, const TensorSpace& T) {
    if (T.algebra() != Algebra::sl2) throw std::invalid_argument("eigenvalue_sl2 needs an sl2 space");
    validate_bethe_config(cfg, T);
    for (const Cplx& w : cfg.w1)
        if (std::abs(u - w) <= T.collision_tol())
            throw collision_error("evaluation point meets a root");
    Cplx out = T.vacuum_tau_sl2(u);
    const Cplx lu = T.lambda_fn(1, u);
    for (size_t r = 0; r < cfg.w1.size(); ++r) {
        Cplx bracket = lu;
        for (size_t s = 0; s < cfg.w1.size(); ++s)
            if (s != r) bracket -= 2.0 / (cfg.w1[r] - cfg.w1[s]);
        out -= bracket / (u - cfg.w1[r]);
    }
    return out;
}

Cplx eigenvalue_sl3(Cplx u, const BetheConfig& cfg, const TensorSpace& T) {
    if (T.algebra() != Algebra::sl3) throw std::invalid_argument("eigenvalue_sl3 needs an sl3 space");
    validate_bethe_config(cfg, T);
    for (const Cplx& w : cfg.w1)
        if (std::abs(u - w) <= T.collision_tol())
            throw collision_error("evaluation point meets a root");
    for (const Cplx& w : cfg.w2)
        if (std::abs(u - w) <= T.collision_tol())
            throw collision_error("evaluation point meets a root");
    Cplx out = T.vacuum_tau_sl3(u);
    const Cplx l1u = T.lambda_fn(1, u);
    const Cplx l2u = T.lambda_fn(2, u);
    for (size_t r = 0; r < cfg.w1.size(); ++r) {
        Cplx bracket = l1u;
        for (size_t rh = 0; rh < cfg.w1.size(); ++rh)
            if (rh != r) bracket -= 2.0 / (cfg.w1[r] - cfg.w1[rh]);
        for (const Cplx& w : cfg.w2) bracket += 1.0 / (cfg.w1[r] - w);
        out -= bracket / (u - cfg.w1[r]);
    }
    for (size_t s = 0; s < cfg.w2.size(); ++s) {
        Cplx bracket = l2u;
        for (const Cplx& w : cfg.w1) bracket += 1.0 / (cfg.w2[s] - w);
        for (size_t sh = 0; sh < cfg.w2.size(); ++sh)
            if (sh != s) bracket -= 2.0 / (cfg.w2[s] - cfg.w2[sh]);
        out -= bracket / (u - cfg.w2[s]);
    }
    return out;
}

Cplx bethe_eigenvalue(Cplx u, const BetheConfig& cfg, const TensorSpace& T) {
    return T.algebra() == Algebra::sl2 ? eigenvalue_sl2(u, cfg, T) : eigenvalue_sl3(u, cfg, T);
}

bool same_solution(const BetheConfig& a, const BetheConfig& b, double tol) {
    return match_one_list(a.w1, b.w1, tol) && match_one_list(a.w2, b.w2, tol);
}

}  // namespace gaudin
