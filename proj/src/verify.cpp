#include "gaudin/verify.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <cmath>
#include <cstdio>

#include "gaudin/ketcalc.hpp"

namespace gaudin {

namespace {

std::string fmt_cplx(Cplx c) {
    char buf[64];
    if (c.imag() == 0.0)
        std::snprintf(buf, sizeof buf, "%.12g", c.real());
    else
        std::snprintf(buf, sizeof buf, "%.12g%+.12gi", c.real(), c.imag());
    return buf;
}

std::string fmt_roots(const std::vector<Cplx>& w) {
    std::string out = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ", ";
        out += fmt_cplx(w[i]);
    }
    return out + "]";
}

std::vector<Cplx> all_roots(const BetheConfig& cfg) {
    std::vector<Cplx> out = cfg.w1;
    out.insert(out.end(), cfg.w2.begin(), cfg.w2.end());
    return out;
}

double inf_norm_of(const VectorXcd& v) {
    return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
}

}  // namespace

EigenSystem dense_spectrum(const MatrixXcd& A, int dim_cap) {
    if (A.rows() != A.cols()) throw std::invalid_argument("dense_spectrum needs a square matrix");
    if (A.rows() > dim_cap)
        throw std::invalid_argument("dense_spectrum: dimension " + std::to_string(A.rows()) +
                                    " exceeds the cap " + std::to_string(dim_cap));
    Eigen::ComplexEigenSolver<MatrixXcd> es(A);
    if (es.info() != Eigen::Success)
        throw inconsistency_error("dense eigensolver did not converge");
    EigenSystem out{es.eigenvalues(), es.eigenvectors()};
    const double bar = 1e-10 * std::max(A.norm(), 1e-300);
    for (int j = 0; j < A.cols(); ++j) {
        const double res = (A * out.vectors.col(j) - out.values(j) * out.vectors.col(j)).norm();
        if (res > bar) throw inconsistency_error("eigenpair residual above certification bar");
    }
    return out;
}

double eigen_residual(const VectorXcd& v, const BetheConfig& cfg, const TensorSpace& T,
                      int u_samples, unsigned long long seed) {
    const double vn = v.norm();
    if (vn == 0.0) throw std::invalid_argument("eigen_residual: zero vector");
    std::mt19937_64 rng(seed);
    const std::vector<Cplx> us = sample_u_points(T, rng, u_samples, all_roots(cfg));
    double worst = 0.0;
    for (const Cplx& u : us) {
        const Cplx tau = bethe_eigenvalue(u, cfg, T);
        const VectorXcd r = T.generating_operator(u) * v - tau * v;
        worst = std::max(worst, r.norm() / vn);
    }
    return worst;
}

SpectrumMatch match_to_spectrum(const VectorXcd& v, const MatrixXcd& op, int dim_cap) {
    const double vn = v.norm();
    if (vn == 0.0) throw std::invalid_argument("match_to_spectrum: zero vector");
    const EigenSystem es = dense_spectrum(op, dim_cap);
    const int n = static_cast<int>(es.values.size());
    double scale = 1.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(es.values(i)));
    const double ctol = 1e-8 * scale;
    std::vector<bool> assigned(static_cast<size_t>(n), false);
    SpectrumMatch best;
    best.overlap = -1.0;
    for (int i = 0; i < n; ++i) {
        if (assigned[static_cast<size_t>(i)]) continue;
        std::vector<int> cluster;
        for (int j = i; j < n; ++j)
            if (!assigned[static_cast<size_t>(j)] && std::abs(es.values(j) - es.values(i)) <= ctol) {
                assigned[static_cast<size_t>(j)] = true;
                cluster.push_back(j);
            }
        MatrixXcd B(v.size(), static_cast<Eigen::Index>(cluster.size()));
        Cplx mean = 0.0;
        for (size_t c = 0; c < cluster.size(); ++c) {
            B.col(static_cast<Eigen::Index>(c)) = es.vectors.col(cluster[c]);
            mean += es.values(cluster[c]);
        }
        mean /= static_cast<double>(cluster.size());
        // eigenvectors of one cluster need not be orthogonal; project onto an
        // orthonormal basis of their span
        Eigen::HouseholderQR<MatrixXcd> qr(B);
        const MatrixXcd Q = qr.householderQ() * MatrixXcd::Identity(B.rows(), B.cols());
        const double overlap = (Q.adjoint() * v).norm() / vn;
        if (overlap > best.overlap) best = {mean, overlap};
    }
    best.overlap = std::min(best.overlap, 1.0);  // clip roundoff above one
    return best;
}

double audit_commuting_family(const TensorSpace& T) {
    if (T.num_sites() < 2) return 0.0;
    std::vector<MatrixXcd> H;
    H.reserve(static_cast<size_t>(T.num_sites()));
    for (int i = 0; i < T.num_sites(); ++i) H.push_back(T.hamiltonian(i));
    double hmax = 0.0;
    for (const MatrixXcd& h : H) hmax = std::max(hmax, h.norm());
    double worst = 0.0;
    for (size_t i = 0; i < H.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            worst = std::max(worst, (H[i] * H[j] - H[j] * H[i]).norm());
    return worst / std::max(hmax * hmax, 1e-300);
}

VectorXcd bethe_vector(const BetheConfig& cfg, const TensorSpace& T) {
    validate_bethe_config(cfg, T);
    if (T.algebra() == Algebra::sl2) {
        VectorXcd x = T.vacuum();
        const Gen f{Algebra::sl2, sl2gen::f};
        for (auto it = cfg.w1.rbegin(); it != cfg.w1.rend(); ++it) x = T.apply_current(f, *it, x);
        return x;
    }
    return evaluate(p_series(cfg.w1, cfg.w2), T);
}

Cplx tau_residue_at(const TensorSpace& T, const BetheConfig& cfg, int site) {
    if (site < 0 || site >= T.num_sites()) throw std::out_of_range("site index out of range");
    const Cplx z = T.marked_point(site);
    double sep = std::numeric_limits<double>::infinity();
    for (int j = 0; j < T.num_sites(); ++j)
        if (j != site) sep = std::min(sep, std::abs(z - T.marked_point(j)));
    for (const Cplx& w : all_roots(cfg)) sep = std::min(sep, std::abs(z - w));
    const double eps = 0.01 * sep;
    // circle average of (u - z) tau(u) kills every Laurent term below order 16
    // except the residue, including the double-pole contribution
    const int m = 16;
    Cplx acc = 0.0;
    for (int j = 0; j < m; ++j) {
        const double th = 2.0 * M_PI * j / m;
        const Cplx u = z + eps * Cplx(std::cos(th), std::sin(th));
        acc += (u - z) * bethe_eigenvalue(u, cfg, T);
    }
    return acc / static_cast<double>(m);
}

VerificationReport theorem_check(const TensorSpace& T, const TheoremCheckOptions& opt) {
    VerificationReport rep;
    rep.add_info("sites: " + std::to_string(T.num_sites()) +
                 ", dimension: " + std::to_string(T.dim()));
    rep.add_info("seed: " + std::to_string(opt.seed));
    BetheConfig cfg;
    if (opt.fixed_roots) {
        cfg = *opt.fixed_roots;
        validate_bethe_config(cfg, T);
        rep.add_info("roots pinned by configuration (no solve)");
        rep.add_check("pinned_roots_bethe_residual", inf_norm_of(bethe_residual(cfg, T)),
                      opt.residual_tol);
    } else {
        const std::vector<SolveReport> sols =
            multistart_solve(T, opt.k, opt.l, opt.seed, opt.attempts, opt.max_iter, opt.tol);
        if (sols.empty()) {
            rep.solver_converged = false;
            rep.add_info("solver found no converged configuration");
            return rep;
        }
        rep.add_info("distinct solutions found: " + std::to_string(sols.size()));
        for (const SolveReport& s : sols) {
            std::string line = "  roots " + fmt_roots(s.cfg.w1);
            if (!s.cfg.w2.empty()) line += " / " + fmt_roots(s.cfg.w2);
            char buf[48];
            std::snprintf(buf, sizeof buf, " (residual %.3e)", s.residual_inf);
            rep.add_info(line + buf);
        }
        cfg = sols.front().cfg;
        rep.add_check("newton_residual", sols.front().residual_inf, 10.0 * opt.tol);
    }
    rep.add_info("certified roots: " + fmt_roots(cfg.w1) +
                 (cfg.w2.empty() ? "" : " / " + fmt_roots(cfg.w2)));
    const VectorXcd v = bethe_vector(cfg, T);
    rep.add_check("eigen_residual", eigen_residual(v, cfg, T, opt.u_samples, opt.seed),
                  opt.residual_tol);
    std::mt19937_64 rng(opt.seed + 1);
    const Cplx ustar = sample_u_points(T, rng, 1, all_roots(cfg)).front();
    rep.add_info("spectrum matched at u = " + fmt_cplx(ustar));
    const SpectrumMatch match = match_to_spectrum(v, T.generating_operator(ustar));
    rep.add_check("spectrum_overlap_deficit", 1.0 - match.overlap, opt.residual_tol);
    const Cplx tau = bethe_eigenvalue(ustar, cfg, T);
    rep.add_check("eigenvalue_vs_spectrum",
                  std::abs(match.eigenvalue - tau) / std::max(1.0, std::abs(tau)),
                  opt.residual_tol);
    rep.add_info("tau(u) = " + fmt_cplx(tau) +
                 ", matched eigenvalue = " + fmt_cplx(match.eigenvalue));
    return rep;
}

}  // namespace gaudin
