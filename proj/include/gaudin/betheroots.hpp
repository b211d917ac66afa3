#pragma once

#include <vector>

#include "gaudin/tensorspace.hpp"

namespace gaudin {

// Root lists of a candidate Bethe configuration. sl2 uses w1 only.
struct BetheConfig {
    std::vector<Cplx> w1;
    std::vector<Cplx> w2;
};

// Throws collision_error unless roots are pairwise separated (within each
// list and, for sl3, across the two lists) and clear of all marked points.
void validate_bethe_config(const BetheConfig& cfg, const TensorSpace& T);

// Left sides of the Bethe equations.
// sl2: r_r = lambda(w_r) - sum_{s != r} 2/(w_r - w_s).
// sl3: first k entries  lambda1(w1_r) - sum 2/(w1_r - w1_rh) + sum 1/(w1_r - w2_s),
//      last  l entries  lambda2(w2_s) + sum 1/(w2_s - w1_r) - sum 2/(w2_s - w2_sh).
VectorXcd residual_sl2(const BetheConfig& cfg, const TensorSpace& T);
VectorXcd residual_sl3(const BetheConfig& cfg, const TensorSpace& T);
VectorXcd bethe_residual(const BetheConfig& cfg, const TensorSpace& T);

// Analytic partial derivatives of the residual components with respect to the
// roots, ordered as (w1 entries, then w2 entries).
MatrixXcd jacobian_sl2(const BetheConfig& cfg, const TensorSpace& T);
MatrixXcd jacobian_sl3(const BetheConfig& cfg, const TensorSpace& T);
MatrixXcd bethe_jacobian(const BetheConfig& cfg, const TensorSpace& T);

struct SolveReport {
    bool converged = false;
    BetheConfig cfg;
    double residual_inf = 0.0;
    int iterations = 0;
    int n_distinct = 0;
};

inline constexpr int kDefaultMaxIter = 100;
inline constexpr double kDefaultTol = 1e-12;
inline constexpr int kDefaultAttempts = 64;
inline constexpr double kDedupTol = 1e-8;

// Damped Newton from one starting configuration. Iterates on the
// denominator-cleared form of the residual (the rational form vanishes at
// infinity, which makes escaping roots look like convergence); the reported
// residual and the convergence test use the rational form. Throws
// singular_jacobian_error when the linear solve degenerates.
SolveReport newton_solve(const BetheConfig& initial, const TensorSpace& T,
                         int max_iter = kDefaultMaxIter, double tol = kDefaultTol);

// Random restarts from a disk of radius 2*spread(z) centered at mean(z).
// Returns the distinct converged solutions (deduplicated up to permutation
// within each root list, tolerance kDedupTol); every report carries the total
// count in n_distinct. Starts that collide or hit a singular Jacobian are
// skipped, never fatal.
std::vector<SolveReport> multistart_solve(const TensorSpace& T, int k, int l,
                                          unsigned long long seed = kDefaultSeed,
                                          int attempts = kDefaultAttempts,
                                          int max_iter = kDefaultMaxIter,
                                          double tol = kDefaultTol);

// Solve the first Bethe family alone, holding the second root list fixed:
// the fixed w2 entries act as extra simple poles of weight +1. Used by the
// graded identity checks that assume only the first equation family.
SolveReport solve_b1_given_w2(const TensorSpace& T, int k, const std::vector<Cplx>& w2,
                              unsigned long long seed = kDefaultSeed,
                              int attempts = kDefaultAttempts,
                              int max_iter = kDefaultMaxIter, double tol = kDefaultTol);

// Eigenvalue of the generating operator on the Bethe vector. The spectral
// variable enters through lambda_a(u); the pairwise sums stay at the roots.
Cplx eigenvalue_sl2(Cplx u, const BetheConfig& cfg, const TensorSpace& T);
Cplx eigenvalue_sl3(Cplx u, const BetheConfig& cfg, const TensorSpace& T);
Cplx bethe_eigenvalue(Cplx u, const BetheConfig& cfg, const TensorSpace& T);

// True when the two configurations contain the same roots up to permutation
// within each list, entrywise within tol.
bool same_solution(const BetheConfig& a, const BetheConfig& b, double tol = kDedupTol);

}  // namespace gaudin
