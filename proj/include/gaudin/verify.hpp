#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaudin/betheroots.hpp"
#include "gaudin/tensorspace.hpp"

namespace gaudin {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> info;
    bool solver_converged = true;

    void add_check(const std::string& name, double measured, double tolerance) {
        checks.push_back({name, measured, tolerance, measured <= tolerance});
    }
    void add_info(std::string line) { info.push_back(std::move(line)); }
    bool all_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct EigenSystem {
    VectorXcd values;
    MatrixXcd vectors;  // columns, unit norm
};

inline constexpr int kDefaultDimCap = 4096;

// Full dense eigendecomposition; the oracle behind every derived value.
// Each pair is certified to ||A v - lambda v|| <= 1e-10 ||A||_F before
// returning; a violation is an inconsistency, not a warning.
EigenSystem dense_spectrum(const MatrixXcd& A, int dim_cap = kDefaultDimCap);

// Max over sampled u of ||G(u) v - tau(u; cfg) v|| / ||v|| with G the
// generating operator of the space. Samples avoid marked points and roots.
double eigen_residual(const VectorXcd& v, const BetheConfig& cfg, const TensorSpace& T,
                      int u_samples = 5, unsigned long long seed = kDefaultSeed);

struct SpectrumMatch {
    Cplx eigenvalue{};
    double overlap = 0.0;  // in [0,1], against the eigenvalue's full eigenspace
};

// Best eigenspace for v: eigenvalues are clustered to within
// 1e-8 * max(1, |spectrum|), each cluster's eigenvectors orthonormalized,
// and the cluster with the largest normalized projection of v wins.
SpectrumMatch match_to_spectrum(const VectorXcd& v, const MatrixXcd& op, int dim_cap = kDefaultDimCap);

// max_{i<j} ||[H_i, H_j]||_F / max_i ||H_i||_F^2; zero for a single site.
double audit_commuting_family(const TensorSpace& T);

// Bethe vector of a configuration: sl2 applies the lowering current at every
// root to the vacuum; sl3 evaluates the exponential series.
VectorXcd bethe_vector(const BetheConfig& cfg, const TensorSpace& T);

// Residue of the eigenvalue function u -> tau(u; cfg) at the marked point
// z_i, extracted by averaging (u - z_i) tau(u; cfg) over a small circle.
Cplx tau_residue_at(const TensorSpace& T, const BetheConfig& cfg, int site);

struct TheoremCheckOptions {
    int k = 0;
    int l = 0;  // sl2 ignores l
    int max_iter = kDefaultMaxIter;
    double tol = kDefaultTol;
    int attempts = kDefaultAttempts;
    unsigned long long seed = kDefaultSeed;
    int u_samples = 5;
    double residual_tol = 1e-9;
    // When set, skip the solver and certify these roots as given. This is
    // how deliberately wrong roots are shown to fail.
    std::optional<BetheConfig> fixed_roots;
};

// End-to-end certification: obtain roots (solve or pinned), build the Bethe
// vector, check the eigen-residual at sampled u, and match the vector against
// the dense spectrum of the generating operator. solver_converged is false in
// the returned report when no roots were found at all.
VerificationReport theorem_check(const TensorSpace& T, const TheoremCheckOptions& opt);

}  // namespace gaudin
