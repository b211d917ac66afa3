#pragma once

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "gaudin/repmod.hpp"

namespace gaudin {

struct SiteConfig {
    WeightLabel weight;
    Cplx z;
};

using EvaluatedOperator = MatrixXcd;

// Tensor product of highest-weight modules with one marked point per factor.
// Flat indices are mixed-radix over per-site basis indices, site 0 slowest;
// the vacuum (all sites at their highest-weight vector) is flat index 0.
class TensorSpace {
public:
    TensorSpace(Algebra alg, std::vector<SiteConfig> sites);

    Algebra algebra() const { return alg_; }
    int num_sites() const { return static_cast<int>(sites_.size()); }
    int dim() const { return dim_; }
    const SiteConfig& site(int i) const { return sites_.at(static_cast<size_t>(i)); }
    const ModuleRep& module_at(int i) const { return modules_.at(static_cast<size_t>(i)); }
    Cplx marked_point(int i) const { return sites_.at(static_cast<size_t>(i)).z; }
    std::vector<Cplx> marked_points() const;

    int vacuum_index() const { return 0; }
    VectorXcd vacuum() const;

    std::vector<int> to_multi(int flat) const;
    int to_flat(const std::vector<int>& multi) const;

    // Scale-aware pole guard: evaluation points and roots must stay at least
    // this far from every marked point.
    double collision_tol() const { return eps_coll_; }
    void require_off_marked_points(Cplx u, const char* what) const;

    const MatrixXcd& site_operator(Gen g, int i) const;
    MatrixXcd current(Gen g, Cplx u) const;
    VectorXcd apply_site(Gen g, int i, const VectorXcd& v) const;
    VectorXcd apply_current(Gen g, Cplx u, const VectorXcd& v) const;

    MatrixXcd gaudin_T(Cplx u) const;  // sl2 only
    MatrixXcd gaudin_I(Cplx u) const;  // sl3 only
    MatrixXcd generating_operator(Cplx u) const;

    MatrixXcd hamiltonian(int i) const;
    MatrixXcd casimir_site(int i) const;

    // lambda_a(u) = sum_i lambda_a^(i) / (u - z_i); a = 1 for sl2,
    // a in {1,2,3} for sl3 with lambda_3 = lambda_1 + lambda_2.
    Cplx lambda_fn(int a, Cplx u) const;
    Cplx lambda_prime(int a, Cplx u) const;
    double site_weight(int a, int i) const;

    Cplx vacuum_tau_sl2(Cplx u) const;
    Cplx vacuum_tau_sl3(Cplx u) const;
    Cplx vacuum_tau(Cplx u) const;

    double z_spread() const;
    Cplx z_mean() const;

private:
    Algebra alg_;
    std::vector<SiteConfig> sites_;
    std::vector<ModuleRep> modules_;
    std::vector<int> dims_;
    std::vector<int> strides_;
    int dim_;
    double eps_coll_;
    mutable std::map<std::pair<int, int>, MatrixXcd> site_op_cache_;

    void check_sl3_vacuum_tau() const;
};

// Deterministic sample points: uniform in the disk of radius `radius` around
// `center`, rejecting points within `min_sep` of any entry of `avoid`.
std::vector<Cplx> sample_points(std::mt19937_64& rng, int count, Cplx center, double radius,
                                const std::vector<Cplx>& avoid, double min_sep);

// Default evaluation-point sampler for identity tests on a TensorSpace:
// disk of radius 2*spread around mean(z), separation 0.1*spread from the
// marked points and any extra avoided points.
std::vector<Cplx> sample_u_points(const TensorSpace& T, std::mt19937_64& rng, int count,
                                  const std::vector<Cplx>& extra_avoid = {});

inline constexpr unsigned long long kDefaultSeed = 20240001ULL;

}  // namespace gaudin
