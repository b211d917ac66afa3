#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "gaudin/betheroots.hpp"
#include "gaudin/tensorspace.hpp"

namespace gaudin {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverSettings {
    int max_iter = kDefaultMaxIter;
    double tol = kDefaultTol;
    int attempts = kDefaultAttempts;
    unsigned long long seed = kDefaultSeed;
};

struct VerifySettings {
    int u_samples = 5;
    double residual_tol = 1e-9;
    std::vector<Cplx> u_points;  // optional fixed evaluation points
};

struct RunConfig {
    Algebra algebra = Algebra::sl2;
    std::vector<SiteConfig> sites;
    int k = 0;  // sl2: n
    int l = 0;
    SolverSettings solver;
    VerifySettings verification;
    std::optional<BetheConfig> roots;  // pinned roots, bypasses the solver
};

// Schema: {"algebra": "sl2"|"sl3",
//          "sites": [{"weight": L or [p,q], "z": [re,im]}...],
//          "excitations": {"n": n} or {"k": k, "l": l},
//          "solver": {"max_iter","tol","attempts","seed"},
//          "verification": {"u_samples","residual_tol","u_points": [[re,im]...]},
//          "roots": [[re,im]...] (sl2) or "roots1"/"roots2" (sl3)}
// Complex numbers are [re, im] arrays; plain numbers are accepted as real.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

TensorSpace make_space(const RunConfig& rc);

}  // namespace gaudin
