#include <doctest.h>

#include <random>

#include "gaudin/betheroots.hpp"

using namespace gaudin;

namespace {

TensorSpace sl2_pair() {
    return TensorSpace(Algebra::sl2, {{WeightLabel{Algebra::sl2, {1}}, Cplx(-1, 0)},
                                      {WeightLabel{Algebra::sl2, {1}}, Cplx(1, 0)}});
}

TensorSpace sl3_pair() {
    return TensorSpace(Algebra::sl3, {{WeightLabel{Algebra::sl3, {1, 0}}, Cplx(0, 0)},
                                      {WeightLabel{Algebra::sl3, {0, 1}}, Cplx(1, 0)}});
}

// 3 fundamental + 3 dual sl3 sites on interleaved real points; large enough
// to admit first-family-only root configurations at k = 3.
TensorSpace sl3_six() {
    std::vector<SiteConfig> sites;
    for (int i = 0; i < 3; ++i)
        sites.push_back({WeightLabel{Algebra::sl3, {1, 0}}, Cplx(i, 0)});
    for (int i = 0; i < 3; ++i)
        sites.push_back({WeightLabel{Algebra::sl3, {0, 1}}, Cplx(i + 0.5, 0)});
    return TensorSpace(Algebra::sl3, sites);
}

std::vector<Cplx> flatten(const BetheConfig& c) {
    std::vector<Cplx> v = c.w1;
    v.insert(v.end(), c.w2.begin(), c.w2.end());
    return v;
}

BetheConfig unflatten(const std::vector<Cplx>& v, size_t k) {
    return {std::vector<Cplx>(v.begin(), v.begin() + k),
            std::vector<Cplx>(v.begin() + k, v.end())};
}

}  // namespace

TEST_CASE("configuration validation") {
    const TensorSpace T2 = sl2_pair();
    CHECK_NOTHROW(validate_bethe_config({{Cplx(0.2, 0.3)}, {}}, T2));
    // sl2 takes a single root list
    CHECK_THROWS_AS(validate_bethe_config({{Cplx(0.2, 0)}, {Cplx(3, 0)}}, T2),
                    std::invalid_argument);
    // duplicate roots within a list
    CHECK_THROWS_AS(validate_bethe_config({{Cplx(0.2, 0), Cplx(0.2, 0)}, {}}, T2), collision_error);
    // root sitting on a marked point
    CHECK_THROWS_AS(validate_bethe_config({{Cplx(1, 0)}, {}}, T2), collision_error);
    const TensorSpace T3 = sl3_pair();
    // cross-list collision
    CHECK_THROWS_AS(validate_bethe_config({{Cplx(0.4, 0)}, {Cplx(0.4, 0)}}, T3), collision_error);
}

TEST_CASE("sl2 residual fixtures") {
    const TensorSpace T = sl2_pair();
    // lambda(w) = 1/(w+1) + 1/(w-1): zero at w = 0, -4/3 at w = 1/2
    CHECK(std::abs(residual_sl2({{Cplx(0, 0)}, {}}, T)(0)) < 1e-15);
    CHECK(std::abs(residual_sl2({{Cplx(0.5, 0)}, {}}, T)(0) - Cplx(-4.0 / 3.0, 0)) < 1e-15);
}

TEST_CASE("sl3 residual fixture: second family row") {
    const TensorSpace T = sl3_pair();
    // lambda2(1/2) + 1/(1/2 - 1/3) = -2 + 6 = 4
    const VectorXcd r = residual_sl3({{Cplx(1.0 / 3.0, 0)}, {Cplx(0.5, 0)}}, T);
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r(1) - Cplx(4, 0)) < 1e-12);
}

TEST_CASE("jacobian fixtures") {
    const TensorSpace T2 = sl2_pair();
    const MatrixXcd J2 = jacobian_sl2({{Cplx(0, 0)}, {}}, T2);
    CHECK(std::abs(J2(0, 0) - Cplx(-2, 0)) < 1e-14);

    const TensorSpace T3 = sl3_pair();
    const MatrixXcd J3 = jacobian_sl3({{Cplx(1.0 / 3.0, 0)}, {Cplx(2.0 / 3.0, 0)}}, T3);
    CHECK(std::abs(J3(0, 1) - Cplx(9, 0)) < 1e-11);
}

TEST_CASE("analytic jacobian matches central finite differences") {
    const double step = 1e-6, rel_tol = 1e-6;
    for (int which = 0; which < 2; ++which) {
        const TensorSpace T = which == 0 ? sl2_pair() : sl3_pair();
        const size_t k = 2, l = which == 0 ? 0 : 2;
        std::mt19937_64 rng(kDefaultSeed + which);
        int done = 0;
        while (done < 20) {
            const std::vector<Cplx> pts = sample_points(rng, static_cast<int>(k + l), T.z_mean(),
                                                        2.5, T.marked_points(), 0.15);
            const BetheConfig cfg = unflatten(pts, k);
            try {
                validate_bethe_config(cfg, T);
            } catch (const collision_error&) {
                continue;
            }
            const MatrixXcd J = bethe_jacobian(cfg, T);
            const std::vector<Cplx> base = flatten(cfg);
            MatrixXcd fd(base.size(), base.size());
            for (size_t c = 0; c < base.size(); ++c) {
                std::vector<Cplx> hi = base, lo = base;
                hi[c] += step;
                lo[c] -= step;
                fd.col(static_cast<Eigen::Index>(c)) =
                    (bethe_residual(unflatten(hi, k), T) - bethe_residual(unflatten(lo, k), T)) /
                    (2.0 * step);
            }
            CHECK((J - fd).norm() / std::max(1.0, J.norm()) < rel_tol);
            ++done;
        }
    }
}

TEST_CASE("newton solve converges to the symmetric sl2 root") {
    const TensorSpace T = sl2_pair();
    const SolveReport r = newton_solve({{Cplx(0.3, 0.2)}, {}}, T);
    REQUIRE(r.converged);
    CHECK(std::abs(r.cfg.w1[0]) < 1e-9);
    CHECK(r.residual_inf <= 10.0 * kDefaultTol);
    CHECK(r.iterations <= kDefaultMaxIter);
    // re-evaluated residual agrees with the report
    CHECK(bethe_residual(r.cfg, T).lpNorm<Eigen::Infinity>() <= 10.0 * kDefaultTol);
}

TEST_CASE("multistart finds the sl2 root exactly once") {
    const TensorSpace T = sl2_pair();
    const std::vector<SolveReport> sols = multistart_solve(T, 1, 0);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].n_distinct == 1);
    CHECK(std::abs(sols[0].cfg.w1[0]) < 1e-9);
}

TEST_CASE("multistart finds the sl3 singlet roots") {
    const TensorSpace T = sl3_pair();
    const std::vector<SolveReport> sols = multistart_solve(T, 1, 1);
    REQUIRE(!sols.empty());
    bool found = false;
    for (const SolveReport& s : sols) {
        CHECK(s.converged);
        CHECK(s.residual_inf <= 10.0 * kDefaultTol);
        CHECK(bethe_residual(s.cfg, T).lpNorm<Eigen::Infinity>() <= 10.0 * kDefaultTol);
        found = found || same_solution(s.cfg, {{Cplx(1.0 / 3.0, 0)}, {Cplx(2.0 / 3.0, 0)}}, 1e-9);
    }
    CHECK(found);
}

TEST_CASE("first-family-only solve honors the fixed second list") {
    const TensorSpace T = sl3_six();
    const std::vector<Cplx> w2 = {Cplx(0.8, 0.7), Cplx(2.1, -0.6), Cplx(-0.4, 0.9)};
    const SolveReport r = solve_b1_given_w2(T, 3, w2, kDefaultSeed, 128);
    REQUIRE(r.converged);
    CHECK(r.cfg.w2 == w2);
    REQUIRE(r.cfg.w1.size() == 3);
    const VectorXcd res = bethe_residual(r.cfg, T);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(res(i)) <= 10.0 * kDefaultTol);
}

TEST_CASE("eigenvalue fixtures") {
    const TensorSpace T2 = sl2_pair();
    CHECK(std::abs(T2.vacuum_tau(Cplx(3, 0)) - Cplx(0.296875, 0)) < 1e-15);
    CHECK(std::abs(eigenvalue_sl2(Cplx(3, 0), {{Cplx(0, 0)}, {}}, T2) - Cplx(0.046875, 0)) < 1e-12);

    const TensorSpace T3 = sl3_pair();
    CHECK(std::abs(T3.vacuum_tau(Cplx(2, 0)) - Cplx(11.0 / 6.0, 0)) < 1e-14);
    const BetheConfig singlet{{Cplx(1.0 / 3.0, 0)}, {Cplx(2.0 / 3.0, 0)}};
    CHECK(std::abs(eigenvalue_sl3(Cplx(2, 0), singlet, T3) - Cplx(1.0 / 3.0, 0)) < 1e-10);
    // empty configuration reproduces the vacuum eigenvalue
    const Cplx u(2.7, 0.4);
    CHECK(std::abs(bethe_eigenvalue(u, {{}, {}}, T3) - T3.vacuum_tau(u)) < 1e-14);
}

TEST_CASE("eigenvalue rejects evaluation at a root or marked point") {
    const TensorSpace T = sl2_pair();
    const BetheConfig cfg{{Cplx(0, 0)}, {}};
    CHECK_THROWS_AS(eigenvalue_sl2(Cplx(0, 0), cfg, T), collision_error);
    CHECK_THROWS_AS(eigenvalue_sl2(Cplx(1, 0), cfg, T), collision_error);
}

TEST_CASE("solution comparison is permutation invariant") {
    const BetheConfig a{{Cplx(1, 0), Cplx(2, 0)}, {Cplx(5, 1)}};
    const BetheConfig b{{Cplx(2, 0), Cplx(1, 0)}, {Cplx(5, 1)}};
    const BetheConfig c{{Cplx(2, 0), Cplx(1.1, 0)}, {Cplx(5, 1)}};
    CHECK(same_solution(a, b));
    CHECK(!same_solution(a, c));
    CHECK(!same_solution(a, {{Cplx(1, 0)}, {Cplx(5, 1)}}));
}
