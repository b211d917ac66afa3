#include <doctest.h>

#include <random>

#include "gaudin/verify.hpp"

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

const BetheConfig kSl2Root{{Cplx(0, 0)}, {}};
const BetheConfig kSinglet{{Cplx(1.0 / 3.0, 0)}, {Cplx(2.0 / 3.0, 0)}};

}  // namespace

TEST_CASE("dense spectrum certifies its pairs and honors the cap") {
    MatrixXcd a(1, 1);
    a(0, 0) = Cplx(4.2, -0.3);
    const EigenSystem es = dense_spectrum(a);
    REQUIRE(es.values.size() == 1);
    CHECK(std::abs(es.values(0) - Cplx(4.2, -0.3)) < 1e-12);

    const TensorSpace T = sl2_pair();
    const MatrixXcd op = T.gaudin_T(Cplx(3, 0));
    const EigenSystem full = dense_spectrum(op);
    bool found = false;
    for (int i = 0; i < full.values.size(); ++i)
        found = found || std::abs(full.values(i) - Cplx(0.046875, 0)) < 1e-10;
    CHECK(found);

    CHECK_THROWS_AS(dense_spectrum(op, 2), std::invalid_argument);
    CHECK_THROWS_AS(dense_spectrum(MatrixXcd::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("vacuum has zero eigen-residual") {
    for (int which = 0; which < 2; ++which) {
        const TensorSpace T = which == 0 ? sl2_pair() : sl3_pair();
        CHECK(eigen_residual(T.vacuum(), {{}, {}}, T) < 1e-12);
    }
    CHECK_THROWS_AS(eigen_residual(VectorXcd::Zero(4), {{}, {}}, sl2_pair()),
                    std::invalid_argument);
}

TEST_CASE("bethe vector is a certified eigenvector") {
    const TensorSpace T2 = sl2_pair();
    const VectorXcd v2 = bethe_vector(kSl2Root, T2);
    REQUIRE(v2.norm() > 1e-12);
    CHECK(eigen_residual(v2, kSl2Root, T2) < 1e-10);

    const TensorSpace T3 = sl3_pair();
    const VectorXcd v3 = bethe_vector(kSinglet, T3);
    REQUIRE(v3.norm() > 1e-12);
    CHECK(eigen_residual(v3, kSinglet, T3) < 1e-9);
}

TEST_CASE("perturbed roots are rejected by the eigen-residual") {
    const TensorSpace T = sl2_pair();
    const BetheConfig bad{{Cplx(0.01, 0)}, {}};
    const VectorXcd v = bethe_vector(bad, T);
    CHECK(eigen_residual(v, bad, T) > 1e-4);
}

TEST_CASE("wrong operator ordering is caught end to end") {
    // applying the sl3 series coefficients to a deliberately reordered
    // current product must not produce an eigenvector
    const TensorSpace T = sl3_pair();
    const Gen F1{Algebra::sl3, sl3gen::f1}, F3{Algebra::sl3, sl3gen::f3};
    // swap: F3(w2) F1(w1) |0> instead of the series
    const VectorXcd swapped = T.apply_current(
        F3, kSinglet.w2[0], T.apply_current(F1, kSinglet.w1[0], T.vacuum()));
    if (swapped.norm() > 1e-12) CHECK(eigen_residual(swapped, kSinglet, T) > 1e-4);
}

TEST_CASE("spectrum match separates true and random vectors") {
    const TensorSpace T = sl2_pair();
    const MatrixXcd op = T.gaudin_T(Cplx(3, 0));
    const VectorXcd v = bethe_vector(kSl2Root, T);
    const SpectrumMatch good = match_to_spectrum(v, op);
    CHECK(good.overlap > 1.0 - 1e-10);
    CHECK(std::abs(good.eigenvalue - Cplx(0.046875, 0)) < 1e-10);

    std::mt19937_64 rng(kDefaultSeed);
    std::normal_distribution<double> g;
    VectorXcd r(T.dim());
    for (int i = 0; i < r.size(); ++i) r(i) = Cplx(g(rng), g(rng));
    const SpectrumMatch rand = match_to_spectrum(r, op);
    CHECK(rand.overlap < 1.0 - 1e-3);
}

TEST_CASE("commuting family audit is tiny for genuine spaces") {
    CHECK(audit_commuting_family(sl2_pair()) < 1e-12);
    CHECK(audit_commuting_family(sl3_pair()) < 1e-12);
    const TensorSpace single(Algebra::sl2, {{WeightLabel{Algebra::sl2, {2}}, Cplx(0.4, 0)}});
    CHECK(audit_commuting_family(single) == 0.0);
}

TEST_CASE("eigenvalue residue at a marked point matches the dense hamiltonian") {
    const TensorSpace T = sl2_pair();
    // residue of tau(u; root at 0) at z_1 = -1 equals the H_1 eigenvalue 3/4
    const Cplx res = tau_residue_at(T, kSl2Root, 0);
    CHECK(std::abs(res - Cplx(0.75, 0)) < 1e-10);
    const VectorXcd v = bethe_vector(kSl2Root, T);
    const VectorXcd hv = T.hamiltonian(0) * v;
    CHECK((hv - res * v).norm() / v.norm() < 1e-10);
}

TEST_CASE("theorem check passes on solvable configurations") {
    TheoremCheckOptions opt;
    opt.k = 1;
    VerificationReport rep = theorem_check(sl2_pair(), opt);
    CHECK(rep.solver_converged);
    CHECK(rep.all_pass());

    opt.l = 1;
    rep = theorem_check(sl3_pair(), opt);
    CHECK(rep.solver_converged);
    CHECK(rep.all_pass());
}

TEST_CASE("theorem check fails on pinned wrong roots") {
    TheoremCheckOptions opt;
    opt.k = 1;
    opt.fixed_roots = BetheConfig{{Cplx(0.01, 0)}, {}};
    const VerificationReport rep = theorem_check(sl2_pair(), opt);
    CHECK(rep.solver_converged);
    CHECK(!rep.all_pass());
}
