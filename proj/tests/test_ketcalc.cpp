#include <doctest.h>

#include <random>

#include "gaudin/betheroots.hpp"
#include "gaudin/ketcalc.hpp"

using namespace gaudin;

namespace {

TensorSpace sl3_pair() {
    return TensorSpace(Algebra::sl3, {{WeightLabel{Algebra::sl3, {1, 0}}, Cplx(0, 0)},
                                      {WeightLabel{Algebra::sl3, {0, 1}}, Cplx(1, 0)}});
}

KetLabel<Cplx> clabel(std::vector<Cplx> a, std::vector<Cplx> b, std::vector<Cplx> c) {
    return KetLabel<Cplx>(std::move(a), std::move(b), std::move(c));
}

}  // namespace

TEST_CASE("ket labels canonicalize and reject collisions") {
    const KetLabel<Cplx> L({Cplx(2, 0), Cplx(1, 0)}, {Cplx(5, 0)}, {});
    CHECK(L.w1[0] == Cplx(1, 0));
    CHECK(L.w1[1] == Cplx(2, 0));
    CHECK(L.k() == 2);
    CHECK(L.l() == 1);
    CHECK(L.m() == 0);
    CHECK_THROWS_AS(clabel({Cplx(1, 0), Cplx(1, 0)}, {}, {}), collision_error);
    CHECK_THROWS_AS(clabel({Cplx(1, 0)}, {Cplx(1, 0)}, {}), collision_error);
}

TEST_CASE("labels_close uses a relative scale") {
    const auto a = clabel({Cplx(1e6, 0)}, {}, {});
    const auto b = clabel({Cplx(1e6 + 1e-8, 0)}, {}, {});
    CHECK(labels_close(a, b, 1e-12));
    CHECK(!labels_close(a, clabel({Cplx(1e6 + 1, 0)}, {}, {}), 1e-12));
    CHECK(!labels_close(a, clabel({Cplx(1e6, 0)}, {Cplx(1, 0)}, {}), 1e-12));
}

TEST_CASE("single application of the pairing operator") {
    const Rat a(1, 3), b(2, 3);
    const FormalKetSum<Rat> s = apply_P(KetLabel<Rat>({a}, {b}, {}));
    REQUIRE(s.size() == 1);
    const auto& [lab, coeff] = *s.terms.begin();
    CHECK(lab.w1.empty());
    CHECK(lab.w2.empty());
    CHECK(lab.w3 == std::vector<Rat>{a});
    CHECK(coeff == Rat(3));  // 1/(b - a) = 3
}

TEST_CASE("pairing operator conserves the two graded weights") {
    const auto L = clabel({Cplx(0.1, 0.2), Cplx(1.3, -0.4)}, {Cplx(2.2, 0.5), Cplx(-0.7, 0.9)},
                          {Cplx(3.1, 0)});
    const FormalKetSum<Cplx> s = apply_P(L);
    CHECK(s.size() == 4);
    for (const auto& [lab, c] : s.terms) {
        CHECK(lab.k() + lab.m() == L.k() + L.m());
        CHECK(lab.l() + lab.m() == L.l() + L.m());
    }
}

TEST_CASE("series terminates: P beyond min(k,l) is the zero sum") {
    const auto L = clabel({Cplx(0.1, 0)}, {Cplx(2.2, 0)}, {});
    FormalKetSum<Cplx> s = single_ket(L);
    s = apply_P(s);
    CHECK(s.size() == 1);
    s = apply_P(s);
    CHECK(s.size() == 0);
    CHECK(p_power_closed<Cplx>({Cplx(0.1, 0)}, {Cplx(2.2, 0)}, 2).size() == 0);
}

TEST_CASE("closed form of P^n matches iterated application") {
    std::mt19937_64 rng(kDefaultSeed);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (int k = 1; k <= 3; ++k) {
        std::vector<Cplx> w1, w2;
        for (int i = 0; i < k; ++i) {
            w1.push_back(Cplx(coord(rng), coord(rng)));
            w2.push_back(Cplx(coord(rng), coord(rng)));
        }
        FormalKetSum<Cplx> iter = single_ket(KetLabel<Cplx>(w1, w2, {}));
        for (int n = 1; n <= k; ++n) {
            iter = apply_P(iter);
            const FormalKetSum<Cplx> closed = p_power_closed(w1, w2, n);
            const double scale = std::max(iter.max_coeff(), closed.max_coeff());
            CHECK(max_coeff_diff(iter, closed) <= 1e-12 * std::max(scale, 1.0));
        }
    }
}

TEST_CASE("exact series expansion for one root per family") {
    const Rat a(1, 3), b(2, 3);
    const FormalKetSum<Rat> s = p_series<Rat>({a}, {b});
    REQUIRE(s.size() == 2);
    const KetLabel<Rat> base({a}, {b}, {});
    const KetLabel<Rat> moved({}, {}, {a});
    CHECK(s.terms.at(base) == Rat(1));
    CHECK(s.terms.at(moved) == Rat(3));
}

TEST_CASE("exact series expansion for two roots per family") {
    const std::vector<Rat> w1 = {Rat(1, 7), Rat(2, 7)};
    const std::vector<Rat> w2 = {Rat(3, 5), Rat(4, 5)};
    const FormalKetSum<Rat> s = p_series(w1, w2);
    // leading term, four single-move terms, one fully-moved term
    REQUIRE(s.size() == 6);
    CHECK(s.terms.at(KetLabel<Rat>(w1, w2, {})) == Rat(1));
    auto cross = [&](const Rat& mv, const Rat& kept2, const Rat& used2) {
        const Rat kept1 = mv == w1[0] ? w1[1] : w1[0];
        return s.terms.at(KetLabel<Rat>({kept1}, {kept2}, {mv})) - 1 / (used2 - mv);
    };
    CHECK(cross(w1[0], w2[1], w2[0]) == 0);
    CHECK(cross(w1[0], w2[0], w2[1]) == 0);
    CHECK(cross(w1[1], w2[1], w2[0]) == 0);
    CHECK(cross(w1[1], w2[0], w2[1]) == 0);
    // the two ways of moving both roots land on one label and add up
    const Rat both = s.terms.at(KetLabel<Rat>({}, {}, w1));
    const Rat expect = 1 / ((w2[1] - w1[1]) * (w2[0] - w1[0])) +
                       1 / ((w2[0] - w1[1]) * (w2[1] - w1[0]));
    CHECK(both == expect);
}

TEST_CASE("weight functions mirror the tensor space data") {
    const TensorSpace T = sl3_pair();
    const WeightFunctions<Cplx> wf = weight_functions(T);
    const Cplx u(2.3, 0.7);
    for (int a = 1; a <= 3; ++a) {
        CHECK(std::abs(wf.lambda(a, u) - T.lambda_fn(a, u)) < 1e-15);
        CHECK(std::abs(wf.lambda_prime(a, u) - T.lambda_prime(a, u)) < 1e-15);
    }
    CHECK(std::abs(wf.vacuum_tau(u) - T.vacuum_tau(u)) < 1e-14);
}

TEST_CASE("excited eigenvalue form agrees with the solver-side formula") {
    const TensorSpace T = sl3_pair();
    const WeightFunctions<Cplx> wf = weight_functions(T);
    const BetheConfig cfg{{Cplx(1.0 / 3.0, 0)}, {Cplx(2.0 / 3.0, 0)}};
    for (const Cplx u : {Cplx(2, 0), Cplx(-1.4, 0.8), Cplx(0.5, 2.2)}) {
        CHECK(std::abs(excited_tau(u, cfg.w1, cfg.w2, wf) - eigenvalue_sl3(u, cfg, T)) < 1e-13);
    }
}

TEST_CASE("component names round-trip") {
    for (Component c : kAllComponents) CHECK(parse_component(component_name(c)) == c);
    CHECK_THROWS(parse_component("no-such-component"));
}

TEST_CASE("components that consume the third list vanish without one") {
    const TensorSpace T = sl3_pair();
    const WeightFunctions<Cplx> wf = weight_functions(T);
    const auto L = clabel({Cplx(0.4, 0.3)}, {Cplx(1.6, -0.2)}, {});
    const Cplx u(2.17, 0.33);
    for (Component c : {Component::I1_m, Component::I2_m, Component::I3_0})
        CHECK(apply_I_component(c, u, L, wf).size() == 0);
    // the double-second-list mover needs at least two entries there
    CHECK(apply_I_component(Component::I2_p, u, L, wf).size() == 0);
}

TEST_CASE("diagonal component reproduces the eigenvalue at Bethe roots") {
    // Lemma with n = 0: the full-residue component acts diagonally on the
    // unexpanded label when both root families satisfy their equations.
    const TensorSpace T = sl3_pair();
    const WeightFunctions<Cplx> wf = weight_functions(T);
    const std::vector<Cplx> w1 = {Cplx(1.0 / 3.0, 0)}, w2 = {Cplx(2.0 / 3.0, 0)};
    const Cplx u(2.17, 0.33);
    const KetLabel<Cplx> L(w1, w2, {});
    FormalKetSum<Cplx> lhs = apply_I_component(Component::I0_0, u, L, wf);
    FormalKetSum<Cplx> rhs = single_ket(L);
    rhs.scale_by(excited_tau(u, w1, w2, wf));
    CHECK(max_coeff_diff(lhs, rhs) < 1e-12 * std::max(1.0, rhs.max_coeff()));
}

TEST_CASE("first-family lemma chain at Bethe roots") {
    // I0_0 P^n - tau P^n + n I0_p P^(n-1) = 0 at a full solution, n = 1.
    const TensorSpace T = sl3_pair();
    const WeightFunctions<Cplx> wf = weight_functions(T);
    const std::vector<Cplx> w1 = {Cplx(1.0 / 3.0, 0)}, w2 = {Cplx(2.0 / 3.0, 0)};
    const Cplx u(2.17, 0.33);
    const KetLabel<Cplx> base(w1, w2, {});
    const FormalKetSum<Cplx> p1 = apply_P(base);
    FormalKetSum<Cplx> acc = apply_I_component(Component::I0_0, u, p1, wf);
    FormalKetSum<Cplx> diag = p1;
    diag.scale_by(-excited_tau(u, w1, w2, wf));
    acc += diag;
    acc += apply_I_component(Component::I0_p, u, single_ket(base), wf);
    acc.cleanup();
    CHECK(acc.max_coeff() < 1e-12 * std::max(1.0, p1.max_coeff()));
}

TEST_CASE("graded components assemble the full operator") {
    const TensorSpace T = sl3_pair();
    const WeightFunctions<Cplx> wf = weight_functions(T);
    std::mt19937_64 rng(kDefaultSeed + 5);
    const std::vector<Cplx> pts =
        sample_points(rng, 3, T.z_mean(), 2.0, T.marked_points(), 0.2);
    const auto L = clabel({pts[0]}, {pts[1]}, {pts[2]});
    const VectorXcd base = evaluate(single_ket(L), T);
    REQUIRE(base.norm() > 1e-10);
    std::mt19937_64 urng(kDefaultSeed + 6);
    for (const Cplx& u : sample_u_points(T, urng, 3, pts)) {
        FormalKetSum<Cplx> total;
        for (Component c : kAllComponents) total += apply_I_component(c, u, L, wf);
        total.cleanup();
        const VectorXcd lhs = evaluate(total, T);
        const VectorXcd rhs = T.gaudin_I(u) * base;
        CHECK((lhs - rhs).norm() / std::max(1.0, rhs.norm()) < 1e-10);
    }
}

TEST_CASE("formal evaluation matches explicit current products") {
    const TensorSpace T = sl3_pair();
    const Gen F1{Algebra::sl3, sl3gen::f1}, F2{Algebra::sl3, sl3gen::f2}, F3{Algebra::sl3, sl3gen::f3};
    const Cplx a(0.37, 0.21), b(1.53, -0.42), c(2.08, 0.64);
    // |{a},{b},{c}> = F1(a) F2(b) F3(c) |0>
    const VectorXcd direct = T.apply_current(
        F1, a, T.apply_current(F2, b, T.apply_current(F3, c, T.vacuum())));
    const VectorXcd viaformal = evaluate(single_ket(clabel({a}, {b}, {c})), T);
    CHECK((direct - viaformal).norm() < 1e-12 * std::max(1.0, direct.norm()));
}

TEST_CASE("ket formatting is deterministic and handles the empty sum") {
    FormalKetSum<Cplx> empty;
    CHECK(format_ket_sum(empty) == "0\n");
    const FormalKetSum<Cplx> s = p_series<Cplx>({Cplx(1.0 / 3.0, 0)}, {Cplx(2.0 / 3.0, 0)});
    const std::string once = format_ket_sum(s);
    CHECK(once == format_ket_sum(s));
    CHECK(once.find("|{") != std::string::npos);
}
