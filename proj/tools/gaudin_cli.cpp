#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>

#include "gaudin/config.hpp"
#include "gaudin/ketcalc.hpp"
#include "gaudin/liealg.hpp"
#include "gaudin/repmod.hpp"
#include "gaudin/verify.hpp"

namespace {

using namespace gaudin;
using nlohmann::json;

// exit codes: 0 all checks pass, 1 a verification check failed,
//             2 solver did not converge, 3 configuration invalid
enum ExitCode { kPass = 0, kCheckFailed = 1, kNoConvergence = 2, kBadConfig = 3 };

struct CliOptions {
    std::string config_path;
    bool as_json = false;
    std::optional<double> tol;
    std::optional<int> max_iter;
    std::optional<unsigned long long> seed;
    std::optional<int> samples;
    std::string u_arg;
};

void add_common(CLI::App* cmd, CliOptions& o, bool with_u) {
    cmd->add_option("--config", o.config_path, "path to the JSON configuration")->required();
    cmd->add_flag("--json", o.as_json, "emit a machine-readable JSON report");
    cmd->add_option("--tol", o.tol, "override solver tolerance");
    cmd->add_option("--max-iter", o.max_iter, "override solver iteration cap");
    cmd->add_option("--seed", o.seed, "override the pseudo-random seed");
    cmd->add_option("--samples", o.samples, "override the evaluation-point count");
    if (with_u) cmd->add_option("--u", o.u_arg, "evaluation point RE,IM");
}

RunConfig load_with_overrides(const CliOptions& o) {
    RunConfig rc = load_config(o.config_path);
    if (o.tol) rc.solver.tol = *o.tol;
    if (o.max_iter) rc.solver.max_iter = *o.max_iter;
    if (o.seed) rc.solver.seed = *o.seed;
    if (o.samples) rc.verification.u_samples = *o.samples;
    if (rc.solver.tol <= 0.0 || rc.solver.max_iter <= 0 || rc.verification.u_samples <= 0)
        throw config_error("overridden settings must be positive");
    return rc;
}

Cplx parse_u(const std::string& s) {
    double re = 0.0, im = 0.0;
    if (std::sscanf(s.c_str(), "%lf,%lf", &re, &im) >= 1) return Cplx(re, im);
    throw config_error("--u expects RE or RE,IM");
}

std::string fmt_cplx(Cplx c) {
    char buf[64];
    if (c.imag() == 0.0)
        std::snprintf(buf, sizeof buf, "%.12g", c.real());
    else
        std::snprintf(buf, sizeof buf, "%.12g%+.12gi", c.real(), c.imag());
    return buf;
}

json cplx_json(Cplx c) { return json::array({c.real(), c.imag()}); }

// Accumulates the report in both human and machine form so both stay in sync.
struct Report {
    std::string command;
    VerificationReport rep;
    json extra = json::object();

    void check(const std::string& name, double measured, double tol) {
        rep.add_check(name, measured, tol);
    }
    void info(const std::string& line) { rep.add_info(line); }

    int emit(bool as_json) const {
        const bool ok = rep.all_pass();
        if (as_json) {
            json j;
            j["command"] = command;
            j["info"] = rep.info;
            j["checks"] = json::array();
            for (const CheckResult& c : rep.checks)
                j["checks"].push_back({{"name", c.name},
                                       {"measured", c.measured},
                                       {"tolerance", c.tolerance},
                                       {"pass", c.pass}});
            for (auto& [k, v] : extra.items()) j[k] = v;
            j["solver_converged"] = rep.solver_converged;
            j["verdict"] = rep.solver_converged && ok ? "pass" : "fail";
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "== " << command << " ==\n";
            for (const std::string& line : rep.info) std::cout << line << "\n";
            for (const CheckResult& c : rep.checks) {
                char buf[160];
                std::snprintf(buf, sizeof buf, "check %-32s measured %.6e tolerance %.1e %s",
                              c.name.c_str(), c.measured, c.tolerance, c.pass ? "PASS" : "FAIL");
                std::cout << buf << "\n";
            }
            if (!rep.solver_converged) std::cout << "solver did not converge\n";
            std::cout << "verdict: " << (rep.solver_converged && ok ? "PASS" : "FAIL") << "\n";
        }
        if (!rep.solver_converged) return kNoConvergence;
        return ok ? kPass : kCheckFailed;
    }
};

// exact bracket algebra as coefficient maps over generator ids
std::map<int, long long> bracket_map(Algebra alg, int a, int b) {
    std::map<int, long long> out;
    for (const BracketTerm& t : commutator(Gen{alg, a}, Gen{alg, b}))
        if (t.coeff != 0) out[t.gen.id] += t.coeff;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

bool check_antisymmetry(Algebra alg) {
    const int n = generator_count(alg);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto ab = bracket_map(alg, a, b);
            for (const BracketTerm& t : commutator(Gen{alg, b}, Gen{alg, a}))
                ab[t.gen.id] += t.coeff;
            for (const auto& [id, c] : ab)
                if (c != 0) return false;
        }
    return true;
}

bool check_jacobi(Algebra alg) {
    const int n = generator_count(alg);
    auto nested = [&](int a, int b, int c, std::map<int, long long>& acc) {
        // acc += [a, [b, c]]
        for (const BracketTerm& inner : commutator(Gen{alg, b}, Gen{alg, c}))
            for (const BracketTerm& outer : commutator(Gen{alg, a}, inner.gen))
                acc[outer.gen.id] += inner.coeff * outer.coeff;
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                std::map<int, long long> acc;
                nested(a, b, c, acc);
                nested(b, c, a, acc);
                nested(c, a, b, acc);
                for (const auto& [id, v] : acc)
                    if (v != 0) return false;
            }
    return true;
}

bool check_module_brackets(const ModuleRep& M) {
    const Algebra alg = M.weight.alg;
    const int n = generator_count(alg);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            RatMat lhs = bracket(M.mats[static_cast<size_t>(a)], M.mats[static_cast<size_t>(b)]);
            for (const BracketTerm& t : commutator(Gen{alg, a}, Gen{alg, b}))
                lhs = lhs - M.mats[static_cast<size_t>(t.gen.id)] * Rat(t.coeff);
            if (!lhs.is_zero()) return false;
        }
    return true;
}

int cmd_check_algebra(const CliOptions& o) {
    const RunConfig rc = load_with_overrides(o);
    Report R;
    R.command = "check-algebra";
    R.info(std::string("algebra: ") + (rc.algebra == Algebra::sl2 ? "sl2" : "sl3"));
    R.check("bracket_antisymmetry", check_antisymmetry(rc.algebra) ? 0.0 : 1.0, 0.0);
    R.check("jacobi_identity", check_jacobi(rc.algebra) ? 0.0 : 1.0, 0.0);
    for (const SiteConfig& s : rc.sites) {
        const ModuleRep M = build_module(s.weight);
        std::string tag = "weight_";
        for (size_t i = 0; i < s.weight.w.size(); ++i)
            tag += (i ? "_" : "") + std::to_string(s.weight.w[i]);
        R.info("module " + tag + ": dimension " + std::to_string(M.dim));
        R.check(tag + "_bracket_match", check_module_brackets(M) ? 0.0 : 1.0, 0.0);
        const Rat cas = casimir_scalar(M);  // throws when the Casimir is not scalar
        Rat expect;
        if (rc.algebra == Algebra::sl2) {
            const Rat lam(s.weight.w[0]);
            expect = lam + lam * lam / 2;
        } else {
            const Rat p(s.weight.w[0]), q(s.weight.w[1]);
            expect = 2 * (p + q) + Rat(2, 3) * (p * p + p * q + q * q);
        }
        R.check(tag + "_casimir_scalar", cas == expect ? 0.0 : 1.0, 0.0);
        R.info("module " + tag + ": casimir eigenvalue " + cas.str());
    }
    return R.emit(o.as_json);
}

int cmd_solve(const CliOptions& o) {
    const RunConfig rc = load_with_overrides(o);
    const TensorSpace T = make_space(rc);
    Report R;
    R.command = "solve";
    R.extra["solutions"] = json::array();
    if (rc.roots) {
        validate_bethe_config(*rc.roots, T);
        const VectorXcd r = bethe_residual(*rc.roots, T);
        const double res = r.size() == 0 ? 0.0 : r.lpNorm<Eigen::Infinity>();
        R.info("pinned roots " + [&] {
            std::string s = "[";
            for (size_t i = 0; i < rc.roots->w1.size(); ++i) s += (i ? ", " : "") + fmt_cplx(rc.roots->w1[i]);
            s += "]";
            if (!rc.roots->w2.empty()) {
                s += " / [";
                for (size_t i = 0; i < rc.roots->w2.size(); ++i) s += (i ? ", " : "") + fmt_cplx(rc.roots->w2[i]);
                s += "]";
            }
            return s;
        }());
        R.check("pinned_roots_bethe_residual", res, rc.verification.residual_tol);
        return R.emit(o.as_json);
    }
    const std::vector<SolveReport> sols = multistart_solve(
        T, rc.k, rc.l, rc.solver.seed, rc.solver.attempts, rc.solver.max_iter, rc.solver.tol);
    if (sols.empty()) {
        R.rep.solver_converged = false;
        R.info("no converged configuration in " + std::to_string(rc.solver.attempts) + " attempts");
        return R.emit(o.as_json);
    }
    R.info("distinct solutions: " + std::to_string(sols.size()));
    for (const SolveReport& s : sols) {
        std::string line = "  w = [";
        json sol;
        sol["w1"] = json::array();
        sol["w2"] = json::array();
        for (size_t i = 0; i < s.cfg.w1.size(); ++i) {
            line += (i ? ", " : "") + fmt_cplx(s.cfg.w1[i]);
            sol["w1"].push_back(cplx_json(s.cfg.w1[i]));
        }
        line += "]";
        if (!s.cfg.w2.empty()) {
            line += " / [";
            for (size_t i = 0; i < s.cfg.w2.size(); ++i) {
                line += (i ? ", " : "") + fmt_cplx(s.cfg.w2[i]);
                sol["w2"].push_back(cplx_json(s.cfg.w2[i]));
            }
            line += "]";
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "  residual %.6e  iterations %d", s.residual_inf, s.iterations);
        R.info(line + buf);
        sol["residual"] = s.residual_inf;
        sol["iterations"] = s.iterations;
        R.extra["solutions"].push_back(sol);
        R.check("solution_residual", s.residual_inf, 10.0 * rc.solver.tol);
    }
    return R.emit(o.as_json);
}

int cmd_expand(const CliOptions& o) {
    const RunConfig rc = load_with_overrides(o);
    if (rc.algebra != Algebra::sl3) throw config_error("expand needs an sl3 configuration");
    if (!rc.roots) throw config_error("expand needs pinned roots (\"roots1\"/\"roots2\")");
    const FormalKetSum<Cplx> s = p_series(rc.roots->w1, rc.roots->w2);
    if (o.as_json) {
        json j;
        j["command"] = "expand";
        j["terms"] = json::array();
        for (const auto& [lab, coeff] : s.terms) {
            json t;
            t["coeff"] = cplx_json(coeff);
            for (const auto& [key, part] : {std::pair<const char*, const std::vector<Cplx>*>{"w1", &lab.w1},
                                            {"w2", &lab.w2},
                                            {"w3", &lab.w3}}) {
                t[key] = json::array();
                for (const Cplx& x : *part) t[key].push_back(cplx_json(x));
            }
            j["terms"].push_back(t);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "== expand ==\n" << format_ket_sum(s);
    }
    return kPass;
}

int cmd_verify(const CliOptions& o) {
    const RunConfig rc = load_with_overrides(o);
    const TensorSpace T = make_space(rc);
    TheoremCheckOptions opt;
    opt.k = rc.k;
    opt.l = rc.l;
    opt.max_iter = rc.solver.max_iter;
    opt.tol = rc.solver.tol;
    opt.attempts = rc.solver.attempts;
    opt.seed = rc.solver.seed;
    opt.u_samples = rc.verification.u_samples;
    opt.residual_tol = rc.verification.residual_tol;
    opt.fixed_roots = rc.roots;
    Report R;
    R.command = "verify";
    R.rep = theorem_check(T, opt);
    return R.emit(o.as_json);
}

int cmd_decompose(const CliOptions& o) {
    const RunConfig rc = load_with_overrides(o);
    if (rc.algebra != Algebra::sl3) throw config_error("decompose needs an sl3 configuration");
    const TensorSpace T = make_space(rc);
    const WeightFunctions<Cplx> wf = weight_functions(T);
    Report R;
    R.command = "decompose";
    R.info("transcription corrections: none (component displays verified as printed)");
    std::mt19937_64 rng(rc.solver.seed);
    const double radius = 2.0 * std::max(T.z_spread(), 1.0);
    const int shapes[4][3] = {{1, 1, 0}, {1, 1, 1}, {2, 1, 1}, {2, 2, 0}};
    int realized = 0;
    for (const auto& sh : shapes) {
        double worst = 0.0;
        int done = 0;
        for (int attempt = 0; attempt < 24 && done < 3; ++attempt) {
            const int total = sh[0] + sh[1] + sh[2];
            const std::vector<Cplx> vals = sample_points(rng, total, T.z_mean(), radius,
                                                         T.marked_points(), 0.05 * radius);
            KetLabel<Cplx> L(std::vector<Cplx>(vals.begin(), vals.begin() + sh[0]),
                             std::vector<Cplx>(vals.begin() + sh[0], vals.begin() + sh[0] + sh[1]),
                             std::vector<Cplx>(vals.begin() + sh[0] + sh[1], vals.end()));
            const VectorXcd base = evaluate(single_ket(L), T);
            if (base.norm() < 1e-8) continue;  // vacuous label, try another draw
            std::mt19937_64 urng(rc.solver.seed + 17 * attempt);
            std::vector<Cplx> us = o.u_arg.empty()
                                       ? sample_u_points(T, urng, 3, vals)
                                       : std::vector<Cplx>{parse_u(o.u_arg)};
            for (const Cplx& u : us) {
                FormalKetSum<Cplx> total_sum;
                for (Component c : kAllComponents) total_sum += apply_I_component(c, u, L, wf);
                total_sum.cleanup();
                const VectorXcd lhs = evaluate(total_sum, T);
                const VectorXcd rhs = T.gaudin_I(u) * base;
                worst = std::max(worst, (lhs - rhs).norm() /
                                            std::max({rhs.norm(), base.norm(), 1e-30}));
            }
            ++done;
        }
        const std::string name = "decomposition_" + std::to_string(sh[0]) +
                                 std::to_string(sh[1]) + std::to_string(sh[2]);
        if (done == 0) {
            // the sector is identically zero on this space; the evaluated
            // identity is vacuous there, so record the skip instead
            R.info(name + ": skipped, labels of this shape evaluate to zero here");
        } else {
            R.check(name, worst, 1e-10);
            ++realized;
        }
    }
    R.check("decomposition_shapes_realized", realized > 0 ? 0.0 : 1.0, 0.0);
    return R.emit(o.as_json);
}

int cmd_spectrum(const CliOptions& o) {
    const RunConfig rc = load_with_overrides(o);
    const TensorSpace T = make_space(rc);
    Cplx u;
    if (!o.u_arg.empty()) {
        u = parse_u(o.u_arg);
    } else if (!rc.verification.u_points.empty()) {
        u = rc.verification.u_points.front();
    } else {
        std::mt19937_64 rng(rc.solver.seed);
        u = sample_u_points(T, rng, 1, {}).front();
    }
    T.require_off_marked_points(u, "spectrum evaluation point");
    const EigenSystem es = dense_spectrum(T.generating_operator(u));
    std::vector<Cplx> vals(es.values.data(), es.values.data() + es.values.size());
    std::sort(vals.begin(), vals.end(), [](Cplx a, Cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    if (o.as_json) {
        json j;
        j["command"] = "spectrum";
        j["u"] = cplx_json(u);
        j["eigenvalues"] = json::array();
        for (Cplx v : vals) j["eigenvalues"].push_back(cplx_json(v));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "== spectrum ==\nu = " << fmt_cplx(u) << "\n";
        for (Cplx v : vals) std::cout << fmt_cplx(v) << "\n";
    }
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaudin model solver and verification toolkit"};
    app.require_subcommand(1);
    CliOptions o;
    auto* c_alg = app.add_subcommand("check-algebra", "exact bracket/module checks");
    auto* c_solve = app.add_subcommand("solve", "multistart Bethe solve");
    auto* c_expand = app.add_subcommand("expand", "print the eigenvector series expansion");
    auto* c_verify = app.add_subcommand("verify", "end-to-end eigenvector certification");
    auto* c_dec = app.add_subcommand("decompose", "graded-component decomposition identity");
    auto* c_spectrum = app.add_subcommand("spectrum", "dense spectrum of the generating operator");
    add_common(c_alg, o, false);
    add_common(c_solve, o, false);
    add_common(c_expand, o, false);
    add_common(c_verify, o, false);
    add_common(c_dec, o, true);
    add_common(c_spectrum, o, true);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kPass : kBadConfig;
    }
    try {
        if (c_alg->parsed()) return cmd_check_algebra(o);
        if (c_solve->parsed()) return cmd_solve(o);
        if (c_expand->parsed()) return cmd_expand(o);
        if (c_verify->parsed()) return cmd_verify(o);
        if (c_dec->parsed()) return cmd_decompose(o);
        if (c_spectrum->parsed()) return cmd_spectrum(o);
    } catch (const config_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kBadConfig;
    } catch (const collision_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kBadConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kBadConfig;
    } catch (const singular_jacobian_error& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kNoConvergence;
    } catch (const inconsistency_error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kBadConfig;
}
