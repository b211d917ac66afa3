#include "gaudin/config.hpp"

#include <fstream>

#include <json.hpp>

namespace gaudin {

namespace {

using nlohmann::json;

Cplx parse_complex(const json& j, const char* what) {
    if (j.is_number()) return Cplx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return Cplx(j[0].get<double>(), j[1].get<double>());
    throw config_error(std::string(what) + " must be a number or an [re, im] pair");
}

std::vector<Cplx> parse_complex_list(const json& j, const char* what) {
    if (!j.is_array()) throw config_error(std::string(what) + " must be an array");
    std::vector<Cplx> out;
    for (const json& e : j) out.push_back(parse_complex(e, what));
    return out;
}

long long parse_weight_entry(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw config_error(std::string(what) + " must be a nonnegative integer");
    return j.get<long long>();
}

WeightLabel parse_weight(const json& j, Algebra alg) {
    WeightLabel w;
    w.alg = alg;
    if (alg == Algebra::sl2) {
        if (j.is_array() && j.size() == 1)
            w.w = {parse_weight_entry(j[0], "sl2 weight")};
        else
            w.w = {parse_weight_entry(j, "sl2 weight")};
    } else {
        if (!j.is_array() || j.size() != 2)
            throw config_error("sl3 weight must be a [p, q] pair");
        w.w = {parse_weight_entry(j[0], "sl3 weight"), parse_weight_entry(j[1], "sl3 weight")};
    }
    return w;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("configuration is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw config_error("configuration root must be an object");

    RunConfig rc;
    const std::string alg = j.value("algebra", std::string());
    if (alg == "sl2")
        rc.algebra = Algebra::sl2;
    else if (alg == "sl3")
        rc.algebra = Algebra::sl3;
    else
        throw config_error("\"algebra\" must be \"sl2\" or \"sl3\"");

    if (!j.contains("sites") || !j["sites"].is_array() || j["sites"].empty())
        throw config_error("\"sites\" must be a nonempty array");
    for (const json& s : j["sites"]) {
        if (!s.is_object() || !s.contains("weight") || !s.contains("z"))
            throw config_error("each site needs \"weight\" and \"z\"");
        rc.sites.push_back({parse_weight(s["weight"], rc.algebra), parse_complex(s["z"], "site z")});
    }

    if (j.contains("excitations")) {
        const json& e = j["excitations"];
        if (!e.is_object()) throw config_error("\"excitations\" must be an object");
        if (rc.algebra == Algebra::sl2) {
            if (!e.contains("n") || !e["n"].is_number_integer() || e["n"].get<int>() < 0)
                throw config_error("sl2 excitations need a nonnegative integer \"n\"");
            rc.k = e["n"].get<int>();
        } else {
            if (!e.contains("k") || !e.contains("l") || !e["k"].is_number_integer() ||
                !e["l"].is_number_integer() || e["k"].get<int>() < 0 || e["l"].get<int>() < 0)
                throw config_error("sl3 excitations need nonnegative integers \"k\" and \"l\"");
            rc.k = e["k"].get<int>();
            rc.l = e["l"].get<int>();
        }
    }

    if (j.contains("solver")) {
        const json& s = j["solver"];
        if (!s.is_object()) throw config_error("\"solver\" must be an object");
        rc.solver.max_iter = s.value("max_iter", rc.solver.max_iter);
        rc.solver.tol = s.value("tol", rc.solver.tol);
        rc.solver.attempts = s.value("attempts", rc.solver.attempts);
        rc.solver.seed = s.value("seed", rc.solver.seed);
        if (rc.solver.max_iter <= 0 || rc.solver.tol <= 0.0 || rc.solver.attempts <= 0)
            throw config_error("solver settings must be positive");
    }

    if (j.contains("verification")) {
        const json& v = j["verification"];
        if (!v.is_object()) throw config_error("\"verification\" must be an object");
        rc.verification.u_samples = v.value("u_samples", rc.verification.u_samples);
        rc.verification.residual_tol = v.value("residual_tol", rc.verification.residual_tol);
        if (v.contains("u_points"))
            rc.verification.u_points = parse_complex_list(v["u_points"], "u_points");
        if (rc.verification.u_samples <= 0 || rc.verification.residual_tol <= 0.0)
            throw config_error("verification settings must be positive");
    }

    if (rc.algebra == Algebra::sl2) {
        if (j.contains("roots1") || j.contains("roots2"))
            throw config_error("sl2 configurations pin roots via \"roots\"");
        if (j.contains("roots"))
            rc.roots = BetheConfig{parse_complex_list(j["roots"], "roots"), {}};
    } else {
        if (j.contains("roots")) throw config_error("sl3 configurations pin roots via \"roots1\"/\"roots2\"");
        if (j.contains("roots1") != j.contains("roots2"))
            throw config_error("\"roots1\" and \"roots2\" must be pinned together");
        if (j.contains("roots1"))
            rc.roots = BetheConfig{parse_complex_list(j["roots1"], "roots1"),
                                   parse_complex_list(j["roots2"], "roots2")};
    }
    if (rc.roots) {
        if (static_cast<int>(rc.roots->w1.size()) != rc.k ||
            static_cast<int>(rc.roots->w2.size()) != rc.l)
            throw config_error("pinned root counts disagree with the excitation counts");
    }
    return rc;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open configuration file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_config(text);
}

TensorSpace make_space(const RunConfig& rc) {
    try {
        return TensorSpace(rc.algebra, rc.sites);
    } catch (const collision_error& e) {
        throw config_error(std::string("invalid site list: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw config_error(std::string("invalid site list: ") + e.what());
    }
}

}  // namespace gaudin
