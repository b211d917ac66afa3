#include "gaudin/ketcalc.hpp"

#include <cstdio>

namespace gaudin {

bool labels_close(const KetLabel<Cplx>& a, const KetLabel<Cplx>& b, double rel_tol) {
    auto scale_of = [](const KetLabel<Cplx>& L) {
        double s = 1.0;
        for (const auto* part : {&L.w1, &L.w2, &L.w3})
            for (const Cplx& x : *part) s = std::max(s, std::abs(x));
        return s;
    };
    const double tol = rel_tol * std::max(scale_of(a), scale_of(b));
    auto close = [&](const std::vector<Cplx>& x, const std::vector<Cplx>& y) {
        if (x.size() != y.size()) return false;
        for (size_t i = 0; i < x.size(); ++i)
            if (std::abs(x[i] - y[i]) > tol) return false;
        return true;
    };
    return close(a.w1, b.w1) && close(a.w2, b.w2) && close(a.w3, b.w3);
}

WeightFunctions<Cplx> weight_functions(const TensorSpace& T) {
    if (T.algebra() != Algebra::sl3)
        throw std::invalid_argument("weight_functions needs an sl3 space");
    WeightFunctions<Cplx> wf;
    wf.poles = T.marked_points();
    for (int i = 0; i < T.num_sites(); ++i) {
        wf.m1.push_back(T.site_weight(1, i));
        wf.m2.push_back(T.site_weight(2, i));
    }
    return wf;
}

VectorXcd evaluate(const FormalKetSum<Cplx>& s, const TensorSpace& T) {
    if (T.algebra() != Algebra::sl3) throw std::invalid_argument("evaluate needs an sl3 space");
    VectorXcd v = VectorXcd::Zero(T.dim());
    const Gen f1{Algebra::sl3, sl3gen::f1};
    const Gen f2{Algebra::sl3, sl3gen::f2};
    const Gen f3{Algebra::sl3, sl3gen::f3};
    for (const auto& [lab, coeff] : s.terms) {
        VectorXcd x = T.vacuum();
        for (auto it = lab.w3.rbegin(); it != lab.w3.rend(); ++it) x = T.apply_current(f3, *it, x);
        for (auto it = lab.w2.rbegin(); it != lab.w2.rend(); ++it) x = T.apply_current(f2, *it, x);
        for (auto it = lab.w1.rbegin(); it != lab.w1.rend(); ++it) x = T.apply_current(f1, *it, x);
        v += coeff * x;
    }
    return v;
}

namespace {

std::string format_number(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);  // normalize -0
    return buf;
}

std::string format_complex(Cplx c) {
    if (c.imag() == 0.0) return format_number(c.real());
    std::string out = format_number(c.real());
    out += c.imag() < 0 ? "-" : "+";
    out += format_number(std::abs(c.imag()));
    out += "i";
    return out;
}

std::string format_list(const std::vector<Cplx>& v) {
    std::string out = "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += format_complex(v[i]);
    }
    return out + "}";
}

}  // namespace

std::string format_ket_sum(const FormalKetSum<Cplx>& s) {
    if (s.terms.empty()) return "0\n";
    std::string out;
    for (const auto& [lab, coeff] : s.terms) {
        out += format_complex(coeff);
        out += " * |";
        out += format_list(lab.w1);
        out += ",";
        out += format_list(lab.w2);
        out += ",";
        out += format_list(lab.w3);
        out += ">\n";
    }
    return out;
}

const char* component_name(Component c) {
    switch (c) {
        case Component::I1_0: return "I1_0";
        case Component::I1_m: return "I1_m";
        case Component::I2_0: return "I2_0";
        case Component::I2_m: return "I2_m";
        case Component::I2_p: return "I2_p";
        case Component::I3_0: return "I3_0";
        case Component::I3_p: return "I3_p";
        case Component::I0_0: return "I0_0";
        case Component::I0_p: return "I0_p";
    }
    return "?";
}

Component parse_component(const std::string& name) {
    for (Component c : kAllComponents)
        if (name == component_name(c)) return c;
    throw std::invalid_argument("unknown component name: " + name);
}

}  // namespace gaudin
