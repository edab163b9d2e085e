#include "lcskt/driver.hpp"

#include <sstream>

namespace lcskt {

ComplexStructure parse_J_spec(const std::string& spec, int dim) {
    if (spec.empty() || spec == "standard") return ComplexStructure::standard(dim);
    const std::string prefix = "pairs:";
    if (spec.rfind(prefix, 0) != 0) throw InvalidParams("J spec expects 'standard' or 'pairs:a>b,...'");
    std::vector<std::pair<int, int>> pairs;
    std::stringstream ss(spec.substr(prefix.size()));
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t gt = item.find('>');
        if (gt == std::string::npos) throw InvalidParams("J pair must be a>b: " + item);
        pairs.emplace_back(std::stoi(item.substr(0, gt)), std::stoi(item.substr(gt + 1)));
    }
    return ComplexStructure::from_pairs(dim, pairs);
}

MetricParams MetricSpec::params() const {
    MetricParams m;
    std::stringstream ss(text.substr(7));
    std::string item;
    while (std::getline(ss, item, ',')) {
        // complex values contain a comma; re-join until the paren closes
        while (item.find('(') != std::string::npos && item.find(')') == std::string::npos) {
            std::string more;
            if (!std::getline(ss, more, ',')) break;
            item += "," + more;
        }
        size_t eq = item.find('=');
        if (eq == std::string::npos) throw InvalidParams("metric params entry needs '=': " + item);
        std::string key = item.substr(0, eq);
        auto value = parse_scalar_literal(item.substr(eq + 1));
        if (!value) throw InvalidParams("bad metric value: " + item);
        if (key == "r" || key == "s" || key == "t") {
            if (!value->is_real()) throw InvalidParams(key + " must be rational");
            (key == "r" ? m.r : key == "s" ? m.s : m.t) = value->re;
        } else if (key == "u") {
            m.u = *value;
        } else if (key == "v") {
            m.v = *value;
        } else if (key == "z") {
            m.z = *value;
        } else {
            throw InvalidParams("unknown metric parameter: " + key);
        }
    }
    return m;
}

Mat<Scalar> MetricSpec::matrix(int dim) const {
    if (text == "identity") return Mat<Scalar>::identity(dim);
    const std::string diag = "diag:";
    if (text.rfind(diag, 0) == 0) {
        Mat<Scalar> g(dim, dim);
        std::stringstream ss(text.substr(diag.size()));
        std::string item;
        int i = 0;
        while (std::getline(ss, item, ',')) {
            if (i >= dim) throw InvalidParams("diag metric has too many entries");
            auto value = parse_rational(item);
            if (!value) throw InvalidParams("bad diagonal entry: " + item);
            g(i, i) = Scalar(*value);
            ++i;
        }
        if (i != dim) throw InvalidParams("diag metric needs one entry per coframe element");
        return g;
    }
    throw InvalidParams("metric spec expects identity, diag:..., or params:...");
}

BuiltInput build_input(const std::string& text, const ParamMap& params, const std::string& j_spec,
                       const MetricSpec& metric_spec) {
    ParsedInput input = parse_input(text, params);
    if (input.is_real()) {
        LieAlgebra g = *input.real;
        g.require_valid();
        ComplexStructure J = parse_J_spec(j_spec, g.dim());
        if (metric_spec.is_params())
            throw InvalidParams("params metrics apply to complex-coframe inputs");
        Mat<Scalar> metric = metric_spec.matrix(g.dim());
        return BuiltInput{std::move(g), std::move(J), std::move(metric), std::nullopt, false};
    }
    RealifiedStructure rs = build_from_complex(*input.complex_eqs);
    if (!j_spec.empty() && j_spec != "standard")
        throw InvalidParams("complex-coframe inputs fix J; omit the J spec");
    if (metric_spec.is_params()) {
        MetricParams mp = metric_spec.params();
        mp.require_positive_definite();
        Mat<Scalar> metric = mp.metric_matrix();
        return BuiltInput{std::move(rs.algebra), std::move(rs.J), std::move(metric), mp, true};
    }
    Mat<Scalar> metric = metric_spec.matrix(rs.algebra.dim());
    return BuiltInput{std::move(rs.algebra), std::move(rs.J), std::move(metric), std::nullopt, true};
}

ParamMap parse_param_entries(const std::vector<std::string>& entries) {
    ParamMap out;
    for (const std::string& e : entries) {
        size_t eq = e.find('=');
        if (eq == std::string::npos) throw InvalidParams("param expects NAME=VALUE: " + e);
        auto value = parse_scalar_literal(e.substr(eq + 1));
        if (!value) throw InvalidParams("param value must be rational or (re,im): " + e);
        out[e.substr(0, eq)] = *value;
    }
    return out;
}

}  // namespace lcskt
