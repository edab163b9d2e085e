#pragma once

#include "lcskt/catalog.hpp"

namespace lcskt {

// Shared front-end plumbing for the CLI and the python module: string specs
// for J and metrics, and the input builder.

// "standard" or "pairs:a>b,..." meaning J e_a = e_b.
ComplexStructure parse_J_spec(const std::string& spec, int dim);

// "identity" | "diag:d1,...,dn" | "params:r=..,s=..,t=..,u=..,v=..,z=.."
// (the params form applies to complex-coframe inputs only).
struct MetricSpec {
    std::string text = "identity";
    bool is_params() const { return text.rfind("params:", 0) == 0; }
    MetricParams params() const;
    Mat<Scalar> matrix(int dim) const;
};

struct BuiltInput {
    LieAlgebra algebra;
    ComplexStructure J;
    Mat<Scalar> metric;
    std::optional<MetricParams> params;
    bool from_complex;
};

BuiltInput build_input(const std::string& text, const ParamMap& params, const std::string& j_spec,
                       const MetricSpec& metric_spec);

// NAME=VALUE entries with rational or (re,im) values.
ParamMap parse_param_entries(const std::vector<std::string>& entries);

}  // namespace lcskt
