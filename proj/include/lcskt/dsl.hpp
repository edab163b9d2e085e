#pragma once

#include <map>
#include <optional>
#include <string>

#include "lcskt/families.hpp"

namespace lcskt {

// Named parameter bindings; rational or complex values.
using ParamMap = std::map<std::string, Scalar>;

struct ParsedInput {
    std::optional<LieAlgebra> real;                 // "(...)" tuple form
    std::optional<ComplexEquations> complex_eqs;    // "dk = ..." line form
    ParamMap params;                                // bindings in effect
    bool is_real() const { return real.has_value(); }
};

// One algebra per input: either a Salamon tuple of real structure equations
// or complex coframe equations with apostrophes marking conjugate indices
// (12' = omega^1 ^ conj(omega^2)).  '#' starts a comment, `param NAME = value`
// lines bind parameters; externally supplied bindings win over file bindings.
ParsedInput parse_input(const std::string& text, const ParamMap& external = {});

// Tuple-only entry point: the text must be a real structure-equation tuple.
LieAlgebra parse_real_dsl(const std::string& text, const ParamMap& params = {});
ComplexEquations parse_complex_dsl(const std::string& text, const ParamMap& params = {});

// Realifies complex equations; throws InvalidParams if they fail d^2 = 0
// (a parameter-constraint violation in family shapes).
RealifiedStructure build_from_complex(const ComplexEquations& eqs);

std::string print_real_dsl(const LieAlgebra& g);
std::string print_complex_dsl(const ComplexEquations& eqs);
// One complex form in apostrophe notation (for report output).
std::string form_to_complex_dsl(const KForm& complex_form, int n);

// "a/b", "(re,im)" or a bare integer.
std::optional<Scalar> parse_scalar_literal(const std::string& text);

}  // namespace lcskt
