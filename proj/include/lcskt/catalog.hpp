#pragma once

#include "lcskt/almost_abelian.hpp"
#include "lcskt/dsl.hpp"

namespace lcskt {

// A named algebra with whatever extra structure its source fixes: a complex
// coframe presentation, a distinguished (J, g), an adapted almost abelian
// presentation, or a basis change linking presentations.
struct CatalogEntry {
    std::string name;
    std::string description;
    LieAlgebra algebra;
    std::optional<ComplexEquations> coframe;         // complex presentation
    std::optional<ComplexStructure> J;               // on the algebra's own basis
    std::optional<Mat<Scalar>> metric;
    std::optional<AlmostAbelianData> adapted;        // almost abelian presentation
};

std::vector<std::string> catalog_names();
// "l8" needs p, q, s bound; throws UnboundParam otherwise, UnknownName for
// unregistered names.
CatalogEntry catalog_get(const std::string& name, const ParamMap& params = {});

}  // namespace lcskt
