#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lcskt/lie_algebra.hpp"

namespace lcskt {

struct NijenhuisReport {
    // N(e_i, e_j) for i < j, only nonzero entries.
    std::map<std::pair<int, int>, std::vector<Scalar>> values;
    bool vanishes() const { return values.empty(); }
};

struct ComplexStructureClass {
    bool abelian = false;
    bool bi_invariant = false;
};

// An endomorphism J with J^2 = -Id, real entries, acting on the algebra by
// J e_j = sum_i J(i,j) e_i.
class ComplexStructure {
  public:
    explicit ComplexStructure(Mat<Scalar> J);

    // Convenience: J e_a = e_b for each pair (a,b); remaining action forced by
    // J^2 = -Id.
    static ComplexStructure from_pairs(int dim, const std::vector<std::pair<int, int>>& pairs);
    // The realification pairing J f_{2j-1} = f_{2j}.
    static ComplexStructure standard(int dim);

    int dim() const { return J_.rows(); }
    const Mat<Scalar>& matrix() const { return J_; }

    std::vector<Scalar> apply(const std::vector<Scalar>& X) const { return J_.apply(X); }

    // beta(J., J., ..., J.)
    KForm pullback(const KForm& beta) const;

    NijenhuisReport nijenhuis(const LieAlgebra& g) const;
    bool is_integrable(const LieAlgebra& g) const { return nijenhuis(g).vanishes(); }

    ComplexStructureClass classify(const LieAlgebra& g) const;

    // Basis of (1,0)-forms: row-reduced kernel of (J^t - i Id) acting on
    // complexified coframe coefficient vectors.
    std::vector<std::vector<Scalar>> coframe_10() const;

  private:
    Mat<Scalar> J_;
};

}  // namespace lcskt
