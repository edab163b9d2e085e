#pragma once

#include <map>
#include <utility>

#include "lcskt/complex_structure.hpp"

namespace lcskt {

// Complexified coframe (omega^1..omega^n, conj(omega^1)..conj(omega^n)) for an
// integrable J.  Forms over this coframe reuse KForm with dimension 2n; index
// j <= n is omega^j, index n+j its conjugate.
class ComplexCoframe {
  public:
    // Rows of the (1,0) block from the eigenspace projector; conjugate block
    // appended.  J must be integrable for bidegree statements to make sense;
    // integrability is the caller's responsibility (checked where it matters).
    explicit ComplexCoframe(const ComplexStructure& J);

    int n() const { return n_; }
    int real_dim() const { return 2 * n_; }

    KForm to_complex(const KForm& real_form) const;
    KForm to_real(const KForm& complex_form) const;

    // (p,q) of a monomial mask in complex coordinates.
    std::pair<int, int> bidegree_of(Mask m) const;

    // Split a complex-coordinates form into homogeneous (p,q) pieces.
    std::map<std::pair<int, int>, KForm> split_complex(const KForm& complex_form) const;

    // Split a real-coframe form; values are returned in complex coordinates.
    std::map<std::pair<int, int>, KForm> split(const KForm& real_form) const;

    // Swaps barred and unbarred indices and conjugates coefficients.
    KForm conjugate_complex(const KForm& complex_form) const;

  private:
    int n_;
    Mat<Scalar> C_;     // row A: eta^A over the real coframe
    Mat<Scalar> Cinv_;  // row a: f^a over the complex coframe
};

// d^c on 2-forms: -d(beta)(J.,J.,J.), cross-checked exactly against
// i(dbar - del) applied through the bidegree machinery; RouteMismatch if the
// routes disagree.
KForm dc(const LieAlgebra& g, const ComplexStructure& J, const KForm& beta);

// Exterior differential transported to complex coordinates.
KForm d_complex(const LieAlgebra& g, const ComplexCoframe& frame, const KForm& complex_form);

}  // namespace lcskt
