#pragma once

#include <utility>

#include "lcskt/bidegree.hpp"

namespace lcskt {

// Structure equations in complex coordinates: d_omega[k] = d omega^(k+1), a
// 2-form over the 2n-dimensional complexified coframe (index n+j = conjugate).
struct ComplexEquations {
    int n = 0;
    std::vector<KForm> d_omega;
};

struct RealifiedStructure {
    LieAlgebra algebra;
    ComplexStructure J;
};

// Realification through omega^j = f^{2j-1} + i f^{2j}.  The returned algebra
// is validated and the returned J is the standard pairing, integrable whenever
// the complex equations are formally integrable.
RealifiedStructure realify(const ComplexEquations& eqs);

// The substitution matrix of the standard frame (row j: omega^j over f).
Mat<Scalar> standard_frame_rows(int n);

// Normal form with non-nilpotent J on a 6-dimensional nilpotent algebra:
//   d omega^2 = E omega^13 + omega^{1,conj 3},
//   d omega^3 = A omega^{1,conj 1} + i b omega^{1,conj 2} - i b conj(E) omega^{2,conj 1}.
struct NonNilpotentFamilyParams {
    Scalar A;
    Scalar E;  // |E| = 1
    Rat b;     // nonzero
    void validate() const;
};

// Normal form with nilpotent J:
//   d omega^2 = eps omega^{1,conj 1},
//   d omega^3 = rho omega^12 + (1-eps) A omega^{1,conj 1} + B omega^{1,conj 2}
//             + C omega^{2,conj 1} + (1-eps) D omega^{2,conj 2}.
struct NilpotentFamilyParams {
    int epsilon = 0;  // 0 or 1
    int rho = 0;      // 0 or 1
    Scalar A, B, C, D;
    void validate() const;
};

// The 2-step reduction (first Betti number >= 4):
//   d omega^3 = rho omega^12 + omega^{1,conj 1} + B omega^{1,conj 2} + D omega^{2,conj 2}.
struct ReducedFamilyParams {
    int rho = 0;
    Scalar B, D;
    void validate() const;
};

ComplexEquations family_equations(const NonNilpotentFamilyParams& p);
ComplexEquations family_equations(const NilpotentFamilyParams& p);
ComplexEquations family_equations(const ReducedFamilyParams& p);
// Bi-invariant J on the complex Heisenberg algebra: d omega^3 = omega^12.
ComplexEquations bi_invariant_equations();

RealifiedStructure build_family(const NonNilpotentFamilyParams& p);
RealifiedStructure build_family(const NilpotentFamilyParams& p);
RealifiedStructure build_family(const ReducedFamilyParams& p);

// Generic Hermitian metric coefficients in a complex coframe (n = 3):
// g = r |omega^1|^2 + s |omega^2|^2 + t |omega^3|^2 plus u, v, z cross terms.
struct MetricParams {
    Rat r{1}, s{1}, t{1};
    Scalar u, v, z;

    // The six positivity inequalities; all must be strict.
    bool positive_definite() const;
    void require_positive_definite() const;

    // Fundamental 2-form in complex coordinates (dim 6).
    KForm fundamental_form_complex() const;
    // Metric matrix on the realified coframe basis (6x6, real entries).
    Mat<Scalar> metric_matrix() const;
};

// Closed-form dH in complex coordinates for each family; exact identities
// tested against the full pipeline.
KForm expected_dH(const NonNilpotentFamilyParams& p, const MetricParams& m);
KForm expected_dH(const ReducedFamilyParams& p, const MetricParams& m);
KForm expected_dH_nilpotent_e1(const NilpotentFamilyParams& p, const MetricParams& m);

// Closed-form solutions of the torsion equation on the two distinguished
// nilpotent coframes (real coframe 1-forms).
KForm h16_alpha_closed_form(const MetricParams& m);

}  // namespace lcskt
