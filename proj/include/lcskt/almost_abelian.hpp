#pragma once

#include <complex>

#include "lcskt/hermitian.hpp"
#include "lcskt/prng.hpp"

namespace lcskt {

// Hermitian almost abelian algebra in an adapted unitary basis
// (e_1, n_1, e_2n): brackets [e_2n, e_1] = a e_1 + v, [e_2n, X] = A X on the
// abelian ideal, J e_1 = e_2n, J restricted to n_1 given by J1, metric the
// identity.
struct AlmostAbelianData {
    int n = 3;            // half-dimension, >= 3
    Rat a;
    std::vector<Rat> v;   // length 2n-2
    Mat<Rat> A;           // (2n-2) x (2n-2)
    Mat<Rat> J1;          // commutes with A, squares to -Id

    int dim() const { return 2 * n; }
    int n1() const { return 2 * n - 2; }
    void validate() const;  // throws IncompatibleJ1 / InvalidParams

    static Mat<Rat> standard_J1(int n1_dim);
    // ad_{e_2n} restricted to the abelian ideal, the (2n-1)x(2n-1) block
    // matrix [[a, 0], [v, A]].
    Mat<Rat> B() const;
};

struct BuiltAlmostAbelian {
    LieAlgebra algebra;
    ComplexStructure J;
    HermitianStructure hermitian;
};

BuiltAlmostAbelian build_almost_abelian(const AlmostAbelianData& d);

// The three closedness/torsion conditions on a 1-form alpha, checked exactly
// over all basis tuples of the adapted splitting; equivalent to
// {d alpha = 0 and dH = alpha ^ H} and tested against that pipeline check.
bool lcskt_conditions_check(const AlmostAbelianData& d, const KForm& alpha);

struct NondegenerateDecision {
    bool lcskt = false;
    // Admissible values of lambda = alpha(e_2n): none, a single value, or all.
    enum class LambdaKind { NONE, UNIQUE, ALL } lambda_kind = LambdaKind::NONE;
    Rat lambda;
    bool normal = false;    // [A, A^t] = 0, necessary when the verdict is positive
    bool trivial = false;   // dH = 0 for the admitted structure
};

// Decision procedure under det A != 0: alpha restricted to the ideal
// vanishes, a*alpha(e_1) = 0, and S((a+lambda)A + A^2 + A^t A) = 0 which is
// linear in lambda.  Throws DegenerateA when det A = 0.
NondegenerateDecision lcskt_decide_nondegenerate(const AlmostAbelianData& d);

struct RicciForms {
    KForm chern;   // -(a^2 + a tr(A)/2) e^1 ^ e^2n
    KForm bismut;  // -(a^2 - a tr(A)/2 + |v|^2) e^1 ^ e^2n - (A^t v)-flat ^ e^2n
};

RicciForms ricci_forms(const AlmostAbelianData& d);

// -(tr A) e^2n + (J v)-flat.  This normalization equals (n-1) times the
// wedge-equation Lee form of the built structure (see README); both are
// exposed and the exact relation is tested.
KForm lee_form_trace_formula(const AlmostAbelianData& d);

// S(aA + A^2 + A^t A) = 0, the closed-form pluriclosedness test; agrees with
// dH = 0 on the built structure.
bool skt_check(const AlmostAbelianData& d);

// For balanced data (v = 0, tr A = 0): a positive LCSKT verdict must coincide
// with A skew (the Kaehler case).  Returns true when the implication holds.
bool balanced_lcskt_implies_kahler(const AlmostAbelianData& d);

struct EigenDiagnostic {
    std::vector<std::complex<double>> eigenvalues;  // of A, floating point
    // Real parts binned against {0, -(a+lambda)/2} within tolerance; display
    // only, never part of an exact verdict.
    std::vector<int> bin;  // 0, 1, or -1 when neither matches
    double lambda_used = 0.0;
    bool all_binned = false;
};

EigenDiagnostic eigen_diagnostic(const AlmostAbelianData& d, double tolerance = 1e-9);

struct LatticeScreen {
    std::vector<double> char_poly;  // coefficients of det(xI - exp(t0 B)), degree descending
    std::vector<bool> coefficient_integral;
    bool all_integral = false;
    double t0 = 0.0;
};

// Necessary-condition screen: characteristic polynomial of exp(t0 B) within
// tolerance of integers.  Floating point by nature; never claims existence.
LatticeScreen lattice_screen(const AlmostAbelianData& d, double t0, double tolerance = 1e-9);

// Random data with [A, J1] = 0 over the standard J1 (A = realified random
// complex matrix), small-height rationals.
AlmostAbelianData random_almost_abelian(SplitMix64& rng, int n = 3, bool force_balanced = false);

}  // namespace lcskt
