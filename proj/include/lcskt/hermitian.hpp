#pragma once

#include <optional>

#include "lcskt/families.hpp"

namespace lcskt {

enum class LcsktClass { NOT_LCSKT, TRIVIAL_LCSKT, NONTRIVIAL_LCSKT, KAHLER_LIKE };
const char* to_string(LcsktClass c);

// Affine solution set of {d alpha = 0, alpha ^ H = dH} with its
// classification.  Every element is re-verified against both equations before
// being returned.
struct LcsktSolution {
    std::optional<KForm> particular;  // absent iff the system is inconsistent
    std::vector<KForm> homogeneous_basis;
    LcsktClass classification = LcsktClass::NOT_LCSKT;
    // dH = 0 (an SKT structure) yet no nonzero closed alpha with
    // alpha ^ H = 0 exists; the definition leaves this case unnamed.
    bool skt_but_not_lcskt = false;

    int dimension() const { return static_cast<int>(homogeneous_basis.size()); }
    bool exists_nonzero() const;
};

struct MetricFlags {
    bool kahler = false;
    bool skt = false;
    bool balanced = false;
    bool lcb = false;
    bool lck = false;
};

// A compatible pair (J, g) on a validated algebra together with the derived
// fundamental form and Bismut torsion.  Construction checks symmetry,
// J-compatibility, positive definiteness (leading principal minors) and
// integrability; the torsion is computed by two independent routes that must
// agree exactly.
class HermitianStructure {
  public:
    HermitianStructure(LieAlgebra g, ComplexStructure J, Mat<Scalar> metric);
    static HermitianStructure with_identity_metric(LieAlgebra g, ComplexStructure J);

    const LieAlgebra& algebra() const { return g_; }
    const ComplexStructure& J() const { return J_; }
    const Mat<Scalar>& metric() const { return metric_; }
    int n() const { return g_.dim() / 2; }

    const KForm& fundamental_form() const { return omega_; }
    // H = d^c Omega = i(del - dbar) Omega = d Omega(J., J., J.); see README
    // for the sign convention.
    const KForm& torsion() const { return torsion_; }
    const KForm& torsion_derivative() const { return dH_; }

    // The independent bracket-trace route
    //   (X,Y,Z) -> -g([JX,JY],Z) - g([JY,JZ],X) - g([JZ,JX],Y);
    // construction verifies it agrees with d^c Omega exactly.
    KForm torsion_bracket_formula() const;

    // Unique theta with d Omega^(n-1) = (n-1) theta ^ Omega^(n-1).
    KForm lee_form() const;

    MetricFlags classify() const;

    LcsktSolution lcskt_solve() const;

    Scalar inner(const std::vector<Scalar>& X, const std::vector<Scalar>& Y) const;

  private:
    LieAlgebra g_;
    ComplexStructure J_;
    Mat<Scalar> metric_;
    KForm omega_, torsion_, dH_;
};

HermitianStructure hermitian_from_params(const RealifiedStructure& rs, const MetricParams& m);

// Exact comparison of the pipeline dH against the closed-form expression.
bool dH_closed_form_check(const NonNilpotentFamilyParams& p, const MetricParams& m);
bool dH_closed_form_check(const ReducedFamilyParams& p, const MetricParams& m);
bool dH_closed_form_check_e1(const NilpotentFamilyParams& p, const MetricParams& m);

}  // namespace lcskt
