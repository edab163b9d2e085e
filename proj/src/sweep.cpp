#include "lcskt/sweep.hpp"

#include <sstream>

#include "lcskt/almost_abelian.hpp"
#include "lcskt/prng.hpp"

namespace lcskt {

namespace {

MetricParams random_metric(SplitMix64& rng) {
    // Diagonally dominant draws are positive definite with good probability;
    // rejection-sample the rest.
    while (true) {
        MetricParams m;
        m.r = rng.positive_rat(8) + 2;
        m.s = rng.positive_rat(8) + 2;
        m.t = rng.positive_rat(8) + 2;
        m.u = rng.scalar(4);
        m.v = rng.scalar(4);
        m.z = rng.scalar(4);
        if (m.positive_definite()) return m;
    }
}

std::string describe(const MetricParams& m) {
    std::ostringstream out;
    out << "metric r=" << to_string(m.r) << " s=" << to_string(m.s) << " t=" << to_string(m.t)
        << " u=" << to_string(m.u) << " v=" << to_string(m.v) << " z=" << to_string(m.z);
    return out.str();
}

}  // namespace

std::vector<std::string> sweep_families() {
    return {"nonnil", "nil-e0", "nil-e1", "almost-abelian"};
}

SweepResult run_sweep(const std::string& family, int draws, std::uint64_t seed) {
    SweepResult result;
    result.family = family;
    result.seed = seed;
    result.draws = draws;
    SplitMix64 rng(seed);
    for (int i = 0; i < draws; ++i) {
        bool pass = false;
        std::ostringstream repro;
        repro << "draw " << i << " seed " << seed << ": ";
        if (family == "nonnil") {
            NonNilpotentFamilyParams p;
            p.A = rng.scalar(6);
            p.E = rng.unit_scalar(6);
            p.b = rng.nonzero_rat(6);
            MetricParams m = random_metric(rng);
            pass = dH_closed_form_check(p, m);
            repro << "A=" << to_string(p.A) << " E=" << to_string(p.E) << " b=" << to_string(p.b)
                  << " " << describe(m);
        } else if (family == "nil-e0") {
            ReducedFamilyParams p;
            p.rho = static_cast<int>(rng.int_in(0, 1));
            p.B = rng.scalar(6);
            p.D = rng.scalar(6);
            MetricParams m = random_metric(rng);
            pass = dH_closed_form_check(p, m);
            repro << "rho=" << p.rho << " B=" << to_string(p.B) << " D=" << to_string(p.D) << " "
                  << describe(m);
        } else if (family == "nil-e1") {
            NilpotentFamilyParams p;
            p.epsilon = 1;
            p.rho = static_cast<int>(rng.int_in(0, 1));
            p.A = rng.scalar(6);
            p.B = rng.scalar(6);
            p.C = rng.scalar(6);
            p.D = rng.scalar(6);
            MetricParams m = random_metric(rng);
            pass = dH_closed_form_check_e1(p, m);
            repro << "rho=" << p.rho << " B=" << to_string(p.B) << " C=" << to_string(p.C) << " "
                  << describe(m);
        } else if (family == "almost-abelian") {
            AlmostAbelianData d = random_almost_abelian(rng);
            BuiltAlmostAbelian built = build_almost_abelian(d);
            // Random closed alpha from the exact kernel of d on 1-forms.
            KForm alpha(6, 1);
            for (const KForm& basis_form : closed_one_forms(built.algebra))
                alpha += basis_form.scaled(Scalar(rng.rat(5)));
            bool oracle = lcskt_conditions_check(d, alpha);
            bool generic = built.hermitian.torsion_derivative() == alpha.wedge(built.hermitian.torsion());
            pass = (oracle == generic);
            if (pass && !is_zero(d.A.det())) {
                NondegenerateDecision dec = lcskt_decide_nondegenerate(d);
                pass = dec.lcskt == built.hermitian.lcskt_solve().exists_nonzero();
            }
            repro << "a=" << to_string(d.a) << " alpha=" << alpha.str();
        } else {
            throw Error("unknown sweep family: " + family);
        }
        if (pass)
            ++result.passes;
        else
            result.failures.push_back(repro.str());
    }
    return result;
}

}  // namespace lcskt
