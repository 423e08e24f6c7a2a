#pragma once

#include <optional>
#include <string>

#include "f2rp/poly.hpp"
#include "f2rp/rational.hpp"

namespace f2rp {

// Minimal polynomial h of omega = zeta_r + zeta_r^{-1}, monic of degree
// (r-1)/2, expanded exactly in the cyclotomic ring and memoized.
// Satisfies z^{(r-1)/2} h(z + 1/z) = 1 + z + ... + z^{r-1}.
const IntPoly& omega_minimal_poly(long r);

// One generalized Fermat equation A x^2 + B y^r = C z^p with an optional
// candidate solution.
struct EquationInstance {
    Int A;
    Int B;
    Int C{1};
    long r{5};

    struct Solution {
        Int a, b, c;
        long p;
    };
    std::optional<Solution> solution;

    EquationInstance(Int A_, Int B_, Int C_, long r_);
    void attach_solution(Int a, Int b, Int c, long p);
};

struct HyperellipticModel {
    IntPoly f;       // y^2 = f(x), odd degree
    int genus;       // (deg f - 1)/2
    Int disc;        // curve discriminant, 2^{4g} * poly_discriminant(f)
    bool cm_branch;  // degenerate a=0 / b=0 construction
    std::string cm_field;  // "Q(zeta_r)" or "Q(i)" when cm_branch
};

// y^2 = (ABb)^{(r-1)/2} x h(2 + x^2/(ABb)) + 2 A^{(r+1)/2} B^{(r-1)/2} a,
// expanded to integer coefficients (all divisions exact by construction);
// for b = 0 the model is y^2 = x^r + 2 A^{(r+1)/2} B^{(r-1)/2} a.
HyperellipticModel build_frey_curve(const EquationInstance& inst, const Int& a, const Int& b);

// Closed-form curve discriminant of the Frey model,
//   (-1)^{(r-1)/2} 2^{3(r-1)} r^r A^{r(r-1)/2} B^{(r-1)^2/2} (Aa^2+Bb^r)^{(r-1)/2},
// equal to 2^{2(r-1)} * poly_discriminant(build_frey_curve(...).f) exactly
// on both branches.
Int frey_discriminant(const EquationInstance& inst, const Int& a, const Int& b);

struct GeneralParams {
    Int z;
    Int s;
    Int delta;  // s^2 - 4 z^r
};

GeneralParams general_params(const EquationInstance& inst, const Int& a, const Int& b);

// y^2 = F(x) = (-z)^{(r-1)/2} x h(2 - x^2/z) + s, the two-parameter family
// the Frey curve specializes; z must be nonzero.
HyperellipticModel build_general_curve(const Int& z, const Int& s, long r);

// Closed form (-1)^{(r-1)/2} 2^{2(r-1)} r^r (s^2-4z^r)^{(r-1)/2}, again the
// curve normalization 2^{2(r-1)} * poly_discriminant(F).
Int general_curve_discriminant(const Int& z, const Int& s, long r);

struct SpecializationPoint {
    Rat t0;            // A a^2 / (A a^2 + B b^r)
    Rat t0_product;    // t0 (t0 - 1)
    Rat twist_factor;  // |b^{(r-1)/2} a / (A a^2 + B b^r)|, positive representative
};

SpecializationPoint specialize(const EquationInstance& inst, const Int& a, const Int& b);

// j-invariants of the elliptic curve C2(1/t0): y^2 = x^3 + 2x^2 + (1/t0) x
// and of its 2-isogenous curve C2'.
struct DarmonJPair {
    Rat j_c2;
    Rat j_c2_prime;
};

DarmonJPair darmon_j_invariants(const EquationInstance& inst, const Int& a, const Int& b);

// Checkable hypotheses for irreducibility / modularity / large image,
// plus the CM degenerations.  Never throws; everything is reported.
struct HypothesisReport {
    Int aa2;  // A a^2
    Int bbr;  // B b^r
    bool sum_not_unit;            // A a^2 + B b^r != +-1
    bool not_in_two_power_list;   // (A a^2, B b^r) not of the form (2^i +- 1, -+ 1)
    bool irreducibility_r_ge_11;  // both of the above
    bool not_in_r7_list;          // (A a^2, B b^r) avoids (+-63, +-1), (+-63, -+64)
    bool irreducibility_r_7;
    bool modularity;           // r != 5 and the r-appropriate list condition
    bool large_image_aux_ell;  // exists ell != 2, r dividing C*c
    bool large_image_r_coprime;  // r does not divide C*c
    bool large_image;
    bool cm_by_cyclotomic;  // b = 0
    bool cm_by_gaussian;    // a = 0, b = +-1
};

HypothesisReport check_hypotheses(const EquationInstance& inst, const Int& a, const Int& b,
                                  const Int& c);

// Igusa invariants of y^2 = x^5 - 25 b x^3 + 125 b^2 x - 250 a together
// with the 2-integrality test of the ratios J_{2i}^5 / J_10^i.
struct IgusaData {
    Int J2, J4, J6, J8, J10;
    bool potentially_good_at_2;
};

IgusaData igusa_invariants_r5(const Int& a, const Int& b);

// The one-parameter family x = 10v(80v^4-40v^2+1), y = 20v^2+1,
// q = 2000v^4-200v^2+1 satisfying 5x^2 + q^2 = y^5 identically.
struct LmtPoint {
    Int x, y, q_alpha;
};

LmtPoint lmt_family(const Int& v);

// a = 5n(m^4-10m^2n^2+5n^4), c_p = m(m^4-50m^2n^2+125n^4).
struct ParametrizationPoint {
    Int a, c_p;
};

ParametrizationPoint parametrization_check(const Int& m, const Int& n);

}  // namespace f2rp
