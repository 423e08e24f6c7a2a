#pragma once

#include <optional>
#include <string>
#include <vector>

#include "f2rp/cluster.hpp"
#include "f2rp/frey.hpp"
#include "f2rp/localfields.hpp"

namespace f2rp {

// Reduction/classification of one rational prime for the Frey curve and
// the attached 2-dimensional system.
struct PrimeCase {
    enum class Kind { GoodReduction, Multiplicative, PotentiallyGoodAB, AtR, AtTwo };
    enum class AtTwoKind { V2GE6, AEven, CEven, Unknown };

    Kind kind;
    // Rows at q = r:
    //  1  r|A, r|a, r != 7 (mod 8)      -> 2
    //  2  r|A, r|a, r  = 7 (mod 8)      -> 0
    //  3  r|A, r∤a                      -> (r+5)/2
    //  4  r∤ABCc, F reducible /Q_r      -> 2
    //  5  r∤ABCc, F irreducible /Q_r    -> 3
    //  6  r|B, r∤A                      -> r+2
    //  7  r∤ABc, v_r(C) = 1             -> (r+5)/2
    //  8  r∤ABc, v_r(C) = 2             -> 3
    //  9  r∤AB, r|c or v_r(C) >= 3      -> 2
    int at_r_row{0};
    AtTwoKind at_two{AtTwoKind::Unknown};
    std::string describe() const;
};

PrimeCase classify_prime(const EquationInstance& inst, const Int& a, const Int& b, const Int& c,
                         long q);

enum class ConductorTarget { CurveQ, CurveK, Rep };

struct ConductorReport {
    long q{0};
    PrimeCase prime_case{};
    std::optional<long> curve_exp_Q;
    std::optional<long> curve_exp_K;
    std::optional<long> rep_exp;
    std::optional<long> tame;  // decomposition of the requested target, when computed
    std::optional<long> wild;
    bool twisted{false};  // exponents at 2 refer to the chi-twisted system
};

ConductorReport conductor_exponent(const EquationInstance& inst, const Int& a, const Int& b,
                                   const Int& c, long q, ConductorTarget target);

// Conductor exponent of C(z,s) at q from the closed tables, valid under
// hypotheses (I),(II).
long table_conductor_exponent(long q, long r, const Int& s, BaseField base);

// Same value recomputed from scratch: cluster picture -> tame part, plus
// the wild part.
long bottom_up_conductor_exponent(const Int& z, const Int& s, long q, long r, BaseField base);

// Conductor and Serre-level data for -5a^2 + b^5 = c^{2p}.
struct ApplicationConductorR5 {
    long s;                   // exponent at the prime above 2 (5 or 6)
    long r5_exponent;         // 2
    struct IdealFactor {
        long q;
        int f;
    };
    std::vector<IdealFactor> multiplicative;  // primes of Q(sqrt5) above odd divisors of c
    std::string serre_level;                  // "q2^s * r5^2"
};

ApplicationConductorR5 application_conductor_r5(const Int& a, const Int& b, const Int& c);

}  // namespace f2rp
