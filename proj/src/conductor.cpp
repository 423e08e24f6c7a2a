#include "f2rp/conductor.hpp"

namespace f2rp {

namespace {

bool divides(long q, const Int& x) { return mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(q)); }

Int abs_int(const Int& x) { return abs(x); }

void require_normalized(const EquationInstance& inst) {
    // A squarefree, B free of r-th powers; the tables are stated only there.
    Int A = abs_int(inst.A);
    for (long d = 2; d <= 1000000L && Int(d) * Int(d) <= A; ++d)
        if (mpz_divisible_ui_p(A.get_mpz_t(), static_cast<unsigned long>(d * d)))
            throw std::domain_error("conductor engine: A must be squarefree");
    Int B = abs_int(inst.B);
    for (long d = 2; d <= 1000L && pow_int(d, static_cast<unsigned long>(inst.r)) <= B; ++d)
        if (mpz_divisible_p(B.get_mpz_t(), pow_int(d, static_cast<unsigned long>(inst.r)).get_mpz_t()))
            throw std::domain_error("conductor engine: B must be free of r-th powers");
}

}  // namespace

std::string PrimeCase::describe() const {
    switch (kind) {
        case Kind::GoodReduction: return "good reduction";
        case Kind::Multiplicative: return "bad multiplicative reduction";
        case Kind::PotentiallyGoodAB: return "potentially good reduction (q | AB)";
        case Kind::AtR: return "at q = r, row " + std::to_string(at_r_row);
        case Kind::AtTwo:
            switch (at_two) {
                case AtTwoKind::V2GE6: return "at 2, v_2(B b^r) >= 6";
                case AtTwoKind::AEven: return "at 2, 2 | a";
                case AtTwoKind::CEven: return "at 2, 2 | c";
                default: return "at 2, outside the known outcomes";
            }
    }
    return "?";
}

PrimeCase classify_prime(const EquationInstance& inst, const Int& a, const Int& b, const Int& c,
                         long q) {
    require_prime(q, "classify_prime");
    require_normalized(inst);
    const long r = inst.r;
    PrimeCase pc;

    if (q == 2) {
        pc.kind = PrimeCase::Kind::AtTwo;
        Int bbr = inst.B * pow_int(b, static_cast<unsigned long>(r));
        if (bbr != 0 && val_q_long(bbr, 2) >= 6) pc.at_two = PrimeCase::AtTwoKind::V2GE6;
        else if (inst.A == -5 && inst.B == 1 && r == 5 && divides(2, a))
            pc.at_two = PrimeCase::AtTwoKind::AEven;
        else if (inst.A == -5 && inst.B == 1 && r == 5 && divides(2, c))
            pc.at_two = PrimeCase::AtTwoKind::CEven;
        else pc.at_two = PrimeCase::AtTwoKind::Unknown;
        return pc;
    }

    Int sum = inst.A * a * a + inst.B * pow_int(b, static_cast<unsigned long>(r));
    Int AB = inst.A * inst.B;

    if (q == r) {
        pc.kind = PrimeCase::Kind::AtR;
        const bool rA = divides(r, inst.A), rB = divides(r, inst.B);
        if (rA) {
            pc.at_r_row = divides(r, a) ? ((r % 8 == 7) ? 2 : 1) : 3;
        } else if (rB) {
            pc.at_r_row = 6;
        } else {
            const bool rC = divides(r, inst.C), rc = divides(r, c);
            if (!rC && !rc) {
                HyperellipticModel F = build_frey_curve(inst, a, b);  // handles b = 0
                pc.at_r_row = padic_root_exists(F.f, r) ? 4 : 5;
            } else if (!rc) {
                long vC = val_q_long(inst.C, r);
                if (vC == 1) pc.at_r_row = 7;
                else if (vC == 2) pc.at_r_row = 8;
                else pc.at_r_row = 9;
            } else {
                pc.at_r_row = 9;
            }
        }
        return pc;
    }

    if (!divides(q, 2 * Int(r) * AB * sum)) {
        pc.kind = PrimeCase::Kind::GoodReduction;
    } else if (!divides(q, 2 * Int(r) * AB)) {
        pc.kind = PrimeCase::Kind::Multiplicative;
    } else {
        pc.kind = PrimeCase::Kind::PotentiallyGoodAB;
    }
    return pc;
}

long table_conductor_exponent(long q, long r, const Int& s, BaseField base) {
    if (q != r) return r - 1;
    long vs = s == 0 ? r : val_q_long(s, r);  // v >= (r+3)/2 behaves like the reducible row
    if (vs == (r + 1) / 2) return base == BaseField::Q ? (3 * r - 1) / 2 : (r - 1) * (r + 5) / 4;
    if (r % 8 == 7) return base == BaseField::Q ? r - 3 : 0;
    return r - 1;
}

long bottom_up_conductor_exponent(const Int& z, const Int& s, long q, long r, BaseField base) {
    RootValuationData rv = root_valuation_data(z, s, q, r);
    const Rat scale = (base == BaseField::K && q == r) ? Rat((r - 1) / 2) : Rat(1);
    auto pairwise = [&](int k, int j) { return Rat(rv.pairwise(k, j) * scale); };
    ClusterPicture pic = build_cluster_picture(pairwise, static_cast<int>(r));
    InertiaOrbits orb = inertia_orbits(z, s, q, r, base);
    TameData td = tame_conductor(pic, orb);
    return td.exponent + wild_conductor(z, s, q, r, base);
}

ConductorReport conductor_exponent(const EquationInstance& inst, const Int& a, const Int& b,
                                   const Int& c, long q, ConductorTarget target) {
    ConductorReport rep;
    rep.q = q;
    rep.prime_case = classify_prime(inst, a, b, c, q);
    const long r = inst.r;

    switch (rep.prime_case.kind) {
        case PrimeCase::Kind::GoodReduction:
            rep.curve_exp_Q = 0;
            rep.curve_exp_K = 0;
            rep.rep_exp = 0;
            rep.tame = 0;
            rep.wild = 0;
            return rep;

        case PrimeCase::Kind::Multiplicative:
            // enters the level as prod_{q | c} q
            rep.rep_exp = 1;
            return rep;

        case PrimeCase::Kind::PotentiallyGoodAB: {
            rep.rep_exp = 2;
            GeneralParams gp = general_params(inst, a, b);
            if (local_hypotheses_hold(gp.z, gp.s, q, r)) {
                rep.curve_exp_Q = bottom_up_conductor_exponent(gp.z, gp.s, q, r, BaseField::Q);
                rep.curve_exp_K = bottom_up_conductor_exponent(gp.z, gp.s, q, r, BaseField::K);
                rep.tame = (target == ConductorTarget::CurveQ || target == ConductorTarget::CurveK)
                               ? rep.curve_exp_Q
                               : rep.rep_exp;
                rep.wild = 0;
                if (*rep.curve_exp_K != *rep.rep_exp * (r - 1) / 2)
                    throw std::logic_error("conductor_exponent: curve/representation mismatch at q | AB");
            }
            return rep;
        }

        case PrimeCase::Kind::AtR: {
            switch (rep.prime_case.at_r_row) {
                case 1: rep.rep_exp = 2; break;
                case 2: rep.rep_exp = 0; break;
                case 3: rep.rep_exp = (r + 5) / 2; break;
                case 4: rep.rep_exp = 2; break;
                case 5: rep.rep_exp = 3; break;
                case 6: rep.rep_exp = r + 2; break;
                case 7: rep.rep_exp = (r + 5) / 2; break;
                case 8: rep.rep_exp = 3; break;
                case 9: rep.rep_exp = 2; break;
                default: throw std::logic_error("conductor_exponent: bad row");
            }
            if (rep.prime_case.at_r_row <= 3) {
                // r | A: recompute the curve exponents bottom-up and check the
                // closed tables agree.
                GeneralParams gp = general_params(inst, a, b);
                long up_Q = bottom_up_conductor_exponent(gp.z, gp.s, r, r, BaseField::Q);
                long up_K = bottom_up_conductor_exponent(gp.z, gp.s, r, r, BaseField::K);
                if (up_Q != table_conductor_exponent(r, r, gp.s, BaseField::Q) ||
                    up_K != table_conductor_exponent(r, r, gp.s, BaseField::K))
                    throw std::logic_error("conductor_exponent: bottom-up and table values disagree");
                rep.curve_exp_Q = up_Q;
                rep.curve_exp_K = up_K;
                if (up_K != *rep.rep_exp * (r - 1) / 2)
                    throw std::logic_error("conductor_exponent: curve/representation mismatch at r");
                long w = wild_conductor(gp.z, gp.s, r, r,
                                        target == ConductorTarget::CurveQ ? BaseField::Q : BaseField::K);
                if (target == ConductorTarget::CurveQ) {
                    rep.wild = w;
                    rep.tame = up_Q - w;
                } else if (target == ConductorTarget::CurveK) {
                    rep.wild = w;
                    rep.tame = up_K - w;
                } else {
                    rep.wild = 2 * w / (r - 1);
                    rep.tame = *rep.rep_exp - *rep.wild;
                }
            }
            return rep;
        }

        case PrimeCase::Kind::AtTwo:
            rep.twisted = true;
            switch (rep.prime_case.at_two) {
                case PrimeCase::AtTwoKind::V2GE6: rep.rep_exp = 2; break;
                case PrimeCase::AtTwoKind::AEven: rep.rep_exp = 5; break;
                case PrimeCase::AtTwoKind::CEven: rep.rep_exp = 6; break;
                case PrimeCase::AtTwoKind::Unknown:
                    throw std::domain_error("conductor_exponent: exponent at 2 unknown in this case");
            }
            return rep;
    }
    throw std::logic_error("conductor_exponent: unreachable");
}

ApplicationConductorR5 application_conductor_r5(const Int& a, const Int& b, const Int& c) {
    Int c2p = pow_int(b, 5) - 5 * a * a;
    if (c == 0 || c2p == 0) throw std::domain_error("application_conductor_r5: degenerate input");
    // -5 a^2 + b^5 must be an even power of c
    bool is_power = false;
    if (abs(c) == 1) {
        is_power = (c2p == 1);
    } else {
        Int t = c2p;
        long e = 0;
        while (t != 1 && t != 0 && mpz_divisible_p(t.get_mpz_t(), c.get_mpz_t())) {
            Int s;
            mpz_divexact(s.get_mpz_t(), t.get_mpz_t(), c.get_mpz_t());
            t = s;
            ++e;
        }
        is_power = (t == 1 && e >= 2 && e % 2 == 0);
    }
    if (!is_power) throw std::domain_error("application_conductor_r5: -5a^2 + b^5 is not c^{2p}");
    if (!mpz_divisible_ui_p(a.get_mpz_t(), 5))
        throw std::domain_error("application_conductor_r5: 5 | a fails (not a primitive solution)");

    ApplicationConductorR5 out;
    out.r5_exponent = 2;
    const bool a_even = mpz_even_p(a.get_mpz_t());
    const bool c_even = mpz_even_p(c.get_mpz_t());
    if (a_even == c_even)
        throw std::domain_error("application_conductor_r5: exactly one of 2|a, 2|c must hold");
    out.s = a_even ? 5 : 6;
    out.serre_level = "q2^" + std::to_string(out.s) + " * r5^2";

    auto record = [&](long p) {
        if (p == 5)
            throw std::domain_error("application_conductor_r5: 5 | c never holds for primitive solutions");
        if (p % 5 == 1 || p % 5 == 4) {  // split in Q(sqrt5)
            out.multiplicative.push_back({p, 1});
            out.multiplicative.push_back({p, 1});
        } else {  // inert
            out.multiplicative.push_back({p, 2});
        }
    };
    Int m = abs(c);
    while (mpz_even_p(m.get_mpz_t())) mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), 2);
    for (long p = 3; Int(p) * Int(p) <= m; p += 2) {
        if (!mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p)))
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
        record(p);
    }
    if (m > 1) {
        if (!m.fits_slong_p())
            throw std::domain_error("application_conductor_r5: prime factor of c too large");
        record(m.get_si());
    }
    return out;
}

}  // namespace f2rp
