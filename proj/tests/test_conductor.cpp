#include <doctest.h>

#include <random>

#include "f2rp/conductor.hpp"

using namespace f2rp;

namespace {

Int gcd_of(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace

TEST_CASE("classify fixed cases") {
    // 5 | A and 5 | a: row 1 (5 = 5 mod 8, not 7)
    EquationInstance app(Int(-5), Int(1), Int(1), 5);
    PrimeCase pc = classify_prime(app, Int(5), Int(1), Int(2), 5);
    CHECK(pc.kind == PrimeCase::Kind::AtR);
    CHECK(pc.at_r_row == 1);

    // q = 3 with 3 | a^2 + b^7 and 3 coprime to everything else
    EquationInstance r7(Int(1), Int(1), Int(1), 7);
    PrimeCase mult = classify_prime(r7, Int(1), Int(5), Int(2), 3);
    CHECK(mult.kind == PrimeCase::Kind::Multiplicative);

    // 3 | A, q = 3 != r
    EquationInstance threeA(Int(3), Int(1), Int(1), 5);
    PrimeCase pg = classify_prime(threeA, Int(1), Int(1), Int(2), 3);
    CHECK(pg.kind == PrimeCase::Kind::PotentiallyGoodAB);

    // good reduction away from everything
    EquationInstance one(Int(1), Int(1), Int(1), 5);
    PrimeCase good = classify_prime(one, Int(1), Int(1), Int(2), 11);
    CHECK(good.kind == PrimeCase::Kind::GoodReduction);
}

TEST_CASE("non-normalized instances are rejected") {
    EquationInstance sq(Int(4), Int(1), Int(1), 5);  // A = 4 not squarefree
    CHECK_THROWS_AS(classify_prime(sq, Int(1), Int(1), Int(1), 3), std::domain_error);
    EquationInstance bp(Int(1), Int(32), Int(1), 5);  // B = 2^5
    CHECK_THROWS_AS(classify_prime(bp, Int(1), Int(1), Int(1), 3), std::domain_error);
}

TEST_CASE("conductor exponents at q = r across the rows") {
    // row 3: r | A, r coprime to a -> (r+5)/2
    for (long r : {5L, 7L}) {
        EquationInstance inst(Int(-r), Int(1), Int(1), r);
        ConductorReport rep = conductor_exponent(inst, Int(1), Int(2), Int(1), r, ConductorTarget::Rep);
        CHECK(rep.prime_case.at_r_row == 3);
        CHECK(*rep.rep_exp == (r + 5) / 2);
        CHECK(*rep.curve_exp_Q == (3 * r - 1) / 2);
        CHECK(*rep.curve_exp_K == (r - 1) * (r + 5) / 4);
    }

    // row 6: r | B, r coprime to A -> r + 2
    EquationInstance rB(Int(1), Int(7), Int(1), 7);
    ConductorReport rep6 = conductor_exponent(rB, Int(1), Int(2), Int(1), 7, ConductorTarget::Rep);
    CHECK(rep6.prime_case.at_r_row == 6);
    CHECK(*rep6.rep_exp == 9);

    // rows 1/2: r | A and r | a
    EquationInstance r5A(Int(-5), Int(1), Int(1), 5);
    ConductorReport rep1 = conductor_exponent(r5A, Int(5), Int(2), Int(1), 5, ConductorTarget::Rep);
    CHECK(rep1.prime_case.at_r_row == 1);
    CHECK(*rep1.rep_exp == 2);
    CHECK(*rep1.curve_exp_K == 4);

    EquationInstance r7A(Int(-7), Int(1), Int(1), 7);
    ConductorReport rep2 = conductor_exponent(r7A, Int(7), Int(2), Int(1), 7, ConductorTarget::Rep);
    CHECK(rep2.prime_case.at_r_row == 2);
    CHECK(*rep2.rep_exp == 0);
    CHECK(*rep2.curve_exp_K == 0);
    CHECK(*rep2.curve_exp_Q == 7 - 3);
}

TEST_CASE("rows 4 and 5 use the p-adic root decision") {
    // F = x^5 + 5x^3 + 5x - 82 has the rational root 2: reducible, row 4
    EquationInstance inst(Int(1), Int(1), Int(1), 5);
    ConductorReport red =
        conductor_exponent(inst, Int(-41), Int(1), Int(1682), 5, ConductorTarget::Rep);
    CHECK(red.prime_case.at_r_row == 4);
    CHECK(*red.rep_exp == 2);

    // a = b = 1: F = x^5 + 5x^3 + 5x + 2 has no root over Q_5: row 5
    ConductorReport irr = conductor_exponent(inst, Int(1), Int(1), Int(2), 5, ConductorTarget::Rep);
    CHECK(irr.prime_case.at_r_row == 5);
    CHECK(*irr.rep_exp == 3);
}

TEST_CASE("rows 7, 8, 9 split on v_r(C) and r | c") {
    EquationInstance c5(Int(1), Int(1), Int(5), 5);
    ConductorReport r7 = conductor_exponent(c5, Int(1), Int(1), Int(2), 5, ConductorTarget::Rep);
    CHECK(r7.prime_case.at_r_row == 7);
    CHECK(*r7.rep_exp == 5);  // (r+5)/2

    EquationInstance c25(Int(1), Int(1), Int(25), 5);
    ConductorReport r8 = conductor_exponent(c25, Int(1), Int(1), Int(2), 5, ConductorTarget::Rep);
    CHECK(r8.prime_case.at_r_row == 8);
    CHECK(*r8.rep_exp == 3);

    EquationInstance c1(Int(1), Int(1), Int(1), 5);
    ConductorReport r9 = conductor_exponent(c1, Int(1), Int(2), Int(10), 5, ConductorTarget::Rep);
    CHECK(r9.prime_case.at_r_row == 9);
    CHECK(*r9.rep_exp == 2);

    EquationInstance c125(Int(1), Int(1), Int(125), 5);
    ConductorReport r9b = conductor_exponent(c125, Int(1), Int(1), Int(2), 5, ConductorTarget::Rep);
    CHECK(r9b.prime_case.at_r_row == 9);
    CHECK(*r9b.rep_exp == 2);
}

TEST_CASE("good reduction and multiplicative cases") {
    EquationInstance one(Int(1), Int(1), Int(1), 5);
    ConductorReport good = conductor_exponent(one, Int(1), Int(1), Int(2), 11, ConductorTarget::Rep);
    CHECK(good.prime_case.kind == PrimeCase::Kind::GoodReduction);
    CHECK(*good.rep_exp == 0);
    CHECK(*good.curve_exp_Q == 0);
    CHECK(*good.tame == 0);
    CHECK(*good.wild == 0);

    EquationInstance r7(Int(1), Int(1), Int(1), 7);
    ConductorReport mult = conductor_exponent(r7, Int(1), Int(5), Int(2), 3, ConductorTarget::Rep);
    CHECK(mult.prime_case.kind == PrimeCase::Kind::Multiplicative);
    CHECK(*mult.rep_exp == 1);
    CHECK(!mult.curve_exp_Q.has_value());
}

TEST_CASE("potentially good at q | AB away from r") {
    // q = 3 | A: hypotheses (I),(II) hold for z = -ABb, s = 2A^3 B^2 a
    EquationInstance inst(Int(3), Int(1), Int(1), 5);
    ConductorReport rep = conductor_exponent(inst, Int(1), Int(1), Int(2), 3, ConductorTarget::Rep);
    CHECK(rep.prime_case.kind == PrimeCase::Kind::PotentiallyGoodAB);
    CHECK(*rep.rep_exp == 2);
    CHECK(*rep.curve_exp_Q == 4);  // r - 1
    CHECK(*rep.curve_exp_K == 4);
}

TEST_CASE("exponents at 2") {
    // v_2(B b^r) >= 6
    EquationInstance inst(Int(1), Int(1), Int(1), 5);
    ConductorReport v6 = conductor_exponent(inst, Int(1), Int(4), Int(1), 2, ConductorTarget::Rep);
    CHECK(v6.prime_case.at_two == PrimeCase::AtTwoKind::V2GE6);
    CHECK(*v6.rep_exp == 2);
    CHECK(v6.twisted);

    // the r=5 application outcomes
    EquationInstance app(Int(-5), Int(1), Int(1), 5);
    ConductorReport ae = conductor_exponent(app, Int(2), Int(1), Int(3), 2, ConductorTarget::Rep);
    CHECK(ae.prime_case.at_two == PrimeCase::AtTwoKind::AEven);
    CHECK(*ae.rep_exp == 5);
    ConductorReport ce = conductor_exponent(app, Int(5), Int(3), Int(2), 2, ConductorTarget::Rep);
    CHECK(ce.prime_case.at_two == PrimeCase::AtTwoKind::CEven);
    CHECK(*ce.rep_exp == 6);

    // everything odd and v_2 small: classification succeeds, exponent unknown
    PrimeCase unknown = classify_prime(inst, Int(1), Int(1), Int(1), 2);
    CHECK(unknown.at_two == PrimeCase::AtTwoKind::Unknown);
    CHECK_THROWS_AS(conductor_exponent(inst, Int(1), Int(1), Int(1), 2, ConductorTarget::Rep),
                    std::domain_error);
}

TEST_CASE("consistency square: rep times (r-1)/2 equals the curve/K exponent") {
    for (long r : {5L, 7L, 11L, 23L}) {
        EquationInstance inst(Int(-r), Int(1), Int(1), r);
        for (Int a : {Int(1), Int(r)}) {  // row 3, then rows 1/2
            ConductorReport rep = conductor_exponent(inst, a, Int(2), Int(1), r, ConductorTarget::Rep);
            REQUIRE(rep.curve_exp_K.has_value());
            CHECK(*rep.curve_exp_K == *rep.rep_exp * (r - 1) / 2);
            long expected_rep = (a == 1) ? (r + 5) / 2 : ((r % 8 == 7) ? 0 : 2);
            CHECK(*rep.rep_exp == expected_rep);
        }
    }
}

TEST_CASE("bottom-up recomputation matches the closed tables") {
    std::mt19937_64 rng(271828);
    std::uniform_int_distribution<long> ud(1, 25);
    for (long r : {5L, 7L, 11L, 23L}) {
        for (int regime = 0; regime < 3; ++regime) {
            long q = (regime == 0) ? 3 : r;
            long vs = (regime == 2) ? (r + 1) / 2 : (r + 3) / 2;
            int samples = 0;
            while (samples < 3) {
                long u = ud(rng), w = ud(rng);
                if (u % q == 0 || w % q == 0) continue;
                Int z = Int(q) * u;
                Int s = pow_int(Int(q), static_cast<unsigned long>(vs)) * w;
                for (BaseField base : {BaseField::Q, BaseField::K}) {
                    CHECK(bottom_up_conductor_exponent(z, s, q, r, base) ==
                          table_conductor_exponent(q, r, s, base));
                }
                ++samples;
            }
        }
    }
}

TEST_CASE("classification is total, deterministic and mutually exclusive") {
    std::mt19937_64 rng(161803);
    const long squarefree[] = {1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7, 10, -10, 11, 13, 15, 21};
    std::uniform_int_distribution<long> pick(0, 17), small(-20, 20), cpick(1, 40);
    std::uniform_int_distribution<size_t> qpick(0, 5);
    const long qs[] = {2, 3, 5, 7, 11, 13};
    int done = 0;
    while (done < 10000) {
        Int A(squarefree[pick(rng)]), B(small(rng)), a(small(rng)), b(small(rng)), c(cpick(rng));
        if (B == 0) continue;
        if (gcd_of(A * a, B * b) != 1) continue;
        if (A * a * a + B * pow_int(b, 5) == 0) continue;
        EquationInstance inst(A, B, Int(1), 5);
        long q = qs[qpick(rng)];
        PrimeCase pc1 = classify_prime(inst, a, b, c, q);
        PrimeCase pc2 = classify_prime(inst, a, b, c, q);
        CHECK(pc1.kind == pc2.kind);
        CHECK(pc1.at_r_row == pc2.at_r_row);
        CHECK(pc1.at_two == pc2.at_two);
        if (pc1.kind == PrimeCase::Kind::AtR) CHECK(pc1.at_r_row >= 1);
        else CHECK(pc1.at_r_row == 0);
        ++done;
    }
}

TEST_CASE("application conductor for -5a^2 + b^5 = c^{2p}") {
    // genuine even-power witness from the degree-5 identity
    // 5*410^2 + 1801^2 = 21^5, with 5 | 410 and 2 | 410:
    ApplicationConductorR5 out = application_conductor_r5(Int(410), Int(21), Int(1801));
    CHECK(out.s == 5);  // a even
    CHECK(out.r5_exponent == 2);
    CHECK(out.serre_level == "q2^5 * r5^2");
    // 1801 is prime, 1801 = 1 mod 5: split, two degree-1 ideals
    REQUIRE(out.multiplicative.size() == 2);
    CHECK(out.multiplicative[0].q == 1801);
    CHECK(out.multiplicative[0].f == 1);
    // the Serre level itself carries no prime above c
    CHECK(out.serre_level.find("1801") == std::string::npos);

    // -5a^2 + b^5 not an even power of c
    CHECK_THROWS_AS(application_conductor_r5(Int(405), Int(21), Int(1801)), std::domain_error);

    // 2 | c branch: 9^5 - 5*95^2 = 13924 = 118^2, with 5 | 95 and 95 odd
    ApplicationConductorR5 ce = application_conductor_r5(Int(95), Int(9), Int(118));
    CHECK(ce.s == 6);
    CHECK(ce.serre_level == "q2^6 * r5^2");
    // 118 = 2 * 59 and 59 = 4 mod 5 splits
    REQUIRE(ce.multiplicative.size() == 2);
    CHECK(ce.multiplicative[0].q == 59);
    CHECK(ce.multiplicative[0].f == 1);
}
