#include "f2rp/frey.hpp"

#include <map>
#include <mutex>

namespace f2rp {

namespace {

// Z[zeta_r] elements as length-r exponent vectors; the single relation
// 1 + zeta + ... + zeta^{r-1} = 0 is applied only on extraction.
using CycElt = std::vector<Int>;

CycElt cyc_zero(long r) { return CycElt(static_cast<size_t>(r), Int(0)); }

CycElt cyc_mul(const CycElt& u, const CycElt& v, long r) {
    CycElt w = cyc_zero(r);
    for (long i = 0; i < r; ++i) {
        if (u[i] == 0) continue;
        for (long j = 0; j < r; ++j) {
            if (v[j] == 0) continue;
            w[(i + j) % r] += u[i] * v[j];
        }
    }
    return w;
}

CycElt cyc_sub(const CycElt& u, const CycElt& v, long r) {
    CycElt w = u;
    for (long i = 0; i < r; ++i) w[i] -= v[i];
    return w;
}

// An element is rational iff, after normalizing against the relation,
// every power of zeta beyond zeta^0 vanishes.
Int cyc_to_int(const CycElt& u, long r) {
    for (long i = 1; i + 1 < r; ++i)
        if (u[i] != u[r - 1]) throw std::logic_error("omega_minimal_poly: non-rational coefficient");
    return u[0] - u[r - 1];
}

IntPoly compute_omega_minimal_poly(long r) {
    require_prime(r, "omega_minimal_poly");
    if (r < 3) throw std::domain_error("omega_minimal_poly: r must be an odd prime");
    long g = (r - 1) / 2;
    // prod_{j=1}^{g} (x - (zeta^j + zeta^{-j})) with coefficients in Z[zeta].
    std::vector<CycElt> poly{cyc_zero(r)};
    poly[0][0] = 1;  // constant 1
    for (long j = 1; j <= g; ++j) {
        CycElt omega_j = cyc_zero(r);
        omega_j[j % r] += 1;
        omega_j[(r - j) % r] += 1;
        std::vector<CycElt> next(poly.size() + 1, cyc_zero(r));
        for (size_t k = 0; k < poly.size(); ++k) {
            // x * poly[k]
            for (long i = 0; i < r; ++i) next[k + 1][i] += poly[k][i];
            next[k] = cyc_sub(next[k], cyc_mul(omega_j, poly[k], r), r);
        }
        poly = std::move(next);
    }
    std::vector<Int> coeffs;
    coeffs.reserve(poly.size());
    for (const auto& c : poly) coeffs.push_back(cyc_to_int(c, r));
    IntPoly h(std::move(coeffs));
    if (h.degree() != g || !h.is_monic()) throw std::logic_error("omega_minimal_poly: bad expansion");
    return h;
}

Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace

const IntPoly& omega_minimal_poly(long r) {
    static std::map<long, IntPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(r);
    if (it == cache.end()) it = cache.emplace(r, compute_omega_minimal_poly(r)).first;
    return it->second;
}

EquationInstance::EquationInstance(Int A_, Int B_, Int C_, long r_)
    : A(std::move(A_)), B(std::move(B_)), C(std::move(C_)), r(r_) {
    if (A == 0 || B == 0 || C == 0) throw std::domain_error("EquationInstance: zero coefficient");
    require_prime(r, "EquationInstance");
    if (r < 5) throw std::domain_error("EquationInstance: r must be >= 5");
}

void EquationInstance::attach_solution(Int a, Int b, Int c, long p) {
    require_prime(p, "EquationInstance::attach_solution");
    if (gcd_int(A * a, B * b) != 1)
        throw std::domain_error("EquationInstance: gcd(Aa, Bb) != 1");
    Int lhs = A * a * a + B * pow_int(b, static_cast<unsigned long>(r));
    Int rhs = C * pow_int(c, static_cast<unsigned long>(p));
    if (lhs != rhs) throw std::domain_error("EquationInstance: A a^2 + B b^r != C c^p");
    solution = Solution{std::move(a), std::move(b), std::move(c), p};
}

namespace {

Int aa2_plus_bbr(const EquationInstance& inst, const Int& a, const Int& b) {
    return inst.A * a * a + inst.B * pow_int(b, static_cast<unsigned long>(inst.r));
}

Int frey_constant_term(const EquationInstance& inst, const Int& a) {
    // 2 A^{(r+1)/2} B^{(r-1)/2} a
    long r = inst.r;
    return 2 * pow_int(inst.A, static_cast<unsigned long>((r + 1) / 2)) *
           pow_int(inst.B, static_cast<unsigned long>((r - 1) / 2)) * a;
}

}  // namespace

HyperellipticModel build_frey_curve(const EquationInstance& inst, const Int& a, const Int& b) {
    const long r = inst.r;
    const long g = (r - 1) / 2;
    if (gcd_int(inst.A * a, inst.B * b) != 1)
        throw std::domain_error("build_frey_curve: gcd(Aa, Bb) != 1");
    if (aa2_plus_bbr(inst, a, b) == 0)
        throw std::domain_error("build_frey_curve: A a^2 + B b^r = 0, degenerate curve");

    HyperellipticModel m;
    m.genus = static_cast<int>(g);
    m.cm_branch = false;
    const Int s = frey_constant_term(inst, a);

    if (b == 0) {
        m.f = IntPoly::monomial(1, static_cast<int>(r)) + IntPoly::constant(s);
        m.cm_branch = true;
        m.cm_field = "Q(zeta_" + std::to_string(r) + ")";
    } else {
        // (ABb)^g x h(2 + x^2/(ABb)) + s  =  sum_k c_k (ABb)^{g-k} x^{2k+1} + s
        // with h(2 + u) = sum_k c_k u^k; the top coefficient c_g = 1.
        const Int w = inst.A * inst.B * b;
        IntPoly H = omega_minimal_poly(r).taylor_shift(2);
        std::vector<Int> coeffs(static_cast<size_t>(r) + 1, Int(0));
        for (long k = 0; k <= g; ++k)
            coeffs[static_cast<size_t>(2 * k + 1)] =
                H.coeff(static_cast<int>(k)) * pow_int(w, static_cast<unsigned long>(g - k));
        coeffs[0] = s;
        m.f = IntPoly(std::move(coeffs));
        if (a == 0) {
            m.cm_branch = true;
            m.cm_field = "Q(i)";
        }
    }
    // curve discriminant: 2^{4g} times the discriminant of the polynomial
    m.disc = pow_int(Int(2), static_cast<unsigned long>(4 * m.genus)) * poly_discriminant(m.f);
    return m;
}

Int frey_discriminant(const EquationInstance& inst, const Int& a, const Int& b) {
    const long r = inst.r;
    const long g = (r - 1) / 2;
    const int sign = (g % 2) ? -1 : 1;
    if (b == 0) {
        // 2^{4g} disc(x^r + s) = (-1)^{(r-1)/2} 2^{2(r-1)} r^r s^{r-1}
        const Int s = frey_constant_term(inst, a);
        return Int(sign) * pow_int(Int(2), static_cast<unsigned long>(2 * (r - 1))) *
               pow_int(Int(r), static_cast<unsigned long>(r)) *
               pow_int(s, static_cast<unsigned long>(r - 1));
    }
    Int d = pow_int(Int(2), static_cast<unsigned long>(3 * (r - 1))) *
            pow_int(Int(r), static_cast<unsigned long>(r)) *
            pow_int(inst.A, static_cast<unsigned long>(r * g)) *
            pow_int(inst.B, static_cast<unsigned long>((r - 1) * g)) *
            pow_int(aa2_plus_bbr(inst, a, b), static_cast<unsigned long>(g));
    return Int(sign) * d;
}

GeneralParams general_params(const EquationInstance& inst, const Int& a, const Int& b) {
    GeneralParams p;
    p.z = -inst.A * inst.B * b;
    p.s = frey_constant_term(inst, a);
    p.delta = p.s * p.s - 4 * pow_int(p.z, static_cast<unsigned long>(inst.r));
    return p;
}

HyperellipticModel build_general_curve(const Int& z, const Int& s, long r) {
    require_prime(r, "build_general_curve");
    if (r < 5) throw std::domain_error("build_general_curve: r must be >= 5");
    if (z == 0) throw std::domain_error("build_general_curve: z = 0 (use the b = 0 Frey branch)");
    const long g = (r - 1) / 2;
    // F = sum_k c_k (-1)^{g+k} z^{g-k} x^{2k+1} + s
    IntPoly H = omega_minimal_poly(r).taylor_shift(2);
    std::vector<Int> coeffs(static_cast<size_t>(r) + 1, Int(0));
    for (long k = 0; k <= g; ++k) {
        Int c = H.coeff(static_cast<int>(k)) * pow_int(z, static_cast<unsigned long>(g - k));
        if ((g + k) % 2) c = -c;
        coeffs[static_cast<size_t>(2 * k + 1)] = c;
    }
    coeffs[0] = s;
    HyperellipticModel m;
    m.f = IntPoly(std::move(coeffs));
    m.genus = static_cast<int>(g);
    m.cm_branch = false;
    m.disc = pow_int(Int(2), static_cast<unsigned long>(4 * m.genus)) * poly_discriminant(m.f);
    return m;
}

Int general_curve_discriminant(const Int& z, const Int& s, long r) {
    const long g = (r - 1) / 2;
    Int delta = s * s - 4 * pow_int(z, static_cast<unsigned long>(r));
    Int d = pow_int(Int(2), static_cast<unsigned long>(2 * (r - 1))) *
            pow_int(Int(r), static_cast<unsigned long>(r)) *
            pow_int(delta, static_cast<unsigned long>(g));
    return (g % 2) ? Int(-d) : d;
}

SpecializationPoint specialize(const EquationInstance& inst, const Int& a, const Int& b) {
    if (a == 0 || b == 0) throw std::domain_error("specialize: trivial solution (ab = 0)");
    Int den = aa2_plus_bbr(inst, a, b);
    if (den == 0) throw std::domain_error("specialize: A a^2 + B b^r = 0");
    SpecializationPoint sp;
    sp.t0 = make_rat(inst.A * a * a, den);
    sp.t0_product = sp.t0 * (sp.t0 - 1);
    Rat tw = make_rat(pow_int(b, static_cast<unsigned long>((inst.r - 1) / 2)) * a, den);
    sp.twist_factor = abs(tw);
    return sp;
}

DarmonJPair darmon_j_invariants(const EquationInstance& inst, const Int& a, const Int& b) {
    SpecializationPoint sp = specialize(inst, a, b);  // also rules out t0 in {0,1}
    Int aa2 = inst.A * a * a;
    Int bbr = inst.B * pow_int(b, static_cast<unsigned long>(inst.r));
    Int num = -64 * pow_int(Int(aa2 - 3 * bbr), 3);
    Int den = (aa2 + bbr) * (aa2 + bbr) * bbr;
    DarmonJPair out;
    out.j_c2 = make_rat(num, den);
    Rat t = Rat(1) / sp.t0;
    out.j_c2_prime = Rat(64) * pow_rat(Rat(3 * t + 1), 3) / (t * (t - 1) * (t - 1));
    return out;
}

HypothesisReport check_hypotheses(const EquationInstance& inst, const Int& a, const Int& b,
                                  const Int& c) {
    HypothesisReport rep;
    rep.aa2 = inst.A * a * a;
    rep.bbr = inst.B * pow_int(b, static_cast<unsigned long>(inst.r));
    Int sum = rep.aa2 + rep.bbr;

    rep.sum_not_unit = (sum != 1 && sum != -1);
    rep.not_in_two_power_list = true;
    for (int i = 0; i <= 6; ++i) {
        Int twoi = pow_int(Int(2), static_cast<unsigned long>(i));
        if ((rep.aa2 == twoi + 1 && rep.bbr == -1) || (rep.aa2 == twoi - 1 && rep.bbr == 1))
            rep.not_in_two_power_list = false;
    }
    rep.irreducibility_r_ge_11 = rep.sum_not_unit && rep.not_in_two_power_list;

    rep.not_in_r7_list = !((abs(rep.aa2) == 63 && abs(rep.bbr) == 1 && sgn(rep.aa2) == sgn(rep.bbr)) ||
                           (abs(rep.aa2) == 63 && abs(rep.bbr) == 64 && sgn(rep.aa2) != sgn(rep.bbr)));
    rep.irreducibility_r_7 = rep.not_in_r7_list;

    if (inst.r == 5) rep.modularity = false;
    else if (inst.r == 7) rep.modularity = rep.irreducibility_r_7;
    else rep.modularity = rep.irreducibility_r_ge_11;

    Int Cc = inst.C * c;
    Int m = abs(Cc);
    rep.large_image_r_coprime = (m != 0) && !mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(inst.r));
    rep.large_image_aux_ell = false;
    if (m != 0) {
        // strip 2 and r, then any remaining factor provides ell
        while (mpz_even_p(m.get_mpz_t())) mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), 2);
        while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(inst.r)))
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(inst.r));
        rep.large_image_aux_ell = (m > 1);
    }
    rep.large_image = rep.large_image_aux_ell && rep.large_image_r_coprime;

    rep.cm_by_cyclotomic = (b == 0);
    rep.cm_by_gaussian = (a == 0 && (b == 1 || b == -1));
    return rep;
}

IgusaData igusa_invariants_r5(const Int& a, const Int& b) {
    Int c2p = pow_int(b, 5) - 5 * a * a;
    if (c2p == 0) throw std::domain_error("igusa_invariants_r5: b^5 - 5a^2 = 0");
    IgusaData d;
    d.J2 = Int(17500) * b * b;
    d.J4 = Int(8593750) * pow_int(b, 4);
    d.J6 = Int("25000000000") * a * a * b - Int("117187500") * pow_int(b, 6);
    d.J8 = Int("109375000000000") * a * a * pow_int(b, 3) - Int("18975830078125") * pow_int(b, 8);
    d.J10 = pow_int(Int(2), 12) * pow_int(Int(5), 15) * c2p * c2p;

    // Liu's test at 2: every J_{2i}^5 / J_10^i must be 2-integral.
    long v10 = val_q_long(d.J10, 2);
    d.potentially_good_at_2 = true;
    const Int* js[5] = {&d.J2, &d.J4, &d.J6, &d.J8, &d.J10};
    for (int i = 1; i <= 5; ++i) {
        const Int& J = *js[i - 1];
        if (J == 0) continue;
        if (5 * val_q_long(J, 2) < i * v10) {
            d.potentially_good_at_2 = false;
            break;
        }
    }
    return d;
}

LmtPoint lmt_family(const Int& v) {
    if (v == 0) throw std::domain_error("lmt_family: v = 0");
    LmtPoint p;
    Int v2 = v * v;
    p.x = 10 * v * (80 * v2 * v2 - 40 * v2 + 1);
    p.y = 20 * v2 + 1;
    p.q_alpha = 2000 * v2 * v2 - 200 * v2 + 1;
    return p;
}

ParametrizationPoint parametrization_check(const Int& m, const Int& n) {
    ParametrizationPoint p;
    Int m2 = m * m, n2 = n * n;
    p.a = 5 * n * (m2 * m2 - 10 * m2 * n2 + 5 * n2 * n2);
    p.c_p = m * (m2 * m2 - 50 * m2 * n2 + 125 * n2 * n2);
    return p;
}

}  // namespace f2rp
