#include "f2rp/localfields.hpp"

#include <deque>

namespace f2rp {

bool local_hypotheses_hold(const Int& z, const Int& s, long q, long r) {
    require_prime(q, "local_hypotheses_hold");
    require_prime(r, "local_hypotheses_hold");
    if (q == 2 || r < 5) return false;
    if (!(val_q(z, q) == Rat(1))) return false;
    return Val(Rat((r + 1) / 2)) <= val_q(s, q);
}

void require_local_hypotheses(const Int& z, const Int& s, long q, long r, const char* who) {
    if (!local_hypotheses_hold(z, s, q, r))
        throw std::domain_error(std::string(who) +
                                ": hypotheses v_q(z)=1, v_q(s)>=(r+1)/2 violated");
}

bool is_F_irreducible_case(const Int& z, const Int& s, long q, long r) {
    require_local_hypotheses(z, s, q, r, "is_F_irreducible_case");
    if (q != r) return false;
    return val_q(s, r) == Rat((r + 1) / 2);
}

namespace {

// Monic model with the same Q_q-roots up to scaling: g(y) = lc^{n-1} f(y/lc).
IntPoly monicize(const IntPoly& f) {
    if (f.is_monic()) return f;
    const int n = f.degree();
    const Int& l = f.lc();
    std::vector<Int> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = 1;
    for (int i = 0; i < n; ++i)
        c[static_cast<size_t>(i)] = f.coeff(i) * pow_int(l, static_cast<unsigned long>(n - 1 - i));
    return IntPoly(std::move(c));
}

}  // namespace

bool padic_root_exists(const IntPoly& f, long q) {
    require_prime(q, "padic_root_exists");
    if (f.degree() < 1) return false;
    Int disc_f = (f.degree() >= 2) ? poly_discriminant(f) : Int(1);
    if (f.degree() >= 2 && disc_f == 0)
        throw std::domain_error("padic_root_exists: polynomial is not squarefree");
    IntPoly g = monicize(f);
    if (g.degree() == 1) return true;  // monic linear always has the integer root
    const Int disc_g = poly_discriminant(g);
    const long depth_bound = val_q_long(disc_g, q) + 1;
    const IntPoly dg = g.derivative();

    struct Node {
        Int a;
        long k;
    };
    std::deque<Node> queue;
    Int qk = q;
    for (long t = 0; t < q; ++t) {
        Int a(t);
        if (val_q(g.eval(a), q) < Val(Rat(1))) continue;
        queue.push_back({a, 1});
    }
    long explored = 0;
    while (!queue.empty()) {
        if (++explored > 2'000'000)
            throw std::runtime_error("padic_root_exists: search exceeded node cap");
        Node n = queue.front();
        queue.pop_front();
        Int fa = g.eval(n.a);
        if (fa == 0) return true;
        Val vf = val_q(fa, q);
        Val vd = val_q(dg.eval(n.a), q);
        if (!vd.is_infinity() && Val(vd.value() * 2) < vf) return true;  // Hensel lift exists
        if (n.k >= depth_bound) continue;
        Int step = pow_int(Int(q), static_cast<unsigned long>(n.k));
        for (long t = 0; t < q; ++t) {
            Int child = n.a + step * t;
            if (Val(Rat(n.k + 1)) <= val_q(g.eval(child), q)) queue.push_back({child, n.k + 1});
        }
    }
    return false;
}

RootValuationData root_valuation_data(const Int& z, const Int& s, long q, long r) {
    require_local_hypotheses(z, s, q, r, "root_valuation_data");
    RootValuationData d;
    d.v_alpha0 = make_rat(1, 2);
    d.v_beta0 = make_rat(1, 2);
    d.v_alpha_minus_zeta_beta = make_rat(1, 2);
    d.v_sqrt_delta = make_rat(r, 2);
    Rat pair = (q == r) ? make_rat(1, r - 1) + make_rat(1, 2) : make_rat(1, 2);
    d.pairwise = [pair, r](int k, int j) {
        if (k == j || k < 0 || j < 0 || k >= r || j >= r)
            throw std::domain_error("pairwise: indices must be distinct in [0, r)");
        return pair;
    };
    return d;
}

RamifiedQuadRing::RamifiedQuadRing(const Int& z, const Int& s, long r) : r_(r) {
    require_local_hypotheses(z, s, r, r, "RamifiedQuadRing");
    Int delta = s * s - 4 * pow_int(z, static_cast<unsigned long>(r));
    pi_sq_ = make_rat(delta, pow_int(Int(r), static_cast<unsigned long>(r - 1)));
    if (!(val_q(pi_sq_, r) == Rat(1)))
        throw std::domain_error("RamifiedQuadRing: Delta/r^{r-1} is not of valuation 1");
}

RamifiedQuadRing::Elt RamifiedQuadRing::mul(const Elt& a, const Elt& b) const {
    return Elt{a.x * b.x + a.y * b.y * pi_sq_, a.x * b.y + a.y * b.x};
}

RamifiedQuadRing::Elt RamifiedQuadRing::pow(Elt a, unsigned long n) const {
    Elt acc{Rat(1), Rat(0)};
    while (n) {
        if (n & 1) acc = mul(acc, a);
        a = mul(a, a);
        n >>= 1;
    }
    return acc;
}

RamifiedQuadRing::Elt RamifiedQuadRing::inv(const Elt& a) const {
    Rat n = a.x * a.x - a.y * a.y * pi_sq_;
    if (n == 0) throw std::domain_error("RamifiedQuadRing::inv: zero element");
    return Elt{a.x / n, -a.y / n};
}

Val RamifiedQuadRing::vpi(const Elt& a) const {
    Val vx = val_q(a.x, r_);
    Val vy = val_q(a.y, r_);
    Val tx = vx.is_infinity() ? Val::infinity() : Val(Rat(vx.value() * 2));
    Val ty = vy.is_infinity() ? Val::infinity() : Val(Rat(vy.value() * 2 + 1));
    return min(tx, ty);
}

RamificationData ramification_data(const Int& z, const Int& s, long q, long r) {
    require_local_hypotheses(z, s, q, r, "ramification_data");
    RamificationData d;
    d.e_E_over_Qq_omega = (q == r && r % 4 == 3) ? 1 : 2;
    d.eps1 = (q == r) ? (r - 1) / 2 : 1;
    d.eps2 = (q == r && val_q(s, r) == Rat((r + 1) / 2)) ? r : 1;
    d.e_L_over_Qq = d.eps1 * d.eps2 * d.e_E_over_Qq_omega;
    d.e_L_over_K = make_rat(d.e_L_over_Qq, d.eps1);
    return d;
}

long wild_conductor(const Int& z, const Int& s, long q, long r, BaseField base) {
    require_local_hypotheses(z, s, q, r, "wild_conductor");
    if (!is_F_irreducible_case(z, s, q, r)) return 0;
    return base == BaseField::Q ? (r + 1) / 2 : (r * r - 1) / 4;
}

WildChainReport verify_wild_chain(const Int& z, const Int& s, long r) {
    require_local_hypotheses(z, s, r, r, "verify_wild_chain");
    if (!is_F_irreducible_case(z, s, r, r))
        throw std::domain_error("verify_wild_chain: requires v_r(s) = (r+1)/2");
    RamifiedQuadRing R(z, s, r);
    const unsigned long ur = static_cast<unsigned long>(r);
    const long g = (r - 1) / 2;

    // sqrt(Delta) = r^{(r-1)/2} * pi
    auto sqrt_delta = R.make(Rat(0), Rat(pow_int(Int(r), static_cast<unsigned long>(g))));
    auto pi_r = R.pow(R.pi(), ur);
    auto u = R.mul(R.sub(R.make(Rat(-s), Rat(0)), sqrt_delta),
                   R.inv(R.mul(R.make(Rat(2), Rat(0)), pi_r)));

    WildChainReport rep;
    rep.vpi_u = R.vpi(u);
    rep.vpi_ur_minus_u = R.vpi(R.sub(R.pow(u, ur), u));

    // w = sqrt(Delta) / (2 pi^r) as a plain rational
    Int delta = s * s - 4 * pow_int(z, ur);
    Rat w = make_rat(pow_int(Int(r), static_cast<unsigned long>(r) * (r - 1) / 2),
                     2 * pow_int(delta, static_cast<unsigned long>(g)));
    auto w_elt = R.mul(sqrt_delta, R.inv(R.mul(R.make(Rat(2), Rat(0)), pi_r)));
    if (!(w_elt.y == 0) || !(w_elt.x == w))
        throw std::logic_error("verify_wild_chain: sqrt(Delta)/(2 pi^r) failed to be rational");
    rep.vpi_wr_minus_w = R.vpi(R.sub(R.pow(R.make(w, Rat(0)), ur), R.make(w, Rat(0))));

    rep.disc_valuation = make_rat(3 * r - 1, 2);
    rep.ok = (rep.vpi_u == Rat(0)) && (rep.vpi_ur_minus_u == Rat(1)) &&
             (Val(Rat(2)) <= rep.vpi_wr_minus_w);
    return rep;
}

}  // namespace f2rp
