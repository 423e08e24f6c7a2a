#pragma once

#include <functional>

#include "f2rp/poly.hpp"
#include "f2rp/rational.hpp"

namespace f2rp {

enum class BaseField { Q, K };  // Q_q versus the completion of Q(zeta_r)^+ at q

// The local analysis below works at an odd prime q under
//   (I)  v_q(z) = 1,
//   (II) v_q(s) >= (r+1)/2.
bool local_hypotheses_hold(const Int& z, const Int& s, long q, long r);
void require_local_hypotheses(const Int& z, const Int& s, long q, long r, const char* who);

// F(z,s) is irreducible over Q_q exactly when q = r and v_r(s) = (r+1)/2.
bool is_F_irreducible_case(const Int& z, const Int& s, long q, long r);

// Certified decision for "f has a root in Q_q", f squarefree.  Residues are
// lifted digit by digit with a Hensel early exit v_q(f(a)) > 2 v_q(f'(a));
// the search is pruned at depth v_q(disc f) + 1, past which every branch
// containing a root has already certified.
bool padic_root_exists(const IntPoly& f, long q);

struct RootValuationData {
    Rat v_alpha0;
    Rat v_beta0;
    Rat v_sqrt_delta;
    Rat v_alpha_minus_zeta_beta;
    std::function<Rat(int, int)> pairwise;  // v_q(gamma_k - gamma_j), k != j
};

RootValuationData root_valuation_data(const Int& z, const Int& s, long q, long r);

// Exact arithmetic in F = Q_r(pi), pi^2 = Delta / r^{r-1} (a rational of
// r-valuation 1, so pi is a uniformizer and v_pi = 2 v_r on Q_r).
class RamifiedQuadRing {
public:
    struct Elt {
        Rat x, y;  // x + y*pi
        bool operator==(const Elt& o) const { return x == o.x && y == o.y; }
    };

    RamifiedQuadRing(const Int& z, const Int& s, long r);

    long r() const { return r_; }
    const Rat& pi_squared() const { return pi_sq_; }

    Elt make(Rat x, Rat y) const { return Elt{std::move(x), std::move(y)}; }
    Elt pi() const { return Elt{Rat(0), Rat(1)}; }
    Elt add(const Elt& a, const Elt& b) const { return Elt{a.x + b.x, a.y + b.y}; }
    Elt sub(const Elt& a, const Elt& b) const { return Elt{a.x - b.x, a.y - b.y}; }
    Elt mul(const Elt& a, const Elt& b) const;
    Elt pow(Elt a, unsigned long n) const;
    Elt inv(const Elt& a) const;
    Val vpi(const Elt& a) const;  // min(2 v_r(x), 2 v_r(y) + 1)

private:
    long r_;
    Rat pi_sq_;
};

struct RamificationData {
    long e_E_over_Qq_omega;  // 1 or 2
    long eps1;               // (r-1)/2 at q = r, else 1
    long eps2;               // r in the irreducible case, else 1
    long e_L_over_Qq;        // eps1 * eps2 * e_E
    Rat e_L_over_K;          // e_L_over_Qq / eps1
};

RamificationData ramification_data(const Int& z, const Int& s, long q, long r);

// Wild conductor exponent: (r+1)/2 over Q_r and (r^2-1)/4 over K at the
// irreducible case q = r, v_r(s) = (r+1)/2; zero in every other regime
// covered by the hypotheses.
long wild_conductor(const Int& z, const Int& s, long q, long r, BaseField base);

// Exact verification of the unit chain behind the wild conductor:
// u = -(s + sqrt(Delta)) / (2 pi^r) is a unit with v_pi(u^r - u) = 1, and
// w = r^{r(r-1)/2} / (2 Delta^{(r-1)/2}) satisfies w^r = w (mod pi^2).
struct WildChainReport {
    Val vpi_u;
    Val vpi_ur_minus_u;
    Val vpi_wr_minus_w;
    Rat disc_valuation;  // (3r-1)/2, reported from the closed form
    bool ok;             // vpi_u = 0, vpi_ur_minus_u = 1, vpi_wr_minus_w >= 2
};

WildChainReport verify_wild_chain(const Int& z, const Int& s, long r);

}  // namespace f2rp
