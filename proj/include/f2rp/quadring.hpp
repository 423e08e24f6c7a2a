#pragma once

#include <string>

#include "f2rp/rational.hpp"

namespace f2rp {

// Element x + y*phi of Z[phi], phi = (1+sqrt5)/2, phi^2 = phi + 1.
// This is the ring of integers of Q(sqrt5); phi is its fundamental unit.
struct QuadElt {
    Int x{0};
    Int y{0};

    QuadElt() = default;
    QuadElt(Int xx, Int yy) : x(std::move(xx)), y(std::move(yy)) {}
    QuadElt(long xx, long yy) : x(xx), y(yy) {}

    static QuadElt one() { return QuadElt(1, 0); }
    static QuadElt phi() { return QuadElt(0, 1); }
    // sqrt5 = 2*phi - 1
    static QuadElt sqrt5() { return QuadElt(-1, 2); }

    bool operator==(const QuadElt& o) const { return x == o.x && y == o.y; }

    QuadElt operator+(const QuadElt& o) const { return {Int(x + o.x), Int(y + o.y)}; }
    QuadElt operator-(const QuadElt& o) const { return {Int(x - o.x), Int(y - o.y)}; }
    QuadElt operator-() const { return {Int(-x), Int(-y)}; }
    QuadElt operator*(const QuadElt& o) const {
        // (x1 + y1 phi)(x2 + y2 phi) = x1x2 + y1y2 + (x1y2 + x2y1 + y1y2) phi
        return {Int(x * o.x + y * o.y), Int(x * o.y + o.x * y + y * o.y)};
    }
    QuadElt operator*(const Int& k) const { return {Int(x * k), Int(y * k)}; }

    // Galois conjugate: phi -> 1 - phi.
    QuadElt conj() const { return {Int(x + y), Int(-y)}; }

    std::string str() const { return x.get_str() + (sgn(y) >= 0 ? "+" : "") + y.get_str() + "*phi"; }
};

inline Int quad_norm(const QuadElt& e) { return e.x * e.x + e.x * e.y - e.y * e.y; }
inline Int quad_trace(const QuadElt& e) { return 2 * e.x + e.y; }

inline QuadElt quad_pow(QuadElt base, unsigned long n) {
    QuadElt acc = QuadElt::one();
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

// Both real embeddings positive: 2x + y > |y| sqrt5, decided exactly.
// (t^2 = 5y^2 never happens for nonzero elements.)
inline bool quad_totally_positive(const QuadElt& e) {
    Int t = quad_trace(e);
    return t > 0 && t * t > 5 * e.y * e.y;
}

// Membership in the principal ideal (g): e * conj(g) / norm(g) must land in Z[phi].
inline bool quad_in_ideal(const QuadElt& e, const QuadElt& g) {
    Int n = quad_norm(g);
    if (n == 0) throw std::domain_error("quad_in_ideal: zero generator");
    QuadElt t = e * g.conj();
    return mpz_divisible_p(t.x.get_mpz_t(), n.get_mpz_t()) &&
           mpz_divisible_p(t.y.get_mpz_t(), n.get_mpz_t());
}

}  // namespace f2rp
