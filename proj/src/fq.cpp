#include "f2rp/fq.hpp"

namespace f2rp {

namespace {
bool is_qr(long a, long q) {
    // Euler criterion, a reduced mod q.
    long e = (q - 1) / 2, base = a % q, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return acc == 1;
}
}  // namespace

FqField::FqField(long q, int f) : q_(q), f_(f) {
    require_prime(q, "FqField");
    if (q == 2) throw std::domain_error("FqField: even characteristic not supported");
    if (f != 1 && f != 2) throw std::domain_error("FqField: residue degree must be 1 or 2");
    if (q > (1L << 30)) throw std::domain_error("FqField: prime too large");
    N_ = (f == 1) ? q : q * q;
    if (f == 2) {
        bool found = false;
        for (long c = 0; c < q && !found; ++c)
            for (long d = 0; d < q && !found; ++d) {
                long disc = ((c * c - 4 * d) % q + q) % q;
                if (disc == 0 || is_qr(disc, q)) continue;
                c_ = c;
                d_ = d;
                found = true;
            }
        if (!found) throw std::logic_error("FqField: no irreducible quadratic found");
    }
}

long FqField::add(long u, long v) const {
    if (f_ == 1) return (u + v) % q_;
    long a = (u % q_ + v % q_) % q_;
    long b = (u / q_ + v / q_) % q_;
    return a + b * q_;
}

long FqField::neg(long u) const {
    if (f_ == 1) return (q_ - u) % q_;
    long a = (q_ - u % q_) % q_;
    long b = (q_ - u / q_) % q_;
    return a + b * q_;
}

long FqField::sub(long u, long v) const { return add(u, neg(v)); }

long FqField::mul(long u, long v) const {
    if (f_ == 1) return u * v % q_;
    long a1 = u % q_, b1 = u / q_, a2 = v % q_, b2 = v / q_;
    // t^2 = -c t - d
    long bb = b1 * b2 % q_;
    long a = ((a1 * a2 - d_ % q_ * bb) % q_ + q_) % q_;
    long b = ((a1 * b2 + a2 * b1 - c_ * bb) % q_ + q_ * q_) % q_;
    return a + b * q_;
}

long FqField::pow(long u, long e) const {
    long acc = 1;
    u %= N_;
    while (e) {
        if (e & 1) acc = mul(acc, u);
        u = mul(u, u);
        e >>= 1;
    }
    return acc;
}

long FqField::inv(long u) const {
    if (u == 0) throw std::domain_error("FqField::inv: zero");
    return pow(u, N_ - 2);
}

long FqField::from_int(const Int& n) const {
    Int m = n % q_;
    long v = static_cast<long>(m.get_si());
    return (v % q_ + q_) % q_;
}

int FqField::chi_pow(long u) const {
    if (u == 0) return 0;
    long r = pow(u, (N_ - 1) / 2);
    return r == 1 ? 1 : -1;
}

std::vector<uint8_t> FqField::square_table() const {
    std::vector<uint8_t> sq(static_cast<size_t>(N_), 0);
    for (long x = 0; x < N_; ++x) sq[static_cast<size_t>(mul(x, x))] = 1;
    return sq;
}

}  // namespace f2rp
