#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "f2rp/poly.hpp"
#include "f2rp/rational.hpp"

namespace f2rp {

// F_{q^f} for odd prime q and f in {1,2}.  For f=2 the modulus is the
// lexicographically smallest monic irreducible x^2 + c x + d over F_q,
// so field construction is deterministic across runs.
class FqField {
public:
    FqField(long q, int f);

    long q() const { return q_; }
    int f() const { return f_; }
    long size() const { return N_; }
    long modulus_c() const { return c_; }
    long modulus_d() const { return d_; }

    // Elements are encoded as indices 0..N-1: a + b*t  <->  a + b*q.
    long add(long u, long v) const;
    long sub(long u, long v) const;
    long mul(long u, long v) const;
    long neg(long u) const;
    long pow(long u, long e) const;
    long inv(long u) const;
    long from_int(const Int& n) const;  // image of a rational integer
    long frobenius(long u) const { return pow(u, q_); }

    // Quadratic character: 0, 1 or -1.  Computed by exponentiation; the
    // point-counting kernels use a precomputed square table instead, so the
    // two routes are independent.
    int chi_pow(long u) const;
    std::vector<uint8_t> square_table() const;

private:
    long q_;
    int f_;
    long N_;
    long c_{0}, d_{0};  // f=2 modulus coefficients
};

}  // namespace f2rp
