#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace f2rp {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical rational from a numerator/denominator pair.  mpq arithmetic
// keeps results canonical as long as the operands are, so every Rat in
// this library is built through here or through mpq operators.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// A q-adic valuation value: a rational or +infinity (v(0)).  Infinity is a
// distinguished state, never a sentinel number.
class Val {
public:
    Val() : inf_(true) {}
    explicit Val(const Rat& v) : inf_(false), v_(v) {}
    explicit Val(long v) : inf_(false), v_(v, 1) {}
    static Val infinity() { return Val(); }

    bool is_infinity() const { return inf_; }
    const Rat& value() const {
        if (inf_) throw std::domain_error("Val: +infinity has no finite value");
        return v_;
    }

    Val operator+(const Val& o) const {
        if (inf_ || o.inf_) return infinity();
        return Val(Rat(v_ + o.v_));
    }
    Val operator*(const Rat& c) const { return inf_ ? infinity() : Val(Rat(v_ * c)); }

    friend bool operator==(const Val& a, const Val& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.v_ == b.v_;
    }
    friend bool operator==(const Val& a, const Rat& b) { return !a.inf_ && a.v_ == b; }
    friend bool operator<(const Val& a, const Val& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const Val& a, const Val& b) { return a < b || a == b; }
    friend Val min(const Val& a, const Val& b) { return a < b ? a : b; }

    std::string str() const { return inf_ ? "+inf" : v_.get_str(); }

private:
    bool inf_;
    Rat v_;
};

inline bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void require_prime(long q, const char* who) {
    if (!is_prime_long(q)) throw std::domain_error(std::string(who) + ": " + std::to_string(q) + " is not prime");
}

// v_q on integers; v_q(0) = +infinity.
inline Val val_q(const Int& x, long q) {
    require_prime(q, "val_q");
    if (x == 0) return Val::infinity();
    Int t = x;
    long v = 0;
    while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(q))) {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(q));
        ++v;
    }
    return Val(v);
}

// v_q on rationals: v_q(n/d) = v_q(n) - v_q(d).
inline Val val_q(const Rat& x, long q) {
    if (x == 0) return Val::infinity();
    Val vn = val_q(Int(x.get_num()), q);
    Val vd = val_q(Int(x.get_den()), q);
    return Val(Rat(vn.value() - vd.value()));
}

inline long val_q_long(const Int& x, long q) {
    Val v = val_q(x, q);
    if (v.is_infinity()) throw std::domain_error("val_q_long: valuation of zero");
    return static_cast<long>(v.value().get_num().get_si());
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Int pow_int(long base, unsigned long e) { return pow_int(Int(base), e); }

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat out(pow_int(Int(base.get_num()), e), pow_int(Int(base.get_den()), e));
    return out;  // already canonical: num/den coprime stays coprime under powers
}

}  // namespace f2rp
