#pragma once

#include <initializer_list>
#include <vector>

#include "f2rp/rational.hpp"

namespace f2rp {

// Dense integer polynomial, index = degree.  Zero polynomial has an empty
// coefficient vector and degree -1; otherwise the leading coefficient is
// nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        normalize();
    }
    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(const Int& v) { return IntPoly(std::vector<Int>{v}); }
    // c * x^k
    static IntPoly monomial(const Int& coeff, int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& lc() const;
    Int coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Int(0); }
    const std::vector<Int>& coeffs() const { return c_; }
    bool is_monic() const { return !is_zero() && lc() == 1; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& k) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    IntPoly derivative() const;
    // f(x + a)
    IntPoly taylor_shift(const Int& a) const;
    // x^deg f * f(1/x)
    IntPoly reversed() const;

    std::string str(const std::string& var = "x") const;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

// Sylvester resultant computed by the subresultant PRS; exact over Z.
// Both inputs must be nonzero.
Int resultant(const IntPoly& f, const IntPoly& g);

// (-1)^{n(n-1)/2} resultant(f, f') / lc(f) with n = deg f >= 2.
// Returns 0 exactly when f is not squarefree.
Int poly_discriminant(const IntPoly& f);

// Rational polynomials, used for Sturm sequences.
using QPoly = std::vector<Rat>;

QPoly to_qpoly(const IntPoly& f);
QPoly qpoly_derivative(const QPoly& f);
QPoly qpoly_rem(const QPoly& a, const QPoly& b);
// Number of distinct real roots of f in (a, +inf), f squarefree.
long sturm_roots_above(const IntPoly& f, const Rat& a);
// Number of distinct real roots of f on the whole line, f squarefree.
long sturm_real_root_count(const IntPoly& f);

}  // namespace f2rp
