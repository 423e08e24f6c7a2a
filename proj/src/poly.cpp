#include "f2rp/poly.hpp"

#include <sstream>

namespace f2rp {

IntPoly IntPoly::monomial(const Int& coeff, int k) {
    if (coeff == 0) return IntPoly();
    std::vector<Int> c(static_cast<size_t>(k) + 1, Int(0));
    c.back() = coeff;
    return IntPoly(std::move(c));
}

const Int& IntPoly::lc() const {
    if (is_zero()) throw std::domain_error("IntPoly::lc: zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> c(c_);
    for (auto& v : c) v = -v;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const Int& k) const {
    if (k == 0) return IntPoly();
    std::vector<Int> c(c_);
    for (auto& v : c) v *= k;
    return IntPoly(std::move(c));
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(c));
}

IntPoly IntPoly::taylor_shift(const Int& a) const {
    // Horner on f with x replaced by (x + a).
    IntPoly out;
    IntPoly xa({0, 1});
    xa = xa + IntPoly::constant(a);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * xa + IntPoly::constant(*it);
    return out;
}

IntPoly IntPoly::reversed() const {
    std::vector<Int> c(c_.rbegin(), c_.rend());
    return IntPoly(std::move(c));
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Int v = coeff(i);
        if (v == 0) continue;
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        first = false;
        Int av = abs(v);
        if (av != 1 || i == 0) os << av.get_str();
        if (i > 0) {
            if (av != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

Int poly_content(const IntPoly& f) {
    Int g = 0;
    for (const Int& v : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly divexact(const IntPoly& f, const Int& k) {
    std::vector<Int> c(f.coeffs());
    for (auto& v : c) {
        Int t;
        mpz_divexact(t.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
        v = t;
    }
    return IntPoly(std::move(c));
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A  mod  B.
IntPoly prem(IntPoly A, const IntPoly& B) {
    const Int d = B.lc();
    long e = A.degree() - B.degree() + 1;
    while (!A.is_zero() && A.degree() >= B.degree()) {
        IntPoly t = IntPoly::monomial(A.lc(), A.degree() - B.degree()) * B;
        A = A * d - t;
        --e;
    }
    if (e > 0) A = A * pow_int(d, static_cast<unsigned long>(e));
    return A;
}

}  // namespace

Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant: zero polynomial input");
    IntPoly A = f, B = g;
    int sign = 1;
    Int ca = poly_content(A), cb = poly_content(B);
    A = divexact(A, ca);
    B = divexact(B, cb);
    Int scale = pow_int(ca, static_cast<unsigned long>(B.degree())) *
                pow_int(cb, static_cast<unsigned long>(A.degree()));
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
        std::swap(A, B);
    }
    Int g_ = 1, h_ = 1;
    while (B.degree() > 0) {
        long delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
        IntPoly R = prem(A, B);
        A = B;
        Int divisor = g_ * pow_int(h_, static_cast<unsigned long>(delta));
        B = divexact(R, divisor);
        g_ = A.lc();
        if (delta > 0) {
            // h = g^delta / h^(delta-1), exact
            Int num = pow_int(g_, static_cast<unsigned long>(delta));
            Int den = pow_int(h_, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h_.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (B.is_zero()) return Int(0);  // common factor
    }
    // deg B == 0
    long dA = A.degree();
    Int num = pow_int(B.lc(), static_cast<unsigned long>(dA));
    Int res;
    if (dA > 1) {
        Int den = pow_int(h_, static_cast<unsigned long>(dA - 1));
        mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    } else {
        res = num;
    }
    return scale * Int(sign) * res;
}

Int poly_discriminant(const IntPoly& f) {
    int n = f.degree();
    if (n < 2) throw std::domain_error("poly_discriminant: degree must be >= 2");
    Int r = resultant(f, f.derivative());
    long e = (static_cast<long>(n) * (n - 1) / 2) % 2;
    Int d;
    mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), f.lc().get_mpz_t());
    return e ? Int(-d) : d;
}

QPoly to_qpoly(const IntPoly& f) {
    QPoly q;
    for (const Int& v : f.coeffs()) q.emplace_back(v);
    return q;
}

namespace {
void qnormalize(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
int qsign_at(const QPoly& f, const Rat& x) {
    Rat acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return sgn(acc);
}
int qsign_at_plus_inf(const QPoly& f) { return f.empty() ? 0 : sgn(f.back()); }
int qsign_at_minus_inf(const QPoly& f) {
    if (f.empty()) return 0;
    int s = sgn(f.back());
    return ((f.size() - 1) % 2) ? -s : s;
}
}  // namespace

QPoly qpoly_derivative(const QPoly& f) {
    QPoly d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * Rat(static_cast<long>(i)));
    qnormalize(d);
    return d;
}

QPoly qpoly_rem(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    qnormalize(r);
    while (r.size() >= b.size() && !r.empty()) {
        Rat q = r.back() / b.back();
        size_t off = r.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) r[off + i] -= q * b[i];
        qnormalize(r);
    }
    return r;
}

namespace {
std::vector<QPoly> sturm_chain(const IntPoly& f) {
    std::vector<QPoly> chain;
    chain.push_back(to_qpoly(f));
    chain.push_back(qpoly_derivative(chain[0]));
    while (!chain.back().empty() && chain.back().size() > 1) {
        QPoly r = qpoly_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& v : r) v = -v;
        chain.push_back(std::move(r));
    }
    return chain;
}

long variations(const std::vector<QPoly>& chain, int (*sign_fn)(const QPoly&)) {
    long var = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sign_fn(p);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

long variations_at(const std::vector<QPoly>& chain, const Rat& x) {
    long var = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = qsign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}
}  // namespace

long sturm_roots_above(const IntPoly& f, const Rat& a) {
    if (f.is_zero()) throw std::domain_error("sturm_roots_above: zero polynomial");
    auto chain = sturm_chain(f);
    return variations_at(chain, a) - variations(chain, qsign_at_plus_inf);
}

long sturm_real_root_count(const IntPoly& f) {
    if (f.is_zero()) throw std::domain_error("sturm_real_root_count: zero polynomial");
    auto chain = sturm_chain(f);
    return variations(chain, qsign_at_minus_inf) - variations(chain, qsign_at_plus_inf);
}

}  // namespace f2rp
