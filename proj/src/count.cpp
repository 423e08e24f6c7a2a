#include "f2rp/count.hpp"

#include <omp.h>

#include <exception>

namespace f2rp {

ResidueFieldSpec residue_field_spec(long q) {
    require_prime(q, "residue_field_spec");
    if (q == 2) throw std::domain_error("residue_field_spec: even characteristic not supported");
    if (q == 5) return {5, 1, 5};  // ramified
    int f = (q % 5 == 1 || q % 5 == 4) ? 1 : 2;
    return {q, f, f == 1 ? q : q * q};
}

namespace {

// f reduced into F: vector of element encodings per degree.
std::vector<long> reduce_poly(const IntPoly& f, const FqField& F) {
    std::vector<long> c(static_cast<size_t>(f.degree()) + 1);
    for (int i = 0; i <= f.degree(); ++i) c[static_cast<size_t>(i)] = F.from_int(f.coeff(i));
    return c;
}

long eval_mod(const std::vector<long>& c, long x, const FqField& F) {
    long acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
    return acc;
}

void require_good_reduction(const HyperellipticModel& model, long q) {
    if (mpz_divisible_ui_p(model.disc.get_mpz_t(), static_cast<unsigned long>(q)))
        throw std::domain_error(
            "count_points: singular reduction at this prime; classify it as "
            "multiplicative/additive instead of counting");
}

FqField field_for(const ResidueFieldSpec& spec, int power) {
    if (power != 1 && power != 2) throw std::domain_error("count_points: power must be 1 or 2");
    int f = spec.f * power;
    if (f > 2)
        throw std::domain_error(
            "count_points: F_{N^2} for an inert prime needs residue degree 4; "
            "use trace_pair_inert, which only needs the F_N count");
    return FqField(spec.q, f);
}

}  // namespace

long count_points_field(const IntPoly& f, const FqField& F) {
    const std::vector<long> c = reduce_poly(f, F);
    const std::vector<uint8_t> sq = F.square_table();
    const long N = F.size();
    long affine = 0;
#pragma omp parallel for reduction(+ : affine) schedule(static)
    for (long x = 0; x < N; ++x) {
        long v = eval_mod(c, x, F);
        if (v == 0) affine += 1;
        else if (sq[static_cast<size_t>(v)]) affine += 2;
    }
    return affine + 1;  // odd degree: a single point at infinity
}

long count_points_field_serial_ref(const IntPoly& f, const FqField& F) {
    const std::vector<long> c = reduce_poly(f, F);
    const long N = F.size();
    long total = 1;
    for (long x = 0; x < N; ++x) total += 1 + F.chi_pow(eval_mod(c, x, F));
    return total;
}

long count_points(const HyperellipticModel& model, const ResidueFieldSpec& spec, int power) {
    require_good_reduction(model, spec.q);
    return count_points_field(model.f, field_for(spec, power));
}

long count_points_serial_ref(const HyperellipticModel& model, const ResidueFieldSpec& spec,
                             int power) {
    require_good_reduction(model, spec.q);
    return count_points_field_serial_ref(model.f, field_for(spec, power));
}

WeilData weil_from_counts(long N1, long N2, long N) {
    WeilData w;
    w.N1 = N1;
    w.N2 = N2;
    w.a1 = Int(N1) - N - 1;
    Int num = Int(N2) - Int(N) * N - 1 + w.a1 * w.a1;
    if (mpz_odd_p(num.get_mpz_t()))
        throw std::domain_error("weil_from_counts: counts violate the parity constraint");
    w.a2 = num / 2;
    if (w.a1 * w.a1 > 16 * Int(N))
        throw std::domain_error("weil_from_counts: |a1| exceeds the Weil bound");
    return w;
}

std::pair<QuadElt, QuadElt> TracePair::members() const {
    Int D = t1 * t1 - 4 * n0;
    if (D < 0) throw std::domain_error("TracePair: negative discriminant, pair is not totally real");
    Int k;
    if (mpz_perfect_square_p(D.get_mpz_t())) {
        mpz_sqrt(k.get_mpz_t(), D.get_mpz_t());
        QuadElt a((t1 + k) / 2, 0), b((t1 - k) / 2, 0);
        return {a, b};
    }
    if (mpz_divisible_ui_p(D.get_mpz_t(), 5)) {
        Int D5 = D / 5;
        if (mpz_perfect_square_p(D5.get_mpz_t())) {
            mpz_sqrt(k.get_mpz_t(), D5.get_mpz_t());
            // (t1 +- k sqrt5)/2 = (t1 -+ k)/2 +- k phi
            QuadElt a((t1 - k) / 2, k);
            return {a, a.conj()};
        }
    }
    throw std::domain_error("TracePair: quadratic does not split in Z[phi]");
}

namespace {

// both real embeddings of both members bounded by 2 sqrt(N):
// Q(Y) = Y^2 - t1 Y + n0 must be >= 0 at +-2 sqrt(N) and have its vertex inside.
void check_weil_archimedean(const TracePair& tp, long N) {
    Int fourN = 4 * Int(N);
    // Q(+-2sqrtN) = 4N + n0 -+ 2 t1 sqrtN >= 0  <=>  (4N + n0)^2 >= 4 t1^2 N when 4N+n0 >= 0
    Int lhs = fourN + tp.n0;
    if (lhs < 0 || lhs * lhs < 4 * tp.t1 * tp.t1 * Int(N))
        throw std::domain_error("TracePair: member exceeds the Weil bound");
    if (tp.t1 * tp.t1 > 16 * Int(N)) throw std::domain_error("TracePair: trace exceeds the Weil bound");
}

}  // namespace

TracePair trace_pair(const WeilData& w, long N) {
    TracePair tp;
    tp.t1 = -w.a1;
    tp.n0 = w.a2 - 2 * Int(N);
    tp.members();  // throws if the quadratic does not split in Z[phi]
    check_weil_archimedean(tp, N);
    return tp;
}

TracePair trace_pair_inert(long N1, long N) {
    Int t1 = Int(N) + 1 - N1;
    if (mpz_odd_p(t1.get_mpz_t()))
        throw std::domain_error("trace_pair_inert: odd trace sum, count is not GL2-consistent");
    Int a = t1 / 2;
    TracePair tp;
    tp.t1 = t1;
    tp.n0 = a * a;
    check_weil_archimedean(tp, N);
    return tp;
}

const TracePair* FreyTraceTable::find(long a, long b) const {
    for (const auto& e : entries)
        if (e.first.first == a && e.first.second == b) return &e.second;
    return nullptr;
}

FreyTraceTable frey_trace_table(long q) {
    require_prime(q, "frey_trace_table");
    if (q == 2 || q == 5) throw std::domain_error("frey_trace_table: q must avoid 2 and 5");
    FreyTraceTable table;
    table.q = q;
    table.spec = residue_field_spec(q);
    const FqField FN(q, table.spec.f);
    const std::optional<FqField> FN2 =
        table.spec.f == 1 ? std::optional<FqField>(FqField(q, 2)) : std::nullopt;

    struct Slot {
        bool singular{false};
        TracePair tp;
    };
    std::vector<Slot> slots(static_cast<size_t>(q) * static_cast<size_t>(q));
    std::exception_ptr err;

#pragma omp parallel for schedule(dynamic) collapse(2)
    for (long a = 0; a < q; ++a) {
        for (long b = 0; b < q; ++b) {
            try {
                Slot& slot = slots[static_cast<size_t>(a) * static_cast<size_t>(q) + static_cast<size_t>(b)];
                Int key = pow_int(Int(b), 5) - 5 * Int(a) * Int(a);
                if (mpz_divisible_ui_p(key.get_mpz_t(), static_cast<unsigned long>(q))) {
                    slot.singular = true;
                    continue;
                }
                // x^5 - 25 b x^3 + 125 b^2 x - 250 a
                IntPoly f(std::vector<Int>{Int(-250) * a, Int(125) * b * b, Int(0), Int(-25) * b,
                                           Int(0), Int(1)});
                long n1 = count_points_field(f, FN);
                if (table.spec.f == 1) {
                    long n2 = count_points_field(f, *FN2);
                    slot.tp = trace_pair(weil_from_counts(n1, n2, table.spec.N), table.spec.N);
                } else {
                    slot.tp = trace_pair_inert(n1, table.spec.N);
                }
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
    }
    if (err) std::rethrow_exception(err);
    for (long a = 0; a < q; ++a)
        for (long b = 0; b < q; ++b) {
            const Slot& slot = slots[static_cast<size_t>(a) * static_cast<size_t>(q) + static_cast<size_t>(b)];
            if (slot.singular) table.skipped.push_back({a, b});
            else table.entries.push_back({{a, b}, slot.tp});
        }
    return table;
}

TracePair special_fibre_trace_r5(long btilde) {
    btilde = ((btilde % 5) + 5) % 5;
    if (btilde == 0) throw std::domain_error("special_fibre_trace_r5: btilde must be a unit mod 5");
    // y^2 = x^5 + btilde^2 x
    IntPoly f(std::vector<Int>{Int(0), Int(btilde * btilde), Int(0), Int(0), Int(0), Int(1)});
    long n1 = count_points_field(f, FqField(5, 1));
    long n2 = count_points_field(f, FqField(5, 2));
    return trace_pair(weil_from_counts(n1, n2, 5), 5);
}

}  // namespace f2rp
