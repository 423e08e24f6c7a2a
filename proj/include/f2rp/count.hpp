#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "f2rp/fq.hpp"
#include "f2rp/frey.hpp"
#include "f2rp/quadring.hpp"

namespace f2rp {

// Residue field of the prime(s) of Q(sqrt5) above q: split (f = 1) when
// q = +-1 (mod 5), inert (f = 2) when q = +-2 (mod 5), ramified at 5.
struct ResidueFieldSpec {
    long q;
    int f;
    long N;  // q^f
};

ResidueFieldSpec residue_field_spec(long q);

// Projective point count of y^2 = f(x) (odd degree, one point at infinity)
// over F_{N^power}.  The count enumerates x with a precomputed square
// table and runs under OpenMP; count_points_serial_ref walks the same
// curve with the exponentiation character sum instead, giving a second,
// independent code path.
long count_points(const HyperellipticModel& model, const ResidueFieldSpec& spec, int power);
long count_points_serial_ref(const HyperellipticModel& model, const ResidueFieldSpec& spec,
                             int power);

// Low-level variants on an explicit field.
long count_points_field(const IntPoly& f, const FqField& F);
long count_points_field_serial_ref(const IntPoly& f, const FqField& F);

struct WeilData {
    long N1;  // #C(F_N)
    long N2;  // #C(F_{N^2})
    Int a1;   // N1 - N - 1
    Int a2;   // (N2 - N^2 - 1 + a1^2) / 2
};

WeilData weil_from_counts(long N1, long N2, long N);

// Unordered Galois-conjugate pair {a, a^sigma} in Z[phi], stored through
// the monic quadratic Y^2 - t1 Y + n0 it satisfies.
struct TracePair {
    Int t1;  // trace
    Int n0;  // norm
    std::pair<QuadElt, QuadElt> members() const;
    bool operator==(const TracePair& o) const { return t1 == o.t1 && n0 == o.n0; }
};

// Split primes: both counts are needed.  Verifies that the quadratic
// splits in Z[phi] and that both members obey the Weil bound.
TracePair trace_pair(const WeilData& w, long N);

// Inert primes: Frobenius is the q^2-power map and the trace is rational,
// so the single count over F_{q^2} determines the pair {a, a}.
TracePair trace_pair_inert(long N1, long N);

struct FreyTraceTable {
    long q;
    ResidueFieldSpec spec;
    // sorted by (a, b); only pairs with -5a^2 + b^5 != 0 in F_q
    std::vector<std::pair<std::pair<long, long>, TracePair>> entries;
    std::vector<std::pair<long, long>> skipped;  // singular pairs

    const TracePair* find(long a, long b) const;
};

// Traces of y^2 = x^5 - 25b x^3 + 125 b^2 x - 250 a over the residue field
// of the prime above q, for every residue pair; parallel over pairs.
FreyTraceTable frey_trace_table(long q);

// Good special fibre at the ramified prime 5: y^2 = x^5 + btilde^2 x,
// counted over F_5 and F_25.
TracePair special_fibre_trace_r5(long btilde);

}  // namespace f2rp
