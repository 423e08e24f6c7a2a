#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "f2rp/count.hpp"
#include "f2rp/poly.hpp"
#include "f2rp/quadring.hpp"

namespace f2rp {

// One Hilbert newform record: a monic integer polynomial defining the
// (totally real) eigenvalue field and eigenvalues in its power basis.
struct NewformRecord {
    std::string label;
    IntPoly field_poly;
    std::map<std::pair<long, int>, std::vector<Int>> eigs;  // (q, f) -> coords

    const std::vector<Int>& eig(long q, int f) const;
};

// JSON Lines, one record per line:
//   {"label": "...", "field_poly": [c0,...,1],
//    "eigs": [{"q": 3, "f": 2, "a": [a0,...,a_{d-1}]}, ...]}
// Coefficients may be numbers or decimal strings.  Records violating the
// Deligne bound |a_q(g)| <= 2 sqrt(q^f) (checked exactly via Sturm counts
// on the characteristic polynomial of a^2) are rejected.
std::vector<NewformRecord> load_newforms(const std::string& path);
NewformRecord parse_newform_line(const std::string& line, long lineno);
void validate_newform(const NewformRecord& g);

// N(q) * Norm(a_q(g)^2 - (N+1)^2) * prod_{(a,b)} Norm(a_q(g)^4 - S a_q(g)^2 + P)
// with S = t1^2 - 2 n0 and P = n0^2 from the trace pair at (a,b); all norms
// are eigenvalue-field norms computed as resultants with field_poly.
Int b_q(const NewformRecord& g, long q, const FreyTraceTable& table);
// Same, with the (S, P) pairs supplied directly (multiplicity-collapsed).
Int b_q_from_pairs(const NewformRecord& g, long q, int f,
                   const std::vector<std::pair<std::pair<Int, Int>, long>>& sp_pairs);

struct EliminationConfig {
    std::vector<long> primes{3, 7, 11, 13, 17, 19, 23};
    std::vector<long> extended_primes;  // flagged forms rerun over primes + these
    long survivor_floor{5};             // p <= floor tagged as below the theorem's range
    long trial_bound{1000000};          // factoring bound for the gcd
};

struct FormResult {
    std::string label;
    std::vector<std::pair<long, Int>> Bq;
    Int gcd_value;             // gcd of the nonzero B_q; 0 if all vanish
    bool no_information;       // every B_q = 0
    std::vector<long> survivors;        // prime divisors of the gcd
    std::vector<long> below_floor;      // survivors <= floor
    Int unfactored_cofactor;   // > 1 if the gcd kept a factor above the trial bound
    bool flagged_for_extended; // survivors above floor remained after the first pass
    bool used_extended{false}; // second pass ran for this form
};

struct EliminationReport {
    std::vector<FormResult> forms;
    std::set<long> overall_survivors;  // union of above-floor survivors
    bool any_no_information{false};
};

EliminationReport eliminate(const std::vector<NewformRecord>& newforms,
                            const EliminationConfig& config);

std::string report_to_json(const EliminationReport& rep);

// Primes dividing Res(X^n - 1, charpoly); empty optional when the
// resultant vanishes (no bound).
struct ResultantBound {
    Int resultant;
    bool no_bound;
    std::set<long> primes;
};

ResultantBound resultant_bound(const IntPoly& frob_charpoly, long character_order);

// Smallest N with phi^N = 1 (mod q2^3 r5) and phi^N totally positive,
// together with norm(phi^N - 1) and its prime divisors.
struct UnitBound {
    long N;
    Int norm;
    std::set<long> primes;
    long p_bound;  // largest prime divisor
};

UnitBound unit_bound(long search_cap = 1000);

}  // namespace f2rp
