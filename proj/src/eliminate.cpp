#include "f2rp/eliminate.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace f2rp {

using nlohmann::json;

const std::vector<Int>& NewformRecord::eig(long q, int f) const {
    auto it = eigs.find({q, f});
    if (it == eigs.end())
        throw std::domain_error("NewformRecord: no eigenvalue at (q, f) = (" + std::to_string(q) +
                                ", " + std::to_string(f) + ") for form " + label);
    return it->second;
}

namespace {

Int json_to_int(const json& v) {
    if (v.is_string()) return Int(v.get<std::string>());
    if (v.is_number_integer()) return Int(std::to_string(v.get<long long>()));
    throw std::domain_error("newform data: expected integer or decimal string");
}

// d x d multiplication-by-E(theta) matrix in the power basis of field_poly.
std::vector<std::vector<Int>> mult_matrix(const IntPoly& fp, const std::vector<Int>& coords) {
    const int d = fp.degree();
    // powers of theta reduced mod fp (monic)
    std::vector<std::vector<Int>> theta_pow;  // theta^k for k = 0..2d-2
    std::vector<Int> cur(static_cast<size_t>(d), Int(0));
    cur[0] = 1;
    theta_pow.push_back(cur);
    for (int k = 1; k <= 2 * d - 2; ++k) {
        std::vector<Int> nxt(static_cast<size_t>(d) + 1, Int(0));
        for (int i = 0; i < d; ++i) nxt[static_cast<size_t>(i) + 1] = cur[static_cast<size_t>(i)];
        // reduce degree-d term with theta^d = -(fp - x^d)
        Int top = nxt[static_cast<size_t>(d)];
        nxt.pop_back();
        if (top != 0)
            for (int i = 0; i < d; ++i) nxt[static_cast<size_t>(i)] -= top * fp.coeff(i);
        cur = nxt;
        theta_pow.push_back(cur);
    }
    std::vector<std::vector<Int>> M(static_cast<size_t>(d), std::vector<Int>(static_cast<size_t>(d), Int(0)));
    for (int j = 0; j < d; ++j) {  // column j: E(theta) * theta^j
        for (size_t k = 0; k < coords.size(); ++k) {
            if (coords[k] == 0) continue;
            const auto& pw = theta_pow[k + static_cast<size_t>(j)];
            for (int i = 0; i < d; ++i) M[static_cast<size_t>(i)][static_cast<size_t>(j)] += coords[k] * pw[static_cast<size_t>(i)];
        }
    }
    return M;
}

std::vector<std::vector<Int>> mat_mul(const std::vector<std::vector<Int>>& A,
                                      const std::vector<std::vector<Int>>& B) {
    size_t n = A.size();
    std::vector<std::vector<Int>> C(n, std::vector<Int>(n, Int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (A[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

// Characteristic polynomial via Faddeev-LeVerrier; integral for integer
// matrices although the recursion divides by k.
IntPoly char_poly(const std::vector<std::vector<Int>>& M) {
    const long n = static_cast<long>(M.size());
    std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
    c[static_cast<size_t>(n)] = 1;
    std::vector<std::vector<Rat>> Mq(M.size(), std::vector<Rat>(M.size()));
    for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = 0; j < M.size(); ++j) Mq[i][j] = Rat(M[i][j]);
    std::vector<std::vector<Rat>> Ak = Mq;
    for (long k = 1; k <= n; ++k) {
        if (k > 1) {
            // Ak = M * (A_{k-1} + c_{n-k+1} I)
            std::vector<std::vector<Rat>> T = Ak;
            for (size_t i = 0; i < T.size(); ++i) T[i][i] += c[static_cast<size_t>(n - k + 1)];
            std::vector<std::vector<Rat>> P(T.size(), std::vector<Rat>(T.size(), Rat(0)));
            for (size_t i = 0; i < T.size(); ++i)
                for (size_t l = 0; l < T.size(); ++l) {
                    if (Mq[i][l] == 0) continue;
                    for (size_t j = 0; j < T.size(); ++j) P[i][j] += Mq[i][l] * T[l][j];
                }
            Ak = P;
        }
        Rat tr(0);
        for (size_t i = 0; i < Ak.size(); ++i) tr += Ak[i][i];
        c[static_cast<size_t>(n - k)] = -tr / Rat(k);
    }
    std::vector<Int> out(static_cast<size_t>(n) + 1);
    for (size_t i = 0; i < out.size(); ++i) {
        if (c[i].get_den() != 1) throw std::logic_error("char_poly: non-integral coefficient");
        out[i] = c[i].get_num();
    }
    return IntPoly(std::move(out));
}

// squarefree part drop: Sturm needs a squarefree input; char polys of a^2
// can have repeated roots, so divide by gcd with the derivative first.
IntPoly squarefree_part(const IntPoly& f) {
    // rational gcd via Euclid, then primitive integer quotient
    QPoly a = to_qpoly(f), b = qpoly_derivative(a);
    while (!b.empty()) {
        QPoly r = qpoly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    // a = gcd (up to scalar); divide f by it exactly over Q
    if (a.size() <= 1) return f;
    QPoly fq = to_qpoly(f), quot(fq.size() - a.size() + 1, Rat(0));
    while (!fq.empty() && fq.size() >= a.size()) {
        Rat lead = fq.back() / a.back();
        size_t off = fq.size() - a.size();
        quot[off] = lead;
        for (size_t i = 0; i < a.size(); ++i) fq[off + i] -= lead * a[i];
        while (!fq.empty() && fq.back() == 0) fq.pop_back();
    }
    // clear denominators
    Int den(1);
    for (const auto& v : quot) {
        Int d(v.get_den());
        Int g;
        mpz_lcm(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = g;
    }
    std::vector<Int> out;
    for (const auto& v : quot) out.push_back(Int(v.get_num()) * (den / Int(v.get_den())));
    return IntPoly(std::move(out));
}

}  // namespace

void validate_newform(const NewformRecord& g) {
    const IntPoly& fp = g.field_poly;
    if (fp.degree() < 1 || !fp.is_monic())
        throw std::domain_error("newform " + g.label + ": field_poly must be monic of degree >= 1");
    if (fp.degree() >= 2 && poly_discriminant(fp) == 0)
        throw std::domain_error("newform " + g.label + ": field_poly is not squarefree");
    if (sturm_real_root_count(fp) != fp.degree())
        throw std::domain_error("newform " + g.label + ": eigenvalue field must be totally real");
    for (const auto& [key, coords] : g.eigs) {
        auto [q, f] = key;
        require_prime(q, "newform eigenvalue prime");
        if (f != 1 && f != 2) throw std::domain_error("newform " + g.label + ": residue degree must be 1 or 2");
        if (coords.empty() || coords.size() > static_cast<size_t>(fp.degree()))
            throw std::domain_error("newform " + g.label + ": eigenvalue coordinate length exceeds the field degree");
        // Deligne: every embedding of a^2 lies in [0, 4 q^f]
        long fourN = 4 * pow_int(q, static_cast<unsigned long>(f)).get_si();
        auto M = mult_matrix(fp, coords);
        IntPoly chi2 = char_poly(mat_mul(M, M));
        IntPoly sf = squarefree_part(chi2);
        if (sturm_roots_above(sf, Rat(fourN)) != 0)
            throw std::domain_error("newform " + g.label + ": eigenvalue at q=" + std::to_string(q) +
                                    " violates the Deligne bound");
    }
}

NewformRecord parse_newform_line(const std::string& line, long lineno) {
    json j;
    try {
        j = json::parse(line);
    } catch (const std::exception& e) {
        throw std::domain_error("newform file line " + std::to_string(lineno) + ": " + e.what());
    }
    NewformRecord g;
    try {
        g.label = j.at("label").get<std::string>();
        std::vector<Int> fp;
        for (const auto& v : j.at("field_poly")) fp.push_back(json_to_int(v));
        g.field_poly = IntPoly(std::move(fp));
        for (const auto& e : j.at("eigs")) {
            long q = e.at("q").get<long>();
            int f = e.at("f").get<int>();
            std::vector<Int> coords;
            for (const auto& v : e.at("a")) coords.push_back(json_to_int(v));
            g.eigs[{q, f}] = std::move(coords);
        }
    } catch (const json::exception& e) {
        throw std::domain_error("newform file line " + std::to_string(lineno) + ": " + e.what());
    }
    validate_newform(g);
    return g;
}

std::vector<NewformRecord> load_newforms(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("load_newforms: cannot open " + path);
    std::vector<NewformRecord> out;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parse_newform_line(line, lineno));
    }
    return out;
}

namespace {

// E(x) as an IntPoly from power-basis coordinates.
IntPoly eig_poly(const std::vector<Int>& coords) { return IntPoly(std::vector<Int>(coords)); }

Int norm_of(const IntPoly& fp, const IntPoly& value) {
    if (value.is_zero()) return Int(0);
    if (fp.degree() == 0) throw std::logic_error("norm_of: constant field_poly");
    return resultant(fp, value);
}

}  // namespace

Int b_q_from_pairs(const NewformRecord& g, long q, int f,
                   const std::vector<std::pair<std::pair<Int, Int>, long>>& sp_pairs) {
    const Int N = pow_int(q, static_cast<unsigned long>(f));
    const IntPoly fp = g.field_poly;
    const IntPoly E = eig_poly(g.eig(q, f));
    const IntPoly E2 = E * E;

    // N * Norm(a^2 - (N+1)^2)
    Int out = N * norm_of(fp, E2 - IntPoly::constant((N + 1) * (N + 1)));
    if (out == 0) return Int(0);
    const IntPoly E4 = E2 * E2;
    for (const auto& [sp, mult] : sp_pairs) {
        const auto& [S, P] = sp;
        Int factor = norm_of(fp, E4 - E2 * S + IntPoly::constant(P));
        if (factor == 0) return Int(0);
        out *= pow_int(factor, static_cast<unsigned long>(mult));
    }
    return out;
}

Int b_q(const NewformRecord& g, long q, const FreyTraceTable& table) {
    if (table.q != q) throw std::domain_error("b_q: trace table was built for a different prime");
    // collapse pairs sharing (S, P) = (t1^2 - 2 n0, n0^2)
    std::map<std::pair<Int, Int>, long> sp;
    for (const auto& e : table.entries) {
        const TracePair& tp = e.second;
        sp[{tp.t1 * tp.t1 - 2 * tp.n0, tp.n0 * tp.n0}] += 1;
    }
    std::vector<std::pair<std::pair<Int, Int>, long>> sp_pairs(sp.begin(), sp.end());
    return b_q_from_pairs(g, q, table.spec.f, sp_pairs);
}

namespace {

void factor_into(std::set<long>& primes, Int& value, long trial_bound) {
    if (value < 0) value = -value;
    if (value <= 1) return;
    for (long p = 2; p <= trial_bound && Int(p) * Int(p) <= value; p = (p == 2 ? 3 : p + 2)) {
        if (!mpz_divisible_ui_p(value.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        primes.insert(p);
        while (mpz_divisible_ui_p(value.get_mpz_t(), static_cast<unsigned long>(p)))
            mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(p));
    }
    // past the trial bound a remaining value below bound^2 is prime
    if (value > 1 && value <= Int(trial_bound) * Int(trial_bound)) {
        primes.insert(value.get_si());
        value = 1;
    }
}

}  // namespace

namespace {

FormResult eliminate_one(const NewformRecord& g, const std::vector<long>& primes,
                         const std::map<long, FreyTraceTable>& tables,
                         const EliminationConfig& config) {
    FormResult fr;
    fr.label = g.label;
    Int G(0);
    for (long q : primes) {
        Int B = b_q(g, q, tables.at(q));
        fr.Bq.emplace_back(q, B);
        if (B != 0) {
            Int t;
            mpz_gcd(t.get_mpz_t(), G.get_mpz_t(), B.get_mpz_t());
            G = t;
        }
    }
    fr.gcd_value = G;
    fr.no_information = (G == 0);
    fr.unfactored_cofactor = 1;
    if (!fr.no_information) {
        std::set<long> primes_of_gcd;
        Int count = abs(G);
        factor_into(primes_of_gcd, count, config.trial_bound);
        fr.unfactored_cofactor = count;
        for (long p : primes_of_gcd) {
            fr.survivors.push_back(p);
            if (p <= config.survivor_floor) fr.below_floor.push_back(p);
        }
    }
    bool above_floor = fr.unfactored_cofactor > 1;
    for (long p : fr.survivors)
        if (p > config.survivor_floor) above_floor = true;
    fr.flagged_for_extended = fr.no_information || above_floor;
    return fr;
}

void require_usable_primes(const std::vector<long>& primes) {
    for (long q : primes) {
        require_prime(q, "eliminate");
        if (q == 2 || q == 5) throw std::domain_error("eliminate: primes 2 and 5 are never used");
    }
}

}  // namespace

EliminationReport eliminate(const std::vector<NewformRecord>& newforms,
                            const EliminationConfig& config) {
    if (config.primes.empty()) throw std::domain_error("eliminate: empty prime list");
    require_usable_primes(config.primes);
    require_usable_primes(config.extended_primes);

    std::vector<long> extended = config.primes;
    for (long q : config.extended_primes)
        if (std::find(extended.begin(), extended.end(), q) == extended.end()) extended.push_back(q);

    // trace tables shared by every newform; extended tables built lazily
    std::map<long, FreyTraceTable> tables;
    for (long q : config.primes) tables.emplace(q, frey_trace_table(q));

    EliminationReport rep;
    rep.forms.resize(newforms.size());
    std::exception_ptr err;

#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(newforms.size()); ++i) {
        try {
            rep.forms[static_cast<size_t>(i)] =
                eliminate_one(newforms[static_cast<size_t>(i)], config.primes, tables, config);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);

    // second pass over the extended list for flagged forms
    if (extended.size() > config.primes.size()) {
        std::vector<size_t> flagged;
        for (size_t i = 0; i < rep.forms.size(); ++i)
            if (rep.forms[i].flagged_for_extended) flagged.push_back(i);
        if (!flagged.empty()) {
            for (long q : extended)
                if (!tables.count(q)) tables.emplace(q, frey_trace_table(q));
#pragma omp parallel for schedule(dynamic)
            for (long k = 0; k < static_cast<long>(flagged.size()); ++k) {
                try {
                    size_t i = flagged[static_cast<size_t>(k)];
                    FormResult redo =
                        eliminate_one(newforms[i], extended, tables, config);
                    redo.flagged_for_extended = true;
                    redo.used_extended = true;
                    rep.forms[i] = std::move(redo);
                } catch (...) {
#pragma omp critical
                    if (!err) err = std::current_exception();
                }
            }
            if (err) std::rethrow_exception(err);
        }
    }

    for (const auto& fr : rep.forms) {
        if (fr.no_information) rep.any_no_information = true;
        for (long p : fr.survivors)
            if (p > config.survivor_floor) rep.overall_survivors.insert(p);
    }
    return rep;
}

std::string report_to_json(const EliminationReport& rep) {
    json out;
    out["forms"] = json::array();
    for (const auto& fr : rep.forms) {
        json jf;
        jf["label"] = fr.label;
        jf["Bq"] = json::array();
        for (const auto& [q, B] : fr.Bq) jf["Bq"].push_back({q, B.get_str()});
        jf["gcd"] = fr.gcd_value.get_str();
        jf["survivors"] = fr.survivors;
        jf["below_floor"] = fr.below_floor;
        jf["no_information"] = fr.no_information;
        jf["flagged_for_extended"] = fr.flagged_for_extended;
        jf["used_extended"] = fr.used_extended;
        if (fr.unfactored_cofactor > 1) jf["unfactored_cofactor"] = fr.unfactored_cofactor.get_str();
        out["forms"].push_back(jf);
    }
    out["overall_survivors"] = std::vector<long>(rep.overall_survivors.begin(), rep.overall_survivors.end());
    out["any_no_information"] = rep.any_no_information;
    return out.dump(2);
}

ResultantBound resultant_bound(const IntPoly& frob_charpoly, long character_order) {
    if (!frob_charpoly.is_monic()) throw std::domain_error("resultant_bound: charpoly must be monic");
    if (character_order < 1) throw std::domain_error("resultant_bound: order must be >= 1");
    std::vector<Int> xn(static_cast<size_t>(character_order) + 1, Int(0));
    xn[0] = -1;
    xn.back() = 1;
    ResultantBound rb;
    rb.resultant = resultant(IntPoly(std::move(xn)), frob_charpoly);
    rb.no_bound = (rb.resultant == 0);
    if (!rb.no_bound) {
        Int v = abs(rb.resultant);
        factor_into(rb.primes, v, 1000000);
        if (v > 1) throw std::domain_error("resultant_bound: resultant has a factor above the trial bound");
    }
    return rb;
}

UnitBound unit_bound(long search_cap) {
    // modulus q2^3 r5 = (8 sqrt5); phi generates the units up to sign
    const QuadElt phi = QuadElt::phi();
    const QuadElt gen = QuadElt::sqrt5() * Int(8);
    QuadElt u = QuadElt::one();
    for (long n = 1; n <= search_cap; ++n) {
        u = u * phi;
        if (!quad_totally_positive(u)) continue;
        if (!quad_in_ideal(u - QuadElt::one(), gen)) continue;
        UnitBound ub;
        ub.N = n;
        ub.norm = quad_norm(u - QuadElt::one());
        Int v = abs(ub.norm);
        factor_into(ub.primes, v, 1000000);
        if (v > 1) throw std::logic_error("unit_bound: norm has a factor above the trial bound");
        ub.p_bound = ub.primes.empty() ? 0 : *ub.primes.rbegin();
        return ub;
    }
    throw std::domain_error("unit_bound: no exponent found below the search cap");
}

}  // namespace f2rp
