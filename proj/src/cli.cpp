#include "f2rp/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "f2rp/cluster.hpp"
#include "f2rp/conductor.hpp"
#include "f2rp/count.hpp"
#include "f2rp/eliminate.hpp"
#include "f2rp/frey.hpp"

namespace f2rp {

namespace {

using nlohmann::json;

std::string S(const Int& v) { return v.get_str(); }
std::string S(long v) { return std::to_string(v); }
std::string S(const Rat& v) { return v.get_str(); }

// Text mode is a flat rendering of the same JSON object, so the two
// output modes cannot drift apart.
void print_text(const json& j, std::ostream& out, const std::string& prefix = "") {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
            if (it->is_object() || it->is_array()) print_text(*it, out, key);
            else if (it->is_string()) out << key << " = " << it->get<std::string>() << "\n";
            else out << key << " = " << it->dump() << "\n";
        }
    } else if (j.is_array()) {
        long idx = 0;
        for (const auto& v : j) {
            std::string key = prefix + "[" + std::to_string(idx++) + "]";
            if (v.is_object() || v.is_array()) print_text(v, out, key);
            else if (v.is_string()) out << key << " = " << v.get<std::string>() << "\n";
            else out << key << " = " << v.dump() << "\n";
        }
        if (idx == 0) out << prefix << " = []\n";
    } else {
        out << prefix << " = " << j.dump() << "\n";
    }
}

struct CurveArgs {
    long A{1}, B{1}, C{1}, r{5}, a{0}, b{0};
};

json run_curve(const CurveArgs& ca) {
    EquationInstance inst(Int(ca.A), Int(ca.B), Int(ca.C), ca.r);
    HyperellipticModel m = build_frey_curve(inst, Int(ca.a), Int(ca.b));
    json j;
    j["model"] = "y^2 = " + m.f.str();
    json coeffs = json::array();
    for (int i = 0; i <= m.f.degree(); ++i) coeffs.push_back(S(m.f.coeff(i)));
    j["coefficients"] = coeffs;
    j["genus"] = S(m.genus);
    j["discriminant"] = S(m.disc);
    j["discriminant_closed_form"] = S(frey_discriminant(inst, Int(ca.a), Int(ca.b)));
    j["cm"] = m.cm_branch;
    if (m.cm_branch) j["cm_field"] = m.cm_field;
    GeneralParams gp = general_params(inst, Int(ca.a), Int(ca.b));
    j["z"] = S(gp.z);
    j["s"] = S(gp.s);
    j["Delta"] = S(gp.delta);
    return j;
}

json run_conductor(const CurveArgs& ca, long c, long q, const std::string& target) {
    EquationInstance inst(Int(ca.A), Int(ca.B), Int(ca.C), ca.r);
    ConductorTarget t = ConductorTarget::Rep;
    if (target == "curveQ") t = ConductorTarget::CurveQ;
    else if (target == "curveK") t = ConductorTarget::CurveK;
    else if (target != "rep") throw CLI::ValidationError("--target must be rep, curveQ or curveK");
    ConductorReport rep = conductor_exponent(inst, Int(ca.a), Int(ca.b), Int(c), q, t);
    json j;
    j["q"] = S(q);
    j["case"] = rep.prime_case.describe();
    if (rep.curve_exp_Q) j["curve_exponent_Q"] = S(*rep.curve_exp_Q);
    if (rep.curve_exp_K) j["curve_exponent_K"] = S(*rep.curve_exp_K);
    if (rep.rep_exp) j["rep_exponent"] = S(*rep.rep_exp);
    if (rep.tame) j["tame"] = S(*rep.tame);
    if (rep.wild) j["wild"] = S(*rep.wild);
    j["twisted"] = rep.twisted;
    return j;
}

json run_cluster(long z, long s, long r, long q, const std::string& base, bool render) {
    BaseField bf = (base == "K") ? BaseField::K : BaseField::Q;
    RootValuationData rv = root_valuation_data(Int(z), Int(s), q, r);
    const Rat scale = (bf == BaseField::K && q == r) ? Rat((r - 1) / 2) : Rat(1);
    auto pairwise = [&](int k, int j2) { return Rat(rv.pairwise(k, j2) * scale); };
    ClusterPicture pic = build_cluster_picture(pairwise, static_cast<int>(r));
    InertiaOrbits orb = inertia_orbits(Int(z), Int(s), q, r, bf);
    TameData td = tame_conductor(pic, orb);
    long wild = wild_conductor(Int(z), Int(s), q, r, bf);
    json j;
    j["base"] = (bf == BaseField::K) ? "K" : "Q";
    j["roots"] = S(static_cast<long>(pic.n));
    j["top_depth"] = S(*pic.at(pic.root()).depth);
    j["tame"] = S(td.exponent);
    j["wild"] = S(wild);
    j["total"] = S(td.exponent + wild);
    j["U_orbits"] = S(td.u_orbits);
    j["V_orbits"] = S(td.v_orbits);
    if (render) j["ascii"] = render_ascii(pic);
    return j;
}

json run_hypotheses(const CurveArgs& ca, long c) {
    EquationInstance inst(Int(ca.A), Int(ca.B), Int(ca.C), ca.r);
    HypothesisReport h = check_hypotheses(inst, Int(ca.a), Int(ca.b), Int(c));
    json j;
    j["Aa2"] = S(h.aa2);
    j["Bbr"] = S(h.bbr);
    j["sum_not_unit"] = h.sum_not_unit;
    j["not_in_two_power_list"] = h.not_in_two_power_list;
    j["irreducibility_r_ge_11"] = h.irreducibility_r_ge_11;
    j["not_in_r7_list"] = h.not_in_r7_list;
    j["irreducibility_r_7"] = h.irreducibility_r_7;
    j["modularity"] = h.modularity;
    j["large_image_aux_ell"] = h.large_image_aux_ell;
    j["large_image_r_coprime"] = h.large_image_r_coprime;
    j["large_image"] = h.large_image;
    j["cm_by_cyclotomic"] = h.cm_by_cyclotomic;
    j["cm_by_gaussian"] = h.cm_by_gaussian;
    return j;
}

json trace_pair_json(const TracePair& tp) {
    json j;
    j["t1"] = S(tp.t1);
    j["n0"] = S(tp.n0);
    j["quadratic"] = "Y^2 - (" + S(tp.t1) + ")Y + (" + S(tp.n0) + ")";
    auto [m1, m2] = tp.members();
    j["members"] = {m1.str(), m2.str()};
    return j;
}

json run_traces(long q, long a, long b, bool single) {
    json j;
    if (single) {
        FreyTraceTable t = frey_trace_table(q);
        const TracePair* tp = t.find(((a % q) + q) % q, ((b % q) + q) % q);
        if (!tp) throw std::domain_error("traces: the pair is singular mod q");
        j["q"] = S(q);
        j["f"] = S(static_cast<long>(t.spec.f));
        j["N"] = S(t.spec.N);
        j["pair"] = trace_pair_json(*tp);
        return j;
    }
    FreyTraceTable t = frey_trace_table(q);
    j["q"] = S(q);
    j["f"] = S(static_cast<long>(t.spec.f));
    j["N"] = S(t.spec.N);
    json entries = json::array();
    for (const auto& e : t.entries) {
        json je = trace_pair_json(e.second);
        je["a"] = S(e.first.first);
        je["b"] = S(e.first.second);
        entries.push_back(je);
    }
    j["entries"] = entries;
    json skipped = json::array();
    for (const auto& p : t.skipped) skipped.push_back({S(p.first), S(p.second)});
    j["skipped_singular"] = skipped;
    return j;
}

json run_eliminate(const std::string& path, const std::string& primes_csv,
                   const std::string& extended_csv, long floor) {
    EliminationConfig cfg;
    cfg.survivor_floor = floor;
    auto parse_csv = [](const std::string& csv) {
        std::vector<long> out;
        std::stringstream ss(csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
        return out;
    };
    if (!primes_csv.empty()) cfg.primes = parse_csv(primes_csv);
    if (!extended_csv.empty()) cfg.extended_primes = parse_csv(extended_csv);
    std::vector<NewformRecord> forms = load_newforms(path);
    EliminationReport rep = eliminate(forms, cfg);
    return json::parse(report_to_json(rep));
}

json run_igusa(long a, long b) {
    IgusaData d = igusa_invariants_r5(Int(a), Int(b));
    json j;
    j["J2"] = S(d.J2);
    j["J4"] = S(d.J4);
    j["J6"] = S(d.J6);
    j["J8"] = S(d.J8);
    j["J10"] = S(d.J10);
    j["potentially_good_at_2"] = d.potentially_good_at_2;
    return j;
}

json run_lmt(long v) {
    LmtPoint p = lmt_family(Int(v));
    json j;
    j["x"] = S(p.x);
    j["y"] = S(p.y);
    j["q"] = S(p.q_alpha);
    Int lhs = 5 * p.x * p.x + p.q_alpha * p.q_alpha;
    j["identity_5x2_plus_q2"] = S(lhs);
    j["y5"] = S(pow_int(p.y, 5));
    j["identity_holds"] = (lhs == pow_int(p.y, 5));
    return j;
}

json run_bounds() {
    json j;
    ResultantBound plus = resultant_bound(IntPoly({5, 0, 1}), 4);
    ResultantBound minus = resultant_bound(IntPoly({-5, 0, 1}), 4);
    j["resultant_x2_plus_5"] = S(plus.resultant);
    j["resultant_x2_minus_5"] = S(minus.resultant);
    json jp = json::array();
    for (long p : plus.primes) jp.push_back(S(p));
    j["primes_x2_plus_5"] = jp;
    json jm = json::array();
    for (long p : minus.primes) jm.push_back(S(p));
    j["primes_x2_minus_5"] = jm;
    UnitBound ub = unit_bound();
    j["unit_exponent_N"] = S(ub.N);
    j["unit_norm"] = S(ub.norm);
    json pr = json::array();
    for (long p : ub.primes) pr.push_back(S(p));
    j["unit_norm_primes"] = pr;
    j["p_bound"] = S(ub.p_bound);
    return j;
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    if (const char* th = std::getenv("FERMAT2RP_THREADS")) {
        long n = std::strtol(th, nullptr, 10);
        if (n >= 1) omp_set_num_threads(static_cast<int>(n));
    }

    CLI::App app{"fermat2rp: Frey hyperelliptic curves, conductors and elimination for A x^2 + B y^r = C z^p"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: json or text")->check(CLI::IsMember({"json", "text"}));

    CurveArgs ca;
    long c = 1, q = 5, z = 0, s = 0, v = 1;
    std::string target = "rep", base = "Q", render, newforms_path, primes_csv, extended_csv;
    long floor = 5;
    bool have_ab_pair = false;

    auto add_instance_opts = [&](CLI::App* sub, bool with_sol) {
        sub->add_option("--A", ca.A, "coefficient A (squarefree)");
        sub->add_option("--B", ca.B, "coefficient B (free of r-th powers)");
        sub->add_option("--C", ca.C, "coefficient C");
        sub->add_option("--r", ca.r, "signature prime r >= 5");
        if (with_sol) {
            sub->add_option("--a", ca.a, "solution coordinate a")->required();
            sub->add_option("--b", ca.b, "solution coordinate b")->required();
        }
    };

    auto* curve = app.add_subcommand("curve", "build the Frey hyperelliptic curve");
    add_instance_opts(curve, true);

    auto* conductor = app.add_subcommand("conductor", "conductor exponent at a prime");
    add_instance_opts(conductor, true);
    conductor->add_option("--c", c, "solution coordinate c");
    conductor->add_option("--q", q, "prime to classify")->required();
    conductor->add_option("--target", target, "rep | curveQ | curveK");

    auto* cluster = app.add_subcommand("cluster", "cluster picture and tame/wild conductor of C(z,s)");
    cluster->add_option("--z", z)->required();
    cluster->add_option("--s", s)->required();
    cluster->add_option("--r", ca.r)->required();
    cluster->add_option("--q", q)->required();
    cluster->add_option("--base", base, "Q | K");
    cluster->add_option("--render", render, "ascii to include the picture");

    auto* hypo = app.add_subcommand("hypotheses", "irreducibility / modularity / large-image checks");
    add_instance_opts(hypo, true);
    hypo->add_option("--c", c, "solution coordinate c");

    auto* traces = app.add_subcommand("traces", "Frobenius trace pairs of the r=5 Frey curve");
    traces->add_option("--q", q, "prime (not 2 or 5)")->required();
    auto* oa = traces->add_option("--a", ca.a, "single residue a");
    auto* ob = traces->add_option("--b", ca.b, "single residue b");
    oa->needs(ob);
    ob->needs(oa);

    auto* elim = app.add_subcommand("eliminate", "newform elimination");
    elim->add_option("--newforms", newforms_path, "JSON-Lines eigenvalue data")->required();
    elim->add_option("--primes", primes_csv, "comma-separated primes, default 3,7,11,13,17,19,23");
    elim->add_option("--extended", extended_csv, "extra primes for the flagged-form second pass");
    elim->add_option("--floor", floor, "survivor floor");

    auto* igusa = app.add_subcommand("igusa", "Igusa invariants of the r=5 Frey curve");
    igusa->add_option("--a", ca.a)->required();
    igusa->add_option("--b", ca.b)->required();

    auto* lmt = app.add_subcommand("lmt", "the x = 10v(80v^4-40v^2+1) family");
    lmt->add_option("--v", v)->required();

    app.add_subcommand("bounds", "resultant and unit-norm bounds for the r=5 application");

    // let --format after the subcommand reach the parent app
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        json j;
        if (curve->parsed()) j = run_curve(ca);
        else if (conductor->parsed()) j = run_conductor(ca, c, q, target);
        else if (cluster->parsed()) j = run_cluster(z, s, ca.r, q, base, render == "ascii");
        else if (hypo->parsed()) j = run_hypotheses(ca, c);
        else if (traces->parsed()) {
            have_ab_pair = (oa->count() > 0);
            j = run_traces(q, ca.a, ca.b, have_ab_pair);
        } else if (elim->parsed()) j = run_eliminate(newforms_path, primes_csv, extended_csv, floor);
        else if (igusa->parsed()) j = run_igusa(ca.a, ca.b);
        else if (lmt->parsed()) j = run_lmt(v);
        else j = run_bounds();

        if (format == "json") out << j.dump(2) << "\n";
        else print_text(j, out);
        return 0;
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace f2rp
