// mixedcode command line front end.
//
// Subcommands: construct, analyze, verify, sweep, graph, massey.
// Exit codes: 0 success, 1 mismatch against a closed form, 2 usage or
// side-condition error, 3 budget exceeded.
//
// Output formats: json (default for analyze/verify/graph/massey),
// matrix-text (default for construct), csv (default for sweep),
// edge-list (graph only). Support sets on the command line are
// 1-indexed; coordinate/column indices in reports are 0-indexed.
// Outputs are byte-identical across runs for the same job at
// --threads 1; timing chatter goes to stderr only.

#include <CLI11.hpp>
#include <json.hpp>

#include "mixedcode/applications.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using njson = nlohmann::ordered_json;
using namespace mixedcode;

namespace {

struct CommonOpts {
    std::string kind;
    unsigned q = 0;
    unsigned m = 0;
    std::vector<unsigned> A, B, C;
    std::string output;
    std::string format;
    std::uint64_t budget = std::uint64_t(1) << 30;
    unsigned threads = 1;
};

SetKind parse_kind(const std::string& s) {
    if (s == "S1") return SetKind::S1;
    if (s == "S2") return SetKind::S2;
    if (s == "S3") return SetKind::S3;
    if (s == "S4") return SetKind::S4;
    fail(errc::out_of_range, "unknown defining-set kind '" + s + "' (expected S1..S4)");
}

const char* kind_name(SetKind k) {
    switch (k) {
        case SetKind::S1: return "S1";
        case SetKind::S2: return "S2";
        case SetKind::S3: return "S3";
        case SetKind::S4: return "S4";
        default: return "custom";
    }
}

Table table_for(SetKind k) {
    switch (k) {
        case SetKind::S1: return Table::T1;
        case SetKind::S2: return Table::T2;
        case SetKind::S3: return Table::T3;
        case SetKind::S4: return Table::T4;
        default: fail(errc::out_of_range, "no distribution table for custom sets");
    }
}

DefiningSetSpec make_set_spec(const CommonOpts& o) {
    if (o.kind.empty()) fail(errc::out_of_range, "--kind is required");
    if (o.q == 0 || o.m == 0) fail(errc::out_of_range, "--q and --m are required");
    DefiningSetSpec s;
    s.kind = parse_kind(o.kind);
    s.q = o.q;
    s.m = o.m;
    s.A = make_support(o.m, o.A);
    s.B = make_support(o.m, o.B);
    s.C = make_support(o.m, o.C);
    return s;
}

EnumerationConfig enum_cfg(const CommonOpts& o) {
    EnumerationConfig cfg;
    cfg.budget = o.budget;
    cfg.threads = o.threads;
    return cfg;
}

std::vector<unsigned> support_members(const SupportSet& s) {
    std::vector<unsigned> v(s.members.begin(), s.members.end());
    return v;
}

njson input_json(const DefiningSetSpec& s) {
    njson j;
    j["kind"] = kind_name(s.kind);
    j["q"] = s.q;
    j["m"] = s.m;
    j["A"] = support_members(s.A);
    j["B"] = support_members(s.B);
    j["C"] = support_members(s.C);
    return j;
}

njson dist_json(const WeightDistribution& d) {
    njson arr = njson::array();
    for (const auto& [w, f] : d.counts) {
        njson row;
        row["weight"] = w;
        row["frequency"] = f;
        arr.push_back(row);
    }
    return arr;
}

void write_text(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(output, std::ios::binary);
    if (!f) fail(errc::io_failure, "cannot open output file '" + output + "'");
    f << text;
    if (!f) fail(errc::io_failure, "write to '" + output + "' failed");
}

void write_json(const njson& j, const std::string& output) {
    write_text(j.dump(2) + "\n", output);
}

// One matrix block: "q m rows cols" header, then row-major entries.
// Quasi-Galois entries d + u*e are serialized as d + q*e.
std::string matrix_text(const RingMatrix& M, unsigned m) {
    std::ostringstream os;
    os << M.F->q << ' ' << m << ' ' << M.rows << ' ' << M.cols << '\n';
    for (std::size_t r = 0; r < M.rows; ++r) {
        for (std::size_t c = 0; c < M.cols; ++c) {
            if (c) os << ' ';
            os << unsigned(M.at_d(r, c)) + M.F->q * unsigned(M.at_e(r, c));
        }
        os << '\n';
    }
    return os.str();
}

std::string matrix_text(const FieldMatrix& M, unsigned m) {
    std::ostringstream os;
    os << M.F->q << ' ' << m << ' ' << M.rows << ' ' << M.cols << '\n';
    for (std::size_t r = 0; r < M.rows; ++r) {
        for (std::size_t c = 0; c < M.cols; ++c) {
            if (c) os << ' ';
            os << unsigned(M.at(r, c));
        }
        os << '\n';
    }
    return os.str();
}

struct TimerNote {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    ~TimerNote() {
        auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cerr << "elapsed: " << dt << " ms\n";
    }
};

std::string pick_format(const std::string& requested, const char* fallback,
                        std::initializer_list<const char*> allowed) {
    std::string f = requested.empty() ? fallback : requested;
    for (const char* a : allowed)
        if (f == a) return f;
    fail(errc::out_of_range, "format '" + f + "' is not valid for this command");
}

// ---------------------------------------------------------------- construct

int cmd_construct(const CommonOpts& o) {
    TimerNote t;
    auto spec = make_set_spec(o);
    auto D = build_defining_set(spec);
    const Field& F = field_cache(o.q);

    RingMatrix ring = ring_spanning_matrix(F, o.m, D);
    FieldMatrix gray = gray_spanning_matrix(F, o.m, D);
    std::size_t rk = rank(gray);

    std::cerr << "|S| = " << D.size() << ", ring matrix " << ring.rows << "x"
              << ring.cols << ", Gray matrix " << gray.rows << "x" << gray.cols
              << ", Gray rank " << rk << "\n";

    njson predicted;
    try {
        ClosedFormParams p{table_for(spec.kind), o.q, o.m, spec.A, spec.B, spec.C};
        auto cf = closed_form_distribution(p);
        predicted["length"] = 2 * D.size();
        predicted["size"] = cf.total();
        predicted["min_weight"] = cf.min_nonzero_weight();
        predicted["distinct_nonzero_weights"] = cf.distinct_nonzero_weights();
    } catch (const error& e) {
        predicted["unavailable"] = e.what();
    }
    std::cerr << "predicted: " << predicted.dump() << "\n";

    std::string fmt = pick_format(o.format, "matrix-text", {"matrix-text", "json"});
    if (fmt == "matrix-text") {
        write_text(matrix_text(ring, o.m) + matrix_text(gray, o.m), o.output);
    } else {
        njson rep;
        rep["schema"] = "mixedcode/1";
        rep["command"] = "construct";
        rep["input"] = input_json(spec);
        rep["set_size"] = D.size();
        rep["ring_matrix"] = {{"rows", ring.rows}, {"cols", ring.cols}};
        rep["gray_matrix"] = {{"rows", gray.rows}, {"cols", gray.cols}, {"rank", rk}};
        rep["predicted"] = predicted;
        write_json(rep, o.output);
    }
    return 0;
}

// ------------------------------------------------------------------ analyze

njson certificates_json(const RingCode& rc, const FieldCode& gray,
                        const WeightDistribution& dist,
                        const EnumerationConfig& cfg) {
    (void)cfg;
    njson cert;
    std::size_t n = 2 * rc.length;
    std::size_t k = code_dimension(gray);
    std::uint64_t d = dist.min_nonzero_weight();

    auto gr = griesmer_status(n, k, d, gray.F->q);
    const char* gv = "none";
    switch (gr.verdict) {
        case GriesmerVerdict::griesmer: gv = "griesmer"; break;
        case GriesmerVerdict::near_griesmer: gv = "near_griesmer"; break;
        case GriesmerVerdict::near_griesmer_distance_optimal:
            gv = "near_griesmer_distance_optimal";
            break;
        default: break;
    }
    cert["griesmer"] = {{"sum", gr.sum}, {"verdict", gv}};

    auto sp = sphere_packing(n, k, d, gray.F->q);
    cert["sphere_packing"] = {{"satisfied", sp.satisfied},
                              {"next_violates", sp.next_violates},
                              {"optimal", sp.optimal},
                              {"perfect", sp.perfect}};

    if (gray.F->q == 2 || gray.F->q == 3)
        cert["ring_self_orthogonal"] = is_self_orthogonal(rc);

    try {
        cert["minimal"] = is_minimal_exact(gray);
    } catch (const error& e) {
        if (e.code == errc::too_large)
            cert["minimal"] = nullptr;
        else
            throw;
    }
    cert["projective"] = is_projective(gray.span);
    return cert;
}

int cmd_analyze(const CommonOpts& o) {
    TimerNote t;
    auto spec = make_set_spec(o);
    auto cfg = enum_cfg(o);
    RingCode rc = code_from_defining_set(spec);
    FieldCode gray = gray_code(rc);
    WeightDistribution dist = weight_distribution(rc, Metric::lee, cfg);

    njson rep;
    rep["schema"] = "mixedcode/1";
    rep["command"] = "analyze";
    rep["input"] = input_json(spec);
    rep["length"] = 2 * rc.length;
    rep["dimension"] = code_dimension(gray);
    rep["size"] = dist.total();
    rep["min_distance"] = dist.min_nonzero_weight();
    rep["distribution"] = dist_json(dist);
    rep["certificates"] = certificates_json(rc, gray, dist, cfg);

    std::string fmt = pick_format(o.format, "json", {"json", "csv"});
    if (fmt == "csv") {
        std::ostringstream os;
        os << "weight,frequency\n";
        for (const auto& [w, f] : dist.counts) os << w << ',' << f << '\n';
        write_text(os.str(), o.output);
    } else {
        write_json(rep, o.output);
    }
    return 0;
}

// ------------------------------------------------------------------- verify

struct VerifyOutcome {
    bool dist_match = false;
    bool clause_match = false;
    njson report;
};

VerifyOutcome verify_instance(const DefiningSetSpec& spec,
                              const EnumerationConfig& cfg) {
    RingCode rc = code_from_defining_set(spec);
    FieldCode gray = gray_code(rc);
    WeightDistribution measured = weight_distribution(rc, Metric::lee, cfg);

    ClosedFormParams p{table_for(spec.kind), spec.q, spec.m, spec.A, spec.B,
                       spec.C};
    WeightDistribution predicted = closed_form_distribution(p);

    njson rows = njson::array();
    bool dist_match = true;
    std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> merged;
    for (const auto& [w, f] : measured.counts) merged[w].first = f;
    for (const auto& [w, f] : predicted.counts) merged[w].second = f;
    for (const auto& [w, mf] : merged) {
        bool eq = mf.first == mf.second;
        dist_match = dist_match && eq;
        njson row;
        row["weight"] = w;
        row["measured"] = mf.first;
        row["predicted"] = mf.second;
        row["equal"] = eq;
        rows.push_back(row);
    }

    std::size_t stated = clause_weight_count(p, false);
    std::size_t corrected = clause_weight_count(p, true);
    std::size_t table_rows = nonzero_row_count(p);
    std::size_t merged_weights = measured.distinct_nonzero_weights();
    bool clause_match = table_rows == corrected;

    njson rep;
    rep["distribution_match"] = dist_match;
    rep["rows"] = rows;
    njson tw;
    tw["stated_clause"] = stated;
    tw["corrected_clause"] = corrected;
    tw["nonzero_table_rows"] = table_rows;
    tw["distinct_measured_weights"] = merged_weights;
    tw["match"] = clause_match;
    if (stated != corrected)
        tw["note"] = "stated clause over-counts on this branch; the corrected "
                     "value is enforced";
    if (merged_weights < table_rows)
        tw["note_merge"] = "distinct table rows merge to fewer weights here";
    rep["t_weight"] = tw;

    VerifyOutcome out;
    out.dist_match = dist_match;
    out.clause_match = clause_match;
    out.report = std::move(rep);
    return out;
}

int cmd_verify(const CommonOpts& o) {
    TimerNote t;
    auto spec = make_set_spec(o);
    auto cfg = enum_cfg(o);

    VerifyOutcome v = verify_instance(spec, cfg);

    RingCode rc = code_from_defining_set(spec);
    FieldCode gray = gray_code(rc);
    WeightDistribution measured = weight_distribution(rc, Metric::lee, cfg);

    njson rep;
    rep["schema"] = "mixedcode/1";
    rep["command"] = "verify";
    rep["input"] = input_json(spec);
    rep["length"] = 2 * rc.length;
    rep["dimension"] = code_dimension(gray);
    rep["size"] = measured.total();
    rep["min_distance"] = measured.min_nonzero_weight();
    rep["verification"] = v.report;
    rep["certificates"] = certificates_json(rc, gray, measured, cfg);
    bool pass = v.dist_match && v.clause_match;
    rep["pass"] = pass;

    std::string fmt = pick_format(o.format, "json", {"json", "csv"});
    if (fmt == "csv") {
        std::ostringstream os;
        os << "weight,measured,predicted,equal\n";
        for (const auto& row : rep["verification"]["rows"])
            os << row["weight"].get<std::uint64_t>() << ','
               << row["measured"].get<std::uint64_t>() << ','
               << row["predicted"].get<std::uint64_t>() << ','
               << (row["equal"].get<bool>() ? 1 : 0) << '\n';
        write_text(os.str(), o.output);
    } else {
        write_json(rep, o.output);
    }
    if (!pass) {
        std::cerr << "verify: MISMATCH\n";
        for (const auto& row : rep["verification"]["rows"])
            if (!row["equal"].get<bool>())
                std::cerr << "  weight " << row["weight"] << ": measured "
                          << row["measured"] << ", predicted " << row["predicted"]
                          << "\n";
        if (!v.clause_match)
            std::cerr << "  t-weight clause mismatch: "
                      << rep["verification"]["t_weight"].dump() << "\n";
        return 1;
    }
    return 0;
}

// -------------------------------------------------------------------- sweep

std::vector<std::vector<unsigned>> all_nonempty_subsets(unsigned m) {
    std::vector<std::vector<unsigned>> out;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<unsigned> s;
        for (unsigned i = 0; i < m; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        out.push_back(std::move(s));
    }
    return out;
}

std::string join_set(const std::vector<unsigned>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(v[i]);
    }
    return s;
}

int cmd_sweep(const std::vector<unsigned>& qs, const std::vector<unsigned>& ms,
              const std::vector<std::string>& kinds, const CommonOpts& o,
              bool keep_going) {
    TimerNote t;
    EnumerationConfig cfg = enum_cfg(o);

    std::ostringstream csv;
    csv << "kind,q,m,A,B,C,length,size,min_distance,status\n";
    std::size_t n_pass = 0, n_fail = 0, n_budget = 0, n_no_table = 0,
                n_skipped = 0;

    for (unsigned q : qs)
        for (unsigned m : ms)
            for (const auto& kname : kinds) {
                SetKind kind = parse_kind(kname);
                auto subsets = all_nonempty_subsets(m);
                for (const auto& A : subsets)
                    for (const auto& B : subsets)
                        for (const auto& C : subsets) {
                            DefiningSetSpec spec;
                            spec.kind = kind;
                            spec.q = q;
                            spec.m = m;
                            std::string status;
                            std::string nstr = "-", szstr = "-", dstr = "-";
                            try {
                                spec.A = make_support(m, A);
                                spec.B = make_support(m, B);
                                spec.C = make_support(m, C);
                                // Side conditions are checked by the builder.
                                auto D = build_defining_set(spec);
                                nstr = std::to_string(2 * D.size());
                                try {
                                    VerifyOutcome v = verify_instance(spec, cfg);
                                    RingCode rc = code_from_defining_set(spec);
                                    auto dist = weight_distribution(
                                        rc, Metric::lee, cfg);
                                    szstr = std::to_string(dist.total());
                                    dstr = std::to_string(
                                        dist.min_nonzero_weight());
                                    if (v.dist_match && v.clause_match) {
                                        status = "pass";
                                        ++n_pass;
                                    } else {
                                        status = "fail";
                                        ++n_fail;
                                    }
                                } catch (const error& e) {
                                    if (e.code == errc::side_condition_violated) {
                                        // Construction is valid but the closed
                                        // form is not stated here.
                                        status = "no_table";
                                        ++n_no_table;
                                    } else if (e.code == errc::too_large) {
                                        status = "too_large";
                                        ++n_budget;
                                    } else {
                                        throw;
                                    }
                                }
                            } catch (const error& e) {
                                if (e.code == errc::side_condition_violated) {
                                    status = "side_condition";
                                    ++n_skipped;
                                } else if (e.code == errc::too_large) {
                                    status = "too_large";
                                    ++n_budget;
                                } else {
                                    throw;
                                }
                            }
                            csv << kname << ',' << q << ',' << m << ','
                                << join_set(A) << ',' << join_set(B) << ','
                                << join_set(C) << ',' << nstr << ',' << szstr
                                << ',' << dstr << ',' << status << '\n';
                            if (!keep_going &&
                                (status == "fail" || status == "too_large")) {
                                write_text(csv.str(), o.output);
                                std::cerr << "sweep stopped at first "
                                          << status << " (use --keep-going to "
                                             "continue)\n";
                                return status == "fail" ? 1 : 3;
                            }
                        }
            }

    write_text(csv.str(), o.output);
    std::cerr << "sweep: " << n_pass << " pass, " << n_fail << " fail, "
              << n_budget << " over budget, " << n_no_table << " without a "
              << "closed form, " << n_skipped << " outside side conditions\n";
    if (n_fail) return 1;
    if (n_budget) return 3;
    return 0;
}

// -------------------------------------------------------------------- graph

int cmd_graph(unsigned m, unsigned c, unsigned ell, bool shi,
              const CommonOpts& o) {
    TimerNote t;
    if (!shi)
        fail(errc::out_of_range,
             "only the --shi projective family is supported by `graph`");
    if (m < 2) fail(errc::side_condition_violated, "--shi requires m >= 2");
    if (c < 1 || c > m)
        fail(errc::side_condition_violated, "--shi requires 1 <= c <= m");

    DefiningSetSpec spec;
    spec.kind = SetKind::S2;
    spec.q = 4;
    spec.m = m;
    std::vector<unsigned> ab;
    for (unsigned i = 1; i < m; ++i) ab.push_back(i);
    std::vector<unsigned> cc;
    for (unsigned i = 1; i <= c; ++i) cc.push_back(i);
    spec.A = make_support(m, ab);
    spec.B = make_support(m, ab);
    spec.C = make_support(m, cc);

    ColumnMultiset reps = projective_representatives(RepKind::N2bar, spec);
    FieldCode code = code_from_columns(reps);
    FieldCode dual = dual_code(code);
    CosetGraph g = coset_graph(dual);

    SWRGReport wr = walk_regularity_check(g, ell);
    SWRGPrediction pred = swrg_predicted(m, c, ell);

    bool pass = wr.connected && wr.is_swrg && g.degree == pred.degree &&
                g.vertices == pred.vertices && wr.lambda == pred.lambda &&
                wr.mu == pred.mu && wr.nu == pred.nu &&
                wr.spectrum == pred.spectrum;

    njson rep;
    rep["schema"] = "mixedcode/1";
    rep["command"] = "graph";
    rep["input"] = {{"family", "shi"}, {"q", 4}, {"m", m}, {"c", c},
                    {"ell", ell}};
    rep["vertices"] = g.vertices;
    rep["degree"] = g.degree;
    rep["connected"] = wr.connected;
    njson spec_j = njson::array();
    for (const auto& [lam, mult] : wr.spectrum)
        spec_j.push_back({{"eigenvalue", lam}, {"multiplicity", mult}});
    rep["spectrum"] = spec_j;
    rep["walks"] = {{"ell", ell},
                    {"lambda", wr.lambda},
                    {"mu", wr.mu},
                    {"nu", wr.nu},
                    {"is_swrg", wr.is_swrg}};
    rep["predicted"] = {{"degree", pred.degree},
                        {"vertices", pred.vertices},
                        {"lambda", pred.lambda},
                        {"mu", pred.mu},
                        {"nu", pred.nu}};
    rep["pass"] = pass;

    std::string fmt = pick_format(o.format, "json", {"json", "edge-list"});
    if (fmt == "edge-list") {
        std::ostringstream os;
        for (std::uint64_t v = 0; v < g.vertices; ++v)
            for (std::uint64_t w : g.neighbors(v))
                if (v < w) os << v << ' ' << w << '\n';
        write_text(os.str(), o.output);
    } else {
        write_json(rep, o.output);
    }
    return pass ? 0 : 1;
}

// ------------------------------------------------------------------- massey

int cmd_massey(const CommonOpts& o, unsigned h0) {
    TimerNote t;
    CommonOpts oo = o;
    if (oo.kind.empty()) oo.kind = "S3";
    auto spec = make_set_spec(oo);
    RingCode rc = code_from_defining_set(spec);
    FieldCode gray = gray_code(rc);

    MasseyReport mr = massey_report(gray, h0);

    njson rep;
    rep["schema"] = "mixedcode/1";
    rep["command"] = "massey";
    rep["input"] = input_json(spec);
    rep["h0_index"] = mr.h0_index;
    rep["participants"] = mr.participants;
    rep["participant_columns"] = mr.participant_columns;
    rep["minimal_access_set_count"] = mr.minimal_access_sets.size();
    if (mr.minimal_access_sets.size() <= 4096) {
        njson sets = njson::array();
        for (std::uint64_t mask : mr.minimal_access_sets) {
            njson one = njson::array();
            for (std::size_t i = 0; i < mr.participant_columns.size(); ++i)
                if (mask & (std::uint64_t(1) << i))
                    one.push_back(mr.participant_columns[i]);
            sets.push_back(one);
        }
        rep["minimal_access_sets"] = sets;
    } else {
        rep["minimal_access_sets_omitted"] =
            "more than 4096 sets; rerun with a smaller instance to list them";
    }
    rep["dictatorial_participants"] = mr.dictatorial;
    njson members = njson::array();
    for (std::size_t cnt : mr.per_participant_membership)
        members.push_back(cnt);
    rep["per_participant_membership"] = members;
    if (mr.code_is_minimal.has_value())
        rep["code_is_minimal"] = *mr.code_is_minimal;
    else
        rep["code_is_minimal"] = nullptr;

    write_json(rep, o.output);
    return 0;
}

void add_common(CLI::App* sub, CommonOpts& o, bool with_kind = true) {
    if (with_kind)
        sub->add_option("--kind", o.kind, "defining-set kind (S1..S4)");
    sub->add_option("--q", o.q, "field size (prime power in [2,256])");
    sub->add_option("--m", o.m, "ambient dimension");
    sub->add_option("--A", o.A, "support set A, 1-indexed")->delimiter(',');
    sub->add_option("--B", o.B, "support set B, 1-indexed")->delimiter(',');
    sub->add_option("--C", o.C, "support set C, 1-indexed")->delimiter(',');
    sub->add_option("--output", o.output, "output file (default stdout)");
    sub->add_option("--format", o.format,
                    "json | csv | matrix-text | edge-list");
    sub->add_option("--budget", o.budget,
                    "enumeration budget (codewords), default 2^30");
    sub->add_option("--threads", o.threads, "worker threads, default 1");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixed-alphabet defining-set codes over F_q[u]/(u^2)"};
    app.set_config("--config", "", "key=value config file");
    app.require_subcommand(1);

    CommonOpts o_construct, o_analyze, o_verify, o_sweep, o_graph, o_massey;
    std::vector<unsigned> sweep_q, sweep_m;
    std::vector<std::string> sweep_kinds = {"S1", "S2", "S3", "S4"};
    bool keep_going = false;
    unsigned g_m = 0, g_c = 1, g_ell = 3;
    bool g_shi = false;
    unsigned h0 = 0;

    auto* sc = app.add_subcommand("construct",
                                  "build spanning matrices for a defining set");
    add_common(sc, o_construct);

    auto* sa = app.add_subcommand("analyze",
                                  "measure the Lee distribution and certificates");
    add_common(sa, o_analyze);

    auto* sv = app.add_subcommand("verify",
                                  "compare measured distribution to the closed form");
    add_common(sv, o_verify);

    auto* sw = app.add_subcommand("sweep",
                                  "verify every instance in a parameter range");
    sw->add_option("--q", sweep_q, "field sizes")->delimiter(',');
    sw->add_option("--m", sweep_m, "ambient dimensions")->delimiter(',');
    sw->add_option("--kinds", sweep_kinds, "kinds to sweep (default all)")
        ->delimiter(',');
    sw->add_option("--output", o_sweep.output, "CSV output file");
    sw->add_option("--budget", o_sweep.budget, "enumeration budget");
    sw->add_option("--threads", o_sweep.threads, "worker threads");
    sw->add_flag("--keep-going", keep_going, "record failures and continue");

    auto* sg = app.add_subcommand("graph",
                                  "coset graph of the dual of a projective code");
    sg->add_flag("--shi", g_shi, "the three-weight family at q = 4");
    sg->add_option("--m", g_m, "ambient dimension (m >= 2)");
    sg->add_option("--c", g_c, "|C| parameter, default 1");
    sg->add_option("--ell", g_ell, "odd walk length >= 3, default 3");
    sg->add_option("--output", o_graph.output, "output file");
    sg->add_option("--format", o_graph.format, "json | edge-list");

    auto* sm = app.add_subcommand("massey",
                                  "secret-sharing access structure of the dual");
    add_common(sm, o_massey, /*with_kind=*/true);
    sm->add_option("--h0", h0, "defining column index for the secret, 0-indexed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (sc->parsed()) return cmd_construct(o_construct);
        if (sa->parsed()) return cmd_analyze(o_analyze);
        if (sv->parsed()) return cmd_verify(o_verify);
        if (sw->parsed())
            return cmd_sweep(sweep_q, sweep_m, sweep_kinds, o_sweep, keep_going);
        if (sg->parsed()) return cmd_graph(g_m, g_c, g_ell, g_shi, o_graph);
        if (sm->parsed()) return cmd_massey(o_massey, h0);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.code == errc::too_large || e.code == errc::overflow) return 3;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
