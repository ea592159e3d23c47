#include "latgraph/pipeline.hpp"

#include "latgraph/dsl.hpp"
#include "latgraph/spectral.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace latgraph {

namespace {

using ojson = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

ojson to_ojson(const LatticeRecord& r) {
    ojson j;
    j["rank"] = r.rank;
    j["min_norm_sq"] = to_string(r.min_norm_sq);
    j["kissing"] = r.kissing;
    j["strongly_eutactic"] = r.strongly_eutactic;
    j["perfect"] = r.perfect;
    j["coherence_sq"] = r.coherence_sq ? ojson(to_string(*r.coherence_sq)) : ojson(nullptr);
    j["names"] = r.names;
    j["fingerprint_only"] = r.fingerprint_only;
    j["certified"] = r.certified;
    return j;
}

ojson to_ojson(const EigenRecord& r) {
    ojson j;
    j["eigenvalue"] = to_string(r.eigenvalue);
    j["multiplicity"] = r.multiplicity;
    j["lattice"] = to_ojson(r.lattice);
    return j;
}

std::string bool_mark(bool b) { return b ? "yes" : "no"; }

std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) w[c] = header[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c + 1 < r.size())
                out << std::left << std::setw(static_cast<int>(w[c])) << r[c] << "  ";
            else
                out << r[c];
        }
        out << '\n';
    };
    line(header);
    std::vector<std::string> rule;
    for (auto x : w) rule.push_back(std::string(x, '-'));
    line(rule);
    for (const auto& r : rows) line(r);
    return out.str();
}

std::string lattice_label(const LatticeRecord& r) {
    if (!r.names.empty()) return join(r.names, " ~ ");
    if (!r.fingerprint_only.empty()) return "? " + join(r.fingerprint_only, " | ");
    return "-";
}

}  // namespace

LatticeRecord describe_lattice(const Lattice& l, bool with_identify) {
    LatticeRecord r;
    const auto& mv = l.minimal_vectors();
    r.rank = l.rank();
    r.min_norm_sq = mv.min_norm_sq;
    r.kissing = mv.kissing_number();
    r.strongly_eutactic = strong_eutaxy_check(l).kind == EutaxyKind::strong;
    r.perfect = perfection_check(l);
    if (r.rank >= 2) r.coherence_sq = coherence_sq(l);
    if (with_identify) {
        Identification id = identify(l);
        r.names = id.names;
        r.fingerprint_only = id.fingerprint_only;
        r.certified = id.certified;
    }
    return r;
}

PipelineReport run_pipeline(const Graph& g, const PipelineOptions& options) {
    const auto t0 = std::chrono::steady_clock::now();
    PipelineReport rep;
    rep.graph = g.label();
    rep.vertices = g.order();
    rep.vertex_transitive = vertex_transitivity_witness(g).status == TransitivityStatus::witness;
    if (is_connected(g))
        if (auto a = is_distance_regular(g)) rep.intersection_array = to_string(*a);
    RationalSpectrum spectrum = rational_spectrum(g);
    rep.irrational_multiplicity = spectrum.residual_degree;
    bool found = false;
    for (const auto& e : spectrum.entries) {
        if (options.eigenvalue && *options.eigenvalue != e.value) continue;
        found = true;
        EigenRecord rec;
        rec.eigenvalue = e.value;
        rec.multiplicity = static_cast<std::size_t>(e.multiplicity);
        rec.lattice = describe_lattice(graph_lattice(g, e.value), options.identify);
        rep.records.push_back(std::move(rec));
    }
    if (options.eigenvalue && !found)
        throw std::invalid_argument(to_string(*options.eigenvalue) + " is not a rational eigenvalue of " + g.label());
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string report_json(const PipelineReport& r) {
    ojson j;
    j["graph"] = r.graph;
    j["vertices"] = r.vertices;
    j["vertex_transitive"] = r.vertex_transitive;
    j["intersection_array"] = r.intersection_array.empty() ? ojson(nullptr) : ojson(r.intersection_array);
    j["irrational_multiplicity"] = r.irrational_multiplicity;
    j["records"] = ojson::array();
    for (const auto& rec : r.records) j["records"].push_back(to_ojson(rec));
    j["seconds"] = r.seconds;
    return j.dump(2);
}

std::string report_table(const PipelineReport& r) {
    std::ostringstream out;
    out << r.graph << ": " << r.vertices << " vertices, vertex-transitive " << bool_mark(r.vertex_transitive)
        << ", distance-regular " << (r.intersection_array.empty() ? "no" : r.intersection_array) << '\n';
    std::vector<std::vector<std::string>> rows;
    for (const auto& rec : r.records) {
        const auto& l = rec.lattice;
        rows.push_back({to_string(rec.eigenvalue), std::to_string(rec.multiplicity), std::to_string(l.rank),
                        to_string(l.min_norm_sq), std::to_string(l.kissing), bool_mark(l.strongly_eutactic),
                        bool_mark(l.perfect), l.coherence_sq ? to_string(*l.coherence_sq) : "-", lattice_label(l)});
    }
    out << table({"lambda", "mult", "rank", "min", "kissing", "strong", "perfect", "coh^2", "lattice"}, rows);
    if (r.irrational_multiplicity) out << "irrational eigenvalues: total multiplicity " << r.irrational_multiplicity << '\n';
    return out.str();
}

std::vector<TableRow> table1_fixture() {
    return {
        {"empty(5)", 0, 5, "Z5"},
        {"complete(5)", -1, 4, "A4"},
        {"hamming(2,3)", 1, 4, "A2_tensor_A2"},
        {"petersen", -2, 4, "A4_dual"},
        {"petersen", 1, 5, "A5^2"},
        {"line_graph(petersen)", -1, 4, "A4_dual"},
        {"line_graph(petersen)", -2, 5, "A5^3"},
        {"clebsch", -3, 5, "D5_dual"},
        {"complement(clebsch)", 2, 5, "D5_dual"},
        {"shrikhande", 2, 6, "D6_plus"},
        {"complement(shrikhande)", -3, 6, "D6_plus"},
        {"schlafli", 4, 6, "E6_dual"},
        {"complement(schlafli)", -5, 6, "E6_dual"},
        {"gosset", 9, 7, "E7_dual"},
    };
}

std::vector<TableRow> table2_fixture(std::size_t n_max) {
    if (n_max < 4 || n_max > 10) throw std::invalid_argument("table2 supports 4 <= n_max <= 10");
    static const char* first[] = {"Z3", "A4_dual", "A5^3", "A6_dual", "E7_dual", "A8_dual", "A9^5"};
    std::vector<TableRow> rows;
    for (std::size_t n = 4; n <= n_max; ++n) {
        const std::string g = "johnson(" + std::to_string(n) + ",2)";
        const long nn = static_cast<long>(n);
        rows.push_back({g, nn - 4, n - 1, first[n - 4], n - 1, true});
        std::string second = n == 4 ? "A2" : n == 5 ? "A5^2" : "";
        rows.push_back({g, -2, n * (n - 3) / 2, second, n * (n - 3) / 2, true});
    }
    return rows;
}

RowOutcome check_row(const TableRow& row) {
    RowOutcome out;
    out.row = row;
    Graph g = parse_graph(row.graph);
    PipelineOptions opt;
    opt.eigenvalue = row.eigenvalue;
    opt.identify = !row.expected.empty();
    std::vector<std::string> diffs;
    try {
        PipelineReport rep = run_pipeline(g, opt);
        out.record = rep.records.front();
    } catch (const std::invalid_argument& e) {
        out.diff = e.what();
        return out;
    }
    const auto& l = out.record.lattice;
    if (out.record.multiplicity != row.multiplicity)
        diffs.push_back("multiplicity " + std::to_string(out.record.multiplicity) + " != " + std::to_string(row.multiplicity));
    if (row.expected_rank && l.rank != row.expected_rank)
        diffs.push_back("rank " + std::to_string(l.rank) + " != " + std::to_string(row.expected_rank));
    if (!row.expected.empty() &&
        (!l.certified || std::find(l.names.begin(), l.names.end(), row.expected) == l.names.end()))
        diffs.push_back("identified " + lattice_label(l) + ", expected " + row.expected);
    if (row.expect_strong && !l.strongly_eutactic) diffs.push_back("not strongly eutactic");
    out.diff = join(diffs, "; ");
    out.ok = diffs.empty();
    return out;
}

std::vector<RowOutcome> check_rows(const std::vector<TableRow>& rows) {
    std::vector<RowOutcome> out;
    for (const auto& r : rows) out.push_back(check_row(r));
    return out;
}

std::string outcomes_json(const std::vector<RowOutcome>& rows) {
    ojson j = ojson::array();
    for (const auto& o : rows) {
        ojson r;
        r["graph"] = o.row.graph;
        r["eigenvalue"] = to_string(o.row.eigenvalue);
        r["expected_multiplicity"] = o.row.multiplicity;
        r["expected_lattice"] = o.row.expected.empty() ? ojson(nullptr) : ojson(o.row.expected);
        r["record"] = to_ojson(o.record);
        r["ok"] = o.ok;
        r["diff"] = o.diff;
        j.push_back(r);
    }
    return j.dump(2);
}

std::string outcomes_table(const std::vector<RowOutcome>& rows) {
    std::vector<std::vector<std::string>> body;
    for (const auto& o : rows) {
        const auto& l = o.record.lattice;
        std::string expected = o.row.expected.empty() ? "rank " + std::to_string(o.row.expected_rank) : o.row.expected;
        body.push_back({o.row.graph, to_string(o.row.eigenvalue), std::to_string(o.record.multiplicity),
                        std::to_string(l.rank), bool_mark(l.strongly_eutactic), expected, lattice_label(l),
                        o.ok ? "ok" : "DIFF: " + o.diff});
    }
    return table({"graph", "lambda", "mult", "rank", "strong", "expected", "found", "status"}, body);
}

FrameReport analyze_frame(const Frame& f) {
    FrameReport r;
    r.rational = true;
    r.tightness = analyze(f);
    r.lattice = describe_lattice(lattice_from_frame(f));
    if (r.tightness->is_tight) r.rationality_identity = verify_rationality_theorem(f).holds;
    r.message = r.tightness->is_tight ? "tight rational frame; its span is a lattice"
                                      : "rational frame, not tight; its span is a lattice";
    return r;
}

FrameReport analyze_numeric_frame(const NumericFrame& f) {
    NumericRationality q = is_rational_frame(f);
    if (q.rational) {
        if (auto exact = reconstruct_frame(f)) {
            FrameReport r = analyze_frame(*exact);
            r.message += " (reconstructed from decimals)";
            return r;
        }
    }
    FrameReport r;
    r.rational = false;
    r.discreteness = detect_non_discreteness(f.columns);
    r.message = q.rational ? "Gram ratios are rational but no exact representative was recovered"
                           : "not rational; a tight frame with this Gram cannot span a lattice (" + q.reason + ")";
    return r;
}

std::string frame_report_json(const FrameReport& r) {
    ojson j;
    j["rational"] = r.rational;
    j["message"] = r.message;
    if (r.tightness) {
        const auto& t = *r.tightness;
        j["tight"] = t.is_tight;
        j["gamma"] = t.is_tight ? ojson(to_string(t.gamma)) : ojson(nullptr);
        j["uniform"] = t.is_uniform;
        j["equiangular"] = t.is_equiangular;
        j["coherence_sq"] = to_string(t.coherence_sq);
    }
    if (r.lattice) j["lattice"] = to_ojson(*r.lattice);
    if (r.rationality_identity) j["rationality_identity"] = *r.rationality_identity;
    if (r.discreteness) {
        j["discreteness"] = {
            {"verdict", r.discreteness->verdict == DiscretenessVerdict::likely_non_discrete ? "likely non-discrete"
                                                                                            : "no evidence"},
            {"initial_min_norm", r.discreteness->initial_min_norm},
            {"smallest_norm", r.discreteness->smallest_norm},
            {"iterations", r.discreteness->iterations}};
    }
    return j.dump(2);
}

std::string lattice_record_json(const LatticeRecord& r) { return to_ojson(r).dump(2); }

}  // namespace latgraph
