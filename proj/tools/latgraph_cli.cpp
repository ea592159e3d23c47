#include "latgraph/dsl.hpp"
#include "latgraph/pipeline.hpp"
#include "latgraph/steinercs.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace latgraph;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int table_command(const std::vector<TableRow>& rows, bool json) {
    auto outcomes = check_rows(rows);
    std::cout << (json ? outcomes_json(outcomes) + "\n" : outcomes_table(outcomes));
    std::size_t bad = 0;
    for (const auto& o : outcomes) bad += !o.ok;
    if (!json) std::cout << (rows.size() - bad) << "/" << rows.size() << " rows match\n";
    return bad ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattices from graph eigenspaces, tight frames and sparse recovery"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Machine-readable output");

    auto* gl = app.add_subcommand("graph-lattice", "Full pipeline for one graph");
    std::string expr, eigen;
    bool no_identify = false;
    gl->add_option("graph", expr, "Graph expression")->required();
    gl->add_option("--eigenvalue", eigen, "Only this eigenvalue (p or p/q)");
    gl->add_flag("--no-identify", no_identify, "Skip catalog identification");
    gl->footer(graph_dsl_help());

    auto* t1 = app.add_subcommand("table1", "Regenerate the vertex-transitive graph table and diff it");
    auto* t2 = app.add_subcommand("table2", "Regenerate the Johnson graph table and diff it");
    std::size_t n_max = 7;
    t2->add_option("--n-max", n_max, "Largest n of J(n,2), at most 10")->capture_default_str();

    auto* fr = app.add_subcommand("frame", "Analyse a frame file");
    std::string frame_file;
    bool numeric = false;
    fr->add_option("file", frame_file, "CSV file, '-' for stdin")->required();
    fr->add_flag("--numeric", numeric, "Decimal entries instead of p/q rationals with a scale_sq line");

    auto* cs = app.add_subcommand("cs", "Sparse recovery experiment on a Steiner ETF");
    std::size_t sts = 7;
    ExperimentConfig cfg;
    std::string out_file;
    bool gnuplot = false;
    cs->add_option("--sts", sts, "Steiner triple system order")->capture_default_str();
    cs->add_option("--trials", cfg.trials, "Trials per sparsity")->capture_default_str();
    cs->add_option("--noise", cfg.noise_norm, "Noise norm for the error table")->capture_default_str();
    cs->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
    cs->add_option("--max-amp", cfg.max_amplitude, "Largest signal amplitude")->capture_default_str();
    cs->add_option("--sparsities", cfg.sparsities, "Sparsity levels")->delimiter(',')->capture_default_str();
    cs->add_option("--out", out_file, "Write the table here instead of stdout");
    cs->add_flag("--gnuplot", gnuplot, "Whitespace-separated columns per method");

    auto* ig = app.add_subcommand("identify-gram", "Identify a lattice given by a Gram matrix");
    std::string gram_file;
    ig->add_option("file", gram_file, "Gram file (rank line, then rows of p/q), '-' for stdin")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gl) {
            PipelineOptions opt;
            if (!eigen.empty()) opt.eigenvalue = parse_rational(eigen);
            opt.identify = !no_identify;
            PipelineReport rep = run_pipeline(parse_graph(expr), opt);
            std::cout << (json ? report_json(rep) + "\n" : report_table(rep));
            return 0;
        }
        if (*t1) return table_command(table1_fixture(), json);
        if (*t2) return table_command(table2_fixture(n_max), json);
        if (*fr) {
            const std::string text = slurp(frame_file);
            FrameReport r = numeric ? analyze_numeric_frame(read_numeric_frame_csv(text)) : analyze_frame(read_frame_csv(text));
            if (json) {
                std::cout << frame_report_json(r) << "\n";
            } else {
                std::cout << r.message << "\n";
                if (r.tightness)
                    std::cout << "tight " << (r.tightness->is_tight ? "yes" : "no") << ", uniform "
                              << (r.tightness->is_uniform ? "yes" : "no") << ", equiangular "
                              << (r.tightness->is_equiangular ? "yes" : "no") << ", coherence^2 "
                              << to_string(r.tightness->coherence_sq) << "\n";
                if (r.lattice) {
                    std::cout << "lattice rank " << r.lattice->rank << ", min " << to_string(r.lattice->min_norm_sq)
                              << ", kissing " << r.lattice->kissing << ", identified "
                              << (r.lattice->names.empty() ? std::string("-") : r.lattice->names.front()) << "\n";
                }
                if (r.rationality_identity)
                    std::cout << "rationality identity " << (*r.rationality_identity ? "holds" : "FAILS") << "\n";
                if (r.discreteness)
                    std::cout << "reduction: "
                              << (r.discreteness->verdict == DiscretenessVerdict::likely_non_discrete ? "likely non-discrete"
                                                                                                      : "no evidence")
                              << " (smallest norm " << r.discreteness->smallest_norm << ")\n";
            }
            return 0;
        }
        if (*cs) {
            MeasurementMatrix m = steiner_etf(steiner_triple_system(sts));
            auto rows = run_experiment(m, cfg);
            std::string text;
            if (json) {
                text = experiment_json(rows, cfg, m) + "\n";
            } else if (gnuplot) {
                std::ostringstream g;
                g << "# sparsity LS_rate HT_rate OMP_rate PrOMP_rate LS_err HT_err OMP_err PrOMP_err\n";
                for (std::size_t i = 0; i + 3 < rows.size(); i += 4) {
                    g << rows[i].sparsity;
                    for (int k = 0; k < 4; ++k) g << ' ' << rows[i + k].success_rate;
                    for (int k = 0; k < 4; ++k) g << ' ' << rows[i + k].mean_error;
                    g << '\n';
                }
                text = g.str();
            } else {
                text = experiment_csv(rows);
            }
            if (out_file.empty()) {
                std::cout << text;
            } else {
                std::ofstream(out_file) << text;
            }
            return 0;
        }
        if (*ig) {
            Lattice l = Lattice::from_gram(read_gram(slurp(gram_file)), "gram");
            LatticeRecord r = describe_lattice(l);
            if (json) {
                std::cout << lattice_record_json(r) << "\n";
            } else {
                std::cout << "rank " << r.rank << ", min " << to_string(r.min_norm_sq) << ", kissing " << r.kissing
                          << ", strongly eutactic " << (r.strongly_eutactic ? "yes" : "no") << ", perfect "
                          << (r.perfect ? "yes" : "no") << "\n";
                std::cout << "identified: ";
                for (std::size_t i = 0; i < r.names.size(); ++i) std::cout << (i ? ", " : "") << r.names[i];
                std::cout << (r.names.empty() ? "-" : "") << "\n";
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
