// Acceptance suite: one PASS/FAIL line per criterion; details for failures
// follow on indented lines.

#include "latgraph/dsl.hpp"
#include "latgraph/frames.hpp"
#include "latgraph/identify.hpp"
#include "latgraph/pipeline.hpp"
#include "latgraph/spectral.hpp"
#include "latgraph/steinercs.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace latgraph;

namespace {

struct Verdict {
    bool pass = true;
    std::string summary;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

bool has(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

std::vector<std::string> names_of(const Graph& g, const Rational& lambda) {
    return identify(graph_lattice(g, lambda)).names;
}

std::string joined(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
    return out.empty() ? "-" : out;
}

// 1 ------------------------------------------------------------------------
Verdict graph_table() {
    Verdict v;
    auto rows = table1_fixture();
    // the parametrised rows are also checked for several n
    for (std::size_t n = 1; n <= 6; ++n)
        if (n != 5) rows.push_back({"empty(" + std::to_string(n) + ")", 0, n, "Z" + std::to_string(n)});
    for (std::size_t n = 3; n <= 6; ++n)
        if (n != 5)
            rows.push_back({"complete(" + std::to_string(n) + ")", -1, n - 1, "A" + std::to_string(n - 1)});
    std::size_t ok = 0;
    for (const auto& o : check_rows(rows)) {
        ok += o.ok;
        v.require(o.ok, o.row.graph + " / " + to_string(o.row.eigenvalue) + ": " + o.diff);
    }
    v.summary = std::to_string(ok) + "/" + std::to_string(rows.size()) + " rows (14 table rows, K_n and Z^n at extra n)";
    return v;
}

// 2 ------------------------------------------------------------------------
Verdict johnson_table() {
    Verdict v;
    std::size_t ok = 0;
    auto outcomes = check_rows(table2_fixture(10));
    for (const auto& o : outcomes) {
        ok += o.ok;
        v.require(o.ok, o.row.graph + " / " + to_string(o.row.eigenvalue) + ": " + o.diff);
    }
    v.summary = std::to_string(ok) + "/" + std::to_string(outcomes.size()) + " rows of J(n,2), n = 4..10";
    return v;
}

// 3 ------------------------------------------------------------------------
Verdict products() {
    Verdict v;
    const Graph k3 = complete(3), c4 = cycle(4);
    auto check = [&](const Graph& g, const Rational& lambda, const std::string& want) {
        auto names = names_of(g, lambda);
        v.require(has(names, want), g.label() + " / " + to_string(lambda) + " -> " + joined(names) + ", expected " + want);
    };
    check(cartesian(k3, c4), -1, "A2_sum_A2");
    check(direct(k3, c4), 0, "Z6");
    check(strong(k3, c4), -1, "A2_sum_A2_sum_A2_sum_A2");
    Graph lex = lexicographic(k3, c4);
    RationalSpectrum s = rational_spectrum(lex);
    std::vector<RationalRoot> want{{10, 1}, {0, 6}, {-2, 5}};
    v.require(s.entries == want && s.residual_degree == 0, "lexicographic spectrum differs");
    check(lex, 0, "Z6");
    check(lex, -2, "A5_dual");
    v.summary = "cartesian, direct, strong and lexicographic products of K3 and C4";
    return v;
}

// 4 ------------------------------------------------------------------------
Verdict complements() {
    Verdict v;
    std::set<std::string> seen;
    std::size_t pairs = 0;
    for (const auto& row : table1_fixture()) {
        if (!seen.insert(row.graph).second) continue;
        Graph g = parse_graph(row.graph);
        Rational degree = static_cast<long>(g.degree(0));
        for (const auto& e : rational_spectrum(g).entries) {
            if (e.value == degree) continue;
            ++pairs;
            bool same = eigenprojection(complement(g), -e.value - 1).projection == eigenprojection(g, e.value).projection;
            v.require(same, row.graph + " / " + to_string(e.value));
        }
    }
    v.summary = std::to_string(pairs) + " projection pairs compared exactly";
    return v;
}

// 5 ------------------------------------------------------------------------
Verdict coherence_values() {
    Verdict v;
    auto a3 = catalog_build("An", {3});
    auto a3d = catalog_build("An_dual", {3});
    auto d6p = catalog_build("Dn_plus", {6});
    v.require(coherence_sq(a3) == Rational(1, 4), "C(A3)^2 = " + to_string(coherence_sq(a3)));
    v.require(coherence_sq(a3d) == Rational(1, 9), "C(A3*)^2 = " + to_string(coherence_sq(a3d)));
    v.require(coherence_sq(d6p) == Rational(1, 9), "C(D6+)^2 = " + to_string(coherence_sq(d6p)));
    v.require(d6p.minimal_vectors().min_norm_sq == Rational(3, 2), "|D6+|^2 = " + to_string(d6p.minimal_vectors().min_norm_sq));
    v.require(d6p.minimal_vectors().kissing_number() == 32, "kissing(D6+) = " + std::to_string(d6p.minimal_vectors().kissing_number()));
    for (long k = 2; k <= 6; ++k) {
        Rational c = coherence_sq(lattice_from_frame(simplex_etf(static_cast<std::size_t>(k))));
        v.require(c == make_rational(1, k * k), "simplex k=" + std::to_string(k) + ": C^2 = " + to_string(c));
    }
    v.summary = "A3, A3*, D6+ and simplex ETF lattices k = 2..6";
    return v;
}

// 6 ------------------------------------------------------------------------
Verdict rationality() {
    Verdict v;
    std::size_t frames = 0, lattices = 0;
    for (std::size_t k = 2; k <= 8; ++k, ++frames)
        v.require(verify_rationality_theorem(simplex_etf(k)).holds, "simplex k=" + std::to_string(k));
    std::vector<Lattice> corpus;
    for (const auto& row : table1_fixture()) {
        Graph g = parse_graph(row.graph);
        Frame f = graph_orbit_frame(g, row.eigenvalue);
        ++frames;
        v.require(verify_rationality_theorem(f).holds, "orbit frame " + row.graph + " / " + to_string(row.eigenvalue));
        v.require(lattice_from_frame(f).basis() == graph_lattice(g, row.eigenvalue).basis(),
                  "orbit lattice differs from graph lattice for " + row.graph);
        corpus.push_back(graph_lattice(g, row.eigenvalue));
    }
    for (const auto& row : table2_fixture(10)) corpus.push_back(graph_lattice(parse_graph(row.graph), row.eigenvalue));
    for (const auto& e : catalog()) corpus.push_back(catalog_lattice(e.name));
    corpus.push_back(Lattice::from_gram({{2, 0, 0}, {0, 2, 1}, {0, 1, 2}}, "Z+A2"));
    corpus.push_back(Lattice::from_gram({{3, 1}, {1, 3}}, "rhombic"));
    for (const auto& l : corpus) {
        ++lattices;
        bool strong = strong_eutaxy_check(l).kind == EutaxyKind::strong;
        v.require(strong == minimal_vectors_form_tight_frame(l), "eutaxy/tightness mismatch for " + l.provenance());
    }
    v.summary = std::to_string(frames) + " frames, " + std::to_string(lattices) + " lattices";
    return v;
}

// 7 ------------------------------------------------------------------------
Integer isqrt_floor(const Rational& q) {
    // largest z with z^2 <= q, q >= 0
    Integer z = sqrt(Integer(q.get_num() / q.get_den()));
    while (Rational((z + 1) * (z + 1)) <= q) ++z;
    while (Rational(z * z) > q) --z;
    return z;
}

std::vector<long> box_radius(const RationalMatrix& gram) {
    const std::size_t n = gram.rows();
    Rational m = gram(0, 0);
    for (std::size_t i = 1; i < n; ++i) m = std::min(m, gram(i, i));
    RationalMatrix inv = inverse(gram);
    std::vector<long> radius(n);
    for (std::size_t i = 0; i < n; ++i) radius[i] = isqrt_floor(m * inv(i, i)).get_si();
    return radius;
}

std::set<IntegerVector> box_minimal(const RationalMatrix& gram, Rational& min_out) {
    const std::size_t n = gram.rows();
    Rational m = gram(0, 0);
    for (std::size_t i = 1; i < n; ++i) m = std::min(m, gram(i, i));
    const std::vector<long> radius = box_radius(gram);
    std::set<IntegerVector> best;
    IntegerVector x(n);
    std::vector<long> cur(n);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == n) {
            bool zero = std::all_of(cur.begin(), cur.end(), [](long c) { return c == 0; });
            if (zero) return;
            for (std::size_t k = 0; k < n; ++k) x[k] = cur[k];
            Rational norm = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) norm += gram(a, b) * x[a] * x[b];
            if (norm < m) {
                m = norm;
                best.clear();
            }
            if (norm == m) best.insert(x);
            return;
        }
        for (long c = -radius[i]; c <= radius[i]; ++c) {
            cur[i] = c;
            walk(i + 1);
        }
    };
    walk(0);
    min_out = m;
    return best;
}

Integer minor_gcd(const RationalMatrix& m, std::size_t r) {
    Integer g = 0;
    std::vector<std::size_t> rows(r), cols(r);
    std::function<void(std::size_t, std::size_t)> pick_cols;
    std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t i, std::size_t from) {
        if (i == r) {
            pick_cols(0, 0);
            return;
        }
        for (std::size_t a = from; a < m.rows(); ++a) {
            rows[i] = a;
            pick_rows(i + 1, a + 1);
        }
    };
    pick_cols = [&](std::size_t i, std::size_t from) {
        if (i == r) {
            RationalMatrix sub(r, r);
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = 0; b < r; ++b) sub(a, b) = m(rows[a], cols[b]);
            g = gcd(g, Integer(determinant(sub).get_num()));
            return;
        }
        for (std::size_t b = from; b < m.cols(); ++b) {
            cols[i] = b;
            pick_cols(i + 1, b + 1);
        }
    };
    pick_rows(0, 0);
    return abs(g);
}

Verdict brute_force() {
    Verdict v;
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> entry(-3, 3), den(1, 4), rk(1, 4);
    std::size_t lattices = 0;
    while (lattices < 25) {
        const std::size_t n = static_cast<std::size_t>(rk(rng));
        RationalMatrix b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b(i, j) = make_rational(entry(rng), den(rng));
        if (determinant(b) == 0) continue;
        RationalMatrix gram = b.transpose() * b;
        double points = 1;
        for (long r : box_radius(gram)) points *= static_cast<double>(2 * r + 1);
        if (points > 2e6) continue;  // box too large for exhaustive search
        ++lattices;
        Rational oracle_min;
        auto oracle = box_minimal(gram, oracle_min);
        Lattice l = Lattice::from_gram(gram, "random");
        const auto& mv = l.minimal_vectors();
        std::set<IntegerVector> got(mv.vectors.begin(), mv.vectors.end());
        v.require(mv.min_norm_sq == oracle_min && got == oracle,
                  "lattice " + std::to_string(lattices) + " (rank " + std::to_string(n) + ") disagrees with box search");
    }
    std::size_t sets = 0;
    std::uniform_int_distribution<int> dim(1, 4), count(1, 6), small(-4, 4);
    for (; sets < 100; ++sets) {
        const std::size_t d = static_cast<std::size_t>(dim(rng)), m = static_cast<std::size_t>(count(rng));
        std::vector<RationalVector> gens(m, RationalVector(d));
        for (auto& g : gens)
            for (auto& x : g) x = small(rng);
        RationalMatrix gm = RationalMatrix::from_columns(gens, d);
        const std::size_t r = rank(gm);
        if (r == 0) {
            --sets;
            continue;
        }
        RationalMatrix h = hnf_column_basis(gens, d);
        bool ok = h.cols() == r && h.is_integral();
        // every generator is an integral combination of the HNF columns
        RationalMatrix ht = h.transpose();
        RationalMatrix coeff = solve(ht * h, ht * gm);
        ok = ok && coeff.is_integral() && h * coeff == gm;
        // equal gcd of maximal minors closes the index to 1
        ok = ok && minor_gcd(gm, r) == minor_gcd(h, r);
        v.require(ok, "generating set " + std::to_string(sets) + " (dim " + std::to_string(d) + ", " +
                          std::to_string(m) + " vectors)");
    }
    v.summary = std::to_string(lattices) + " random lattices vs box search, " + std::to_string(sets) + " HNF span checks";
    return v;
}

// 8 ------------------------------------------------------------------------
Verdict sparse_recovery() {
    Verdict v;
    struct Case {
        std::size_t sts;
        std::vector<std::size_t> sparsities;
    };
    std::ostringstream detail;
    for (const Case& c : {Case{7, {1, 2, 3, 4, 5, 6}}, Case{15, {1, 2, 4, 6, 8, 10, 12, 14, 16}}}) {
        MeasurementMatrix m = steiner_etf(steiner_triple_system(c.sts));
        const std::string tag = "STS(" + std::to_string(c.sts) + ") ";
        v.require(std::fabs(m.coherence - welch_bound(m.rows(), m.cols())) < 1e-9, tag + "(a) Welch bound not met");

        ExperimentConfig cfg;
        cfg.sparsities = c.sparsities;
        cfg.trials = 500;
        cfg.noise_norm = 0.1;
        auto rows = run_experiment(m, cfg);
        std::map<std::pair<std::size_t, std::string>, ExperimentRow> at;
        for (const auto& r : rows) at[{r.sparsity, r.method}] = r;
        for (std::size_t i = 1; i < c.sparsities.size(); ++i) {
            double prev = at[{c.sparsities[i - 1], "OMP"}].success_rate, cur = at[{c.sparsities[i], "OMP"}].success_rate;
            v.require(cur <= prev, tag + "(b) OMP rate rises at s=" + std::to_string(c.sparsities[i]));
        }
        for (std::size_t s : c.sparsities) {
            double p = at[{s, "PrOMP"}].success_rate, o = at[{s, "OMP"}].success_rate;
            std::ostringstream line;
            line << tag << "(c) s=" << s << ": PrOMP " << p << " < OMP " << o;
            v.require(p >= o, line.str());
        }
        double ht = at[{1, "HT"}].mean_error, omp = at[{1, "OMP"}].mean_error;
        v.require(ht >= omp, tag + "(d) HT error below OMP error at s=1");
        detail << tag << m.rows() << "x" << m.cols() << " ";
    }
    v.summary = detail.str() + "500 trials per sparsity";
    return v;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        Verdict (*run)();
    };
    const Criterion criteria[] = {
        {1, "vertex-transitive graph table", graph_table},
        {2, "Johnson graph table", johnson_table},
        {3, "product graph lattices", products},
        {4, "complement eigenprojections", complements},
        {5, "coherence values", coherence_values},
        {6, "rationality identity and eutaxy/tightness equivalence", rationality},
        {7, "brute-force oracles for minimal vectors and HNF", brute_force},
        {8, "Steiner ETF sparse recovery", sparse_recovery},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.pass = false;
            v.summary = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " [" << v.summary
                  << "] " << std::fixed << std::setprecision(2) << secs << "s\n";
        std::cout.unsetf(std::ios::fixed);
        std::cout << std::setprecision(6);
        for (const auto& n : v.notes) std::cout << "        " << n << "\n";
        failed += !v.pass;
    }
    std::cout << (8 - failed) << "/8 criteria passed\n";
    return failed ? 1 : 0;
}
