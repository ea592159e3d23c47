#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latgraph/identify.hpp"
#include "latgraph/spectral.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>

using namespace latgraph;

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

std::vector<IntegerVector> random_unimodular(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(-2, 2);
    std::vector<IntegerVector> u(n, IntegerVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
    for (int op = 0; op < 3 * static_cast<int>(n); ++op) {
        std::size_t a = rng() % n, b = rng() % n;
        if (a == b) continue;
        int q = d(rng);
        for (std::size_t i = 0; i < n; ++i) u[a][i] += q * u[b][i];
    }
    return u;
}

void check_witness(const Lattice& l1, const Lattice& l2, const SimilarityResult& r) {
    REQUIRE(r.status == SimilarityStatus::similar);
    const std::size_t n = l1.rank();
    RationalMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(i, j) = r.witness[i][j];
    CHECK(t.transpose() * (l2.gram() * r.scale_sq) * t == l1.gram());
    Rational d = determinant(t);
    CHECK((d == 1 || d == -1));
}

}  // namespace

TEST_CASE("catalog constructions") {
    auto a52 = catalog_build("An_r", {5, 2});
    auto a5 = catalog_build("An", {5});
    CHECK(a52.rank() == 5);
    // A5 sits inside A5^2 with index 2: det ratio 4
    CHECK(a5.determinant() / a52.determinant() == 4);
    auto d6p = catalog_build("Dn_plus", {6});
    CHECK(d6p.minimal_vectors().min_norm_sq == Rational(3, 2));
    CHECK(d6p.minimal_vectors().kissing_number() == 32);
    CHECK(is_similar(catalog_build("An", {1}), catalog_build("Zn", {1})).status == SimilarityStatus::similar);
    CHECK_THROWS_AS(catalog_build("Dn_plus", {5}), std::invalid_argument);
    CHECK_THROWS_AS(catalog_build("An_r", {5, 4}), std::invalid_argument);
    CHECK_THROWS_AS(catalog_build("Q7"), std::invalid_argument);

    auto e8 = catalog_build("E8");
    CHECK(e8.determinant() == 1);
    CHECK(e8.minimal_vectors().kissing_number() == 240);
    auto e7 = catalog_build("E7");
    CHECK(e7.rank() == 7);
    CHECK(e7.determinant() == 2);
    CHECK(e7.minimal_vectors().kissing_number() == 126);
    auto e6 = catalog_build("E6");
    CHECK(e6.rank() == 6);
    CHECK(e6.determinant() == 3);
    CHECK(e6.minimal_vectors().kissing_number() == 72);
    CHECK(catalog_build("E7_dual").minimal_vectors().kissing_number() == 56);
    CHECK(catalog_build("E6_dual").minimal_vectors().kissing_number() == 54);
}

TEST_CASE("every catalog entry builds and has the declared rank") {
    for (const auto& e : catalog()) {
        CAPTURE(e.name);
        auto l = catalog_lattice(e.name);
        CHECK(l.rank() == e.rank);
        CHECK(catalog_fingerprint(e.name).rank == e.rank);
    }
}

TEST_CASE("similarity search") {
    auto p1 = graph_lattice(petersen(), 1);
    auto a52 = catalog_build("An_r", {5, 2});
    check_witness(p1, a52, is_similar(p1, a52));
    CHECK(is_similar(catalog_build("Zn", {2}), catalog_build("An", {2})).status == SimilarityStatus::not_similar);
    auto a4 = catalog_build("An", {4});
    auto self = is_similar(a4, a4);
    check_witness(a4, a4, self);
    CHECK(self.scale_sq == 1);
    // D4 is similar to its dual, A3 is not similar to its dual
    check_witness(catalog_build("Dn", {4}), catalog_build("Dn_dual", {4}),
                  is_similar(catalog_build("Dn", {4}), catalog_build("Dn_dual", {4})));
    CHECK(is_similar(catalog_build("An", {3}), catalog_build("An_dual", {3})).status == SimilarityStatus::not_similar);
    // alias relations among catalog lattices
    check_witness(catalog_build("E7_dual"), catalog_build("An_r", {7, 4}),
                  is_similar(catalog_build("E7_dual"), catalog_build("An_r", {7, 4})));
    check_witness(catalog_build("E8"), catalog_build("An_r", {8, 3}),
                  is_similar(catalog_build("E8"), catalog_build("An_r", {8, 3})));
}

TEST_CASE("similarity is an equivalence relation on catalog triples") {
    std::mt19937 rng(17);
    std::vector<std::string> names{"A4_dual", "A5^2", "D5_dual", "D6_plus", "A2_tensor_A2"};
    for (const auto& name : names) {
        CAPTURE(name);
        Lattice a = catalog_lattice(name);
        Lattice b = scaled(change_basis(a, random_unimodular(rng, a.rank())), 5);
        Lattice c = scaled(change_basis(a, random_unimodular(rng, a.rank())), Rational(1, 3));
        check_witness(a, a, is_similar(a, a));
        check_witness(a, b, is_similar(a, b));
        check_witness(b, a, is_similar(b, a));
        check_witness(b, c, is_similar(b, c));
        check_witness(a, c, is_similar(a, c));
    }
    // non-similar pairs stay non-similar in both directions
    for (auto [x, y] : std::vector<std::pair<std::string, std::string>>{{"A4", "A4_dual"}, {"D5", "D5_dual"}, {"Z4", "D4"}}) {
        CHECK(is_similar(catalog_lattice(x), catalog_lattice(y)).status == SimilarityStatus::not_similar);
        CHECK(is_similar(catalog_lattice(y), catalog_lattice(x)).status == SimilarityStatus::not_similar);
    }
}

TEST_CASE("fingerprints are invariant under unimodular change and scaling") {
    std::mt19937 rng(23);
    for (const auto& name : {"A2", "A3_dual", "D4", "A5^3", "E6_dual", "D6_plus"}) {
        CAPTURE(name);
        Lattice l = catalog_lattice(name);
        auto f = fingerprint(l);
        for (int rep = 0; rep < 3; ++rep) {
            Rational s(static_cast<long>(rng() % 7 + 1), static_cast<long>(rng() % 5 + 1));
            s.canonicalize();
            CHECK(fingerprint(scaled(change_basis(l, random_unimodular(rng, l.rank())), s)) == f);
        }
    }
}

TEST_CASE("identification of graph lattices") {
    struct Row { Graph g; Rational lambda; std::string name; };
    std::vector<Row> rows{
        {clebsch(), -3, "D5_dual"},
        {gosset(), 9, "E7_dual"},
        {johnson(8, 2), 4, "E7_dual"},
        {petersen(), -2, "A4_dual"},
        {petersen(), 1, "A5^2"},
        {shrikhande(), 2, "D6_plus"},
        {schlafli(), 4, "E6_dual"},
        {hamming(2, 3), 1, "A2_tensor_A2"},
        {empty_graph(5), 0, "Z5"},
        {complete(3), -1, "A2"},
    };
    for (const auto& r : rows) {
        CAPTURE(r.g.label());
        auto id = identify(graph_lattice(r.g, r.lambda));
        CHECK(id.certified);
        CHECK(contains(id.names, r.name));
    }
    auto e7 = identify(graph_lattice(gosset(), 9));
    CHECK(e7.names == std::vector<std::string>{"E7_dual"});  // A7^4 alias sits in a higher tier
}

TEST_CASE("complement projections coincide at -lambda-1") {
    for (const Graph& g : {petersen(), clebsch(), shrikhande(), schlafli()}) {
        CAPTURE(g.label());
        auto spectrum = rational_spectrum(g);
        Rational degree = static_cast<long>(g.degree(0));
        for (const auto& e : spectrum.entries) {
            if (e.value == degree) continue;
            CHECK(eigenprojection(complement(g), -e.value - 1).projection == eigenprojection(g, e.value).projection);
        }
    }
    // the complement of Petersen is J(5,2), so both identify alike
    CHECK(identify(graph_lattice(complement(petersen()), -2)).names ==
          identify(graph_lattice(johnson(5, 2), -2)).names);
}

TEST_CASE("identification report JSON") {
    IdentificationReport r{"petersen", -2, 4, "A4_dual", true};
    auto j = nlohmann::json::parse(to_json(r));
    CHECK(j["graph"] == "petersen");
    CHECK(j["eigenvalue"] == "-2");
    CHECK(j["multiplicity"] == 4);
    CHECK(j["lattice_name"] == "A4_dual");
    CHECK(j["certified"] == true);
}
