#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latgraph/spectral.hpp"

using namespace latgraph;

namespace {

void check_spectrum(const Graph& g, std::vector<RationalRoot> expected) {
    CAPTURE(g.label());
    auto s = rational_spectrum(g);
    CHECK(s.residual_degree == 0);
    CHECK(s.entries == expected);
}

}  // namespace

TEST_CASE("hand-computed spectra") {
    check_spectrum(petersen(), {{3, 1}, {1, 5}, {-2, 4}});
    check_spectrum(clebsch(), {{5, 1}, {1, 10}, {-3, 5}});
    check_spectrum(shrikhande(), {{6, 1}, {2, 6}, {-2, 9}});
    check_spectrum(schlafli(), {{16, 1}, {4, 6}, {-2, 20}});
    check_spectrum(gosset(), {{27, 1}, {9, 7}, {-1, 27}, {-3, 21}});
    check_spectrum(complete(5), {{4, 1}, {-1, 4}});
    check_spectrum(johnson(7, 2), {{10, 1}, {3, 6}, {-2, 14}});
    check_spectrum(hamming(3, 2), {{3, 1}, {1, 3}, {-1, 3}, {-3, 1}});
}

TEST_CASE("irrational eigenvalues are reported as residual degree") {
    auto s = rational_spectrum(cycle(5));  // 2, (-1 +- sqrt5)/2 twice each
    CHECK(s.entries == std::vector<RationalRoot>{{2, 1}});
    CHECK(s.residual_degree == 4);
}

TEST_CASE("eigenprojection is an orthogonal projection onto the eigenspace") {
    for (auto [g, lambda] : std::vector<std::pair<Graph, Rational>>{
             {petersen(), 1}, {petersen(), -2}, {clebsch(), -3}, {complete(4), -1}, {gosset(), 9}}) {
        CAPTURE(g.label());
        auto p = eigenprojection(g, lambda);
        const auto& m = p.projection;
        CHECK(m.is_symmetric());
        CHECK(m * m == m);
        CHECK(m.trace() == Rational(static_cast<long>(p.multiplicity())));
        RationalMatrix a = g.adjacency_matrix();
        CHECK(a * m == m * lambda);
    }
    CHECK(eigenprojection(complete(4), -1).projection ==
          RationalMatrix::identity(4) - RationalMatrix{{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}} *
                                            Rational(1, 4));
    CHECK_THROWS_AS(eigenprojection(petersen(), 2), std::invalid_argument);
}

TEST_CASE("complement eigenprojections agree away from both degrees") {
    for (const Graph& g : {petersen(), clebsch(), shrikhande(), schlafli(), complete(5), johnson(6, 2),
                           cartesian(complete(3), cycle(4))}) {
        CAPTURE(g.label());
        long n = static_cast<long>(g.order());
        long k = static_cast<long>(*is_regular(g));
        Graph h = complement(g);
        for (const auto& e : rational_spectrum(g).entries) {
            Rational other = -e.value - 1;
            if (e.value == Rational(k) || other == Rational(n - 1 - k)) continue;
            CHECK(eigenprojection(h, other).projection == eigenprojection(g, e.value).projection);
        }
    }
    // the two eigenspaces merge when -lambda-1 is the complement's degree
    CHECK(eigenprojection(empty_graph(5), 0).projection == RationalMatrix::identity(5));
    CHECK(eigenprojection(complete(5), -1).projection != RationalMatrix::identity(5));
}
