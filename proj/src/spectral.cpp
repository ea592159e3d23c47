#include "latgraph/spectral.hpp"

#include <stdexcept>

namespace latgraph {

std::size_t RationalSpectrum::multiplicity(const Rational& lambda) const {
    for (const auto& e : entries)
        if (e.value == lambda) return static_cast<std::size_t>(e.multiplicity);
    return 0;
}

RationalSpectrum rational_spectrum(const Graph& g) {
    RationalSpectrum s;
    if (g.order() == 0) return s;
    s.entries = rational_roots(charpoly(g.adjacency_matrix()));
    std::size_t covered = 0;
    for (const auto& e : s.entries) covered += static_cast<std::size_t>(e.multiplicity);
    s.residual_degree = g.order() - covered;
    return s;
}

RationalMatrix orthogonal_projection(const RationalMatrix& basis) {
    RationalMatrix bt = basis.transpose();
    return basis * solve(bt * basis, bt);
}

EigenProjection eigenprojection(const Graph& g, const Rational& lambda) {
    RationalMatrix shifted = g.adjacency_matrix() - RationalMatrix::identity(g.order()) * lambda;
    auto kernel = nullspace_basis(shifted);
    if (kernel.empty())
        throw std::invalid_argument("eigenprojection: " + to_string(lambda) + " is not an eigenvalue of " + g.label());

    // Adjacency matrices are diagonalizable: the geometric multiplicity must
    // equal the root multiplicity in the characteristic polynomial.
    int root_mult = 0;
    IntPolynomial cp = charpoly(g.adjacency_matrix());
    for (const auto& r : rational_roots(cp))
        if (r.value == lambda) root_mult = r.multiplicity;
    if (static_cast<std::size_t>(root_mult) != kernel.size())
        throw std::logic_error("eigenprojection: algebraic and geometric multiplicity disagree for " + g.label());

    EigenProjection p;
    p.eigenvalue = lambda;
    p.eigenbasis = RationalMatrix::from_columns(kernel, g.order());
    p.projection = orthogonal_projection(p.eigenbasis);
    return p;
}

}  // namespace latgraph
