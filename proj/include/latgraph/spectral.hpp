#pragma once

#include "latgraph/exactq.hpp"
#include "latgraph/graphs.hpp"

#include <vector>

namespace latgraph {

struct RationalSpectrum {
    std::vector<RationalRoot> entries;  // distinct eigenvalues, descending
    std::size_t residual_degree = 0;    // total multiplicity of irrational eigenvalues

    std::size_t multiplicity(const Rational& lambda) const;
};

/// Orthogonal projection onto one rational eigenspace of an adjacency matrix.
struct EigenProjection {
    Rational eigenvalue;
    RationalMatrix projection;  // n x n, symmetric and idempotent
    RationalMatrix eigenbasis;  // n x m, columns span the eigenspace

    std::size_t multiplicity() const { return eigenbasis.cols(); }
};

RationalSpectrum rational_spectrum(const Graph& g);

/// P = B (B^T B)^{-1} B^T for B a basis of ker(A - lambda I). Throws
/// std::invalid_argument when lambda is not an eigenvalue.
EigenProjection eigenprojection(const Graph& g, const Rational& lambda);

/// Orthogonal projection onto the column span of `basis` (full column rank).
RationalMatrix orthogonal_projection(const RationalMatrix& basis);

}  // namespace latgraph
