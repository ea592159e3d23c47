#pragma once

#include "latgraph/exactq.hpp"
#include "latgraph/graphs.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace latgraph {

struct MinimalVectorSet {
    Rational min_norm_sq;
    std::vector<IntegerVector> vectors;          // coordinates in the lattice basis, +/- pairs adjacent
    std::vector<RationalVector> ambient_vectors; // empty when the lattice has no embedding

    std::size_t kissing_number() const { return vectors.size(); }
};

/// Full-rank lattice inside its own rational span. The Gram matrix is the
/// primary data; an ambient basis is carried when the lattice was built from
/// vectors, and is used only for reporting ambient coordinates.
class Lattice {
public:
    /// Columns of `basis` must be linearly independent.
    Lattice(RationalMatrix basis, std::string provenance);
    /// `gram` must be symmetric positive definite.
    static Lattice from_gram(RationalMatrix gram, std::string provenance);

    std::size_t rank() const { return gram_.rows(); }
    std::size_t ambient_dim() const { return basis_ ? basis_->rows() : rank(); }
    bool has_basis() const { return basis_.has_value(); }
    const RationalMatrix& basis() const;
    const RationalMatrix& gram() const { return gram_; }
    const std::string& provenance() const { return provenance_; }
    Rational determinant() const;

    /// Cached; computed once on first use, thread-safe.
    const MinimalVectorSet& minimal_vectors() const;

    RationalVector ambient(const IntegerVector& coords) const;
    Rational norm(const IntegerVector& coords) const;
    Rational inner(const IntegerVector& a, const IntegerVector& b) const;

private:
    Lattice() = default;
    struct Cache;

    std::optional<RationalMatrix> basis_;
    RationalMatrix gram_;
    std::string provenance_;
    std::shared_ptr<Cache> cache_;
};

/// Lattice generated by `vectors` (Z-span); basis from the column HNF.
/// Throws std::invalid_argument when every vector is zero.
Lattice lattice_from_generators(const std::vector<RationalVector>& vectors, std::string provenance = "generators");

/// P_lambda Z^n: the lattice generated by the columns of the eigenprojection.
Lattice graph_lattice(const Graph& g, const Rational& lambda);

struct ShortVector {
    IntegerVector coords;
    Rational norm;
};

/// All nonzero v with norm(v) <= bound, one representative per +/- pair,
/// sorted by norm. The search tree is pruned in long double with a guard
/// margin; every returned vector's norm is verified exactly.
/// Throws std::length_error beyond `max_count` vectors.
std::vector<ShortVector> short_vectors(const RationalMatrix& gram, const Rational& bound,
                                       std::size_t max_count = 2'000'000);

MinimalVectorSet minimal_vectors(const Lattice& l);

/// Integer basis change U (columns = new basis in old coordinates) making the
/// Gram matrix LLL-reduced. Floating point only chooses U; U is unimodular.
std::vector<IntegerVector> lll_reduce(const RationalMatrix& gram, double delta = 0.99);

enum class EutaxyKind { strong, weak, none };

struct EutaxyCertificate {
    EutaxyKind kind = EutaxyKind::none;
    Rational coefficient;                 // strong: common c with sum c x x^T = identity
    std::vector<Rational> coefficients;   // weak: one per minimal vector (aligned with MinimalVectorSet::vectors)
};

EutaxyCertificate strong_eutaxy_check(const Lattice& l);
/// Exact simplex (Bland's rule) feasibility test for positive coefficients.
EutaxyCertificate weak_eutaxy_check(const Lattice& l);
bool perfection_check(const Lattice& l);
bool is_well_rounded(const Lattice& l);

Lattice dual_lattice(const Lattice& l);
Lattice tensor_product(const Lattice& a, const Lattice& b);
Lattice orthogonal_sum(const Lattice& a, const Lattice& b);
Lattice scaled(const Lattice& l, const Rational& factor_sq);
/// Same lattice in the basis given by the columns of `transform` (unimodular).
Lattice change_basis(const Lattice& l, const std::vector<IntegerVector>& transform);
/// Sublattice {x in L : c(x) = 0 for every row c of `constraints`}, where the
/// constraints act on ambient coordinates.
Lattice kernel_sublattice(const Lattice& l, const RationalMatrix& constraints, std::string provenance);

/// Squared coherence max (x.y)^2 / (|x|^2 |y|^2) over distinct minimal
/// vectors up to sign. Throws std::invalid_argument for rank < 2.
Rational coherence_sq(const Lattice& l);

/// omega_n |L|^n / (2^n det L), with det L = sqrt(det gram).
double packing_density(const Lattice& l);
double unit_ball_volume(std::size_t n);

struct CoherenceBoundReport {
    bool holds = false;
    std::vector<Rational> cos_sq;  // cos^2 of nu_i, i = 1..n-1
    Rational bound_sq;             // 1 - (omega_n / (2^n delta))^2 = 1 - det(gram)/|L|^{2n}
    double density = 0;
};

/// Checks max cos^2(nu_i) <= 1 - (omega_n/(2^n delta))^2 exactly, where nu_i
/// is the angle between b_{i+1} and span(b_1..b_i). Throws
/// std::invalid_argument unless `minimal_basis` is a basis of minimal vectors.
CoherenceBoundReport coherence_bound_check(const Lattice& l, const std::vector<IntegerVector>& minimal_basis);

/// A basis made of minimal vectors, when the greedy primitive selection finds one.
std::optional<std::vector<IntegerVector>> minimal_vector_basis(const Lattice& l);

/// Greedy primitive selection from `candidates` (sorted by preference);
/// returns a basis when one is reachable.
std::optional<std::vector<IntegerVector>> primitive_basis_from(const std::vector<IntegerVector>& candidates,
                                                              std::size_t rank);

/// Plain-text Gram format: rank on the first line, then rank rows of
/// whitespace-separated rationals "p/q".
std::string write_gram(const RationalMatrix& gram);
RationalMatrix read_gram(const std::string& text);
/// One integer coordinate row per vector.
std::string write_vectors(const std::vector<IntegerVector>& vectors);

}  // namespace latgraph
