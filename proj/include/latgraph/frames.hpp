#pragma once

#include "latgraph/exactq.hpp"
#include "latgraph/graphs.hpp"
#include "latgraph/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latgraph {

/// Finite frame stored as exact rational representatives: the true frame
/// vectors are sqrt(scale_sq) times the columns of `vectors`.
struct Frame {
    RationalMatrix vectors;  // ambient x count
    Rational scale_sq = 1;

    std::size_t ambient_dim() const { return vectors.rows(); }
    std::size_t count() const { return vectors.cols(); }
    /// Dimension of the span.
    std::size_t dim() const;
    /// Gram of the true frame: scale_sq * V^T V.
    RationalMatrix gram() const;
};

/// Frame from column vectors; throws std::invalid_argument on ragged input
/// or a non-positive scale.
Frame make_frame(const std::vector<RationalVector>& columns, const Rational& scale_sq = 1);

struct TightnessReport {
    bool is_tight = false;
    Rational gamma;          // |v|^2 = gamma * sum <v, f_i>^2 on the span; 0 when not tight
    bool is_uniform = false;
    bool is_equiangular = false;
    Rational coherence_sq;   // max <f_i,f_j>^2 / (|f_i|^2 |f_j|^2), i != j
};

/// Exact analysis. A frame whose span is a proper subspace of the ambient
/// space is tested for tightness on that span.
TightnessReport analyze(const Frame& f);

/// k+1 vectors 1 - (k+1) e_i in R^{k+1}, scaled to unit norm.
Frame simplex_etf(std::size_t k);

/// Columns e_1..e_k.
Frame standard_basis_frame(std::size_t k);

/// Z-span of the frame, Gram scaled by scale_sq.
Lattice lattice_from_frame(const Frame& f);

/// Rational by construction.
bool is_rational_frame(const Frame& f);

/// Float frame (columns) as read from a decimal file.
struct NumericFrame {
    std::vector<std::vector<double>> columns;
};

struct NumericRationality {
    bool rational = false;
    RationalMatrix gram;   // reconstructed Gram divided by the first diagonal entry
    double reference = 0;  // that diagonal entry
    std::string reason;    // set when reconstruction fails
};

/// Heuristic: each Gram ratio G_ij / G_11 is approximated by continued
/// fractions with denominators up to `max_denominator` and accepted when it
/// matches within `tolerance`.
NumericRationality is_rational_frame(const NumericFrame& f, double tolerance = 1e-9,
                                     long max_denominator = 10000);

/// Reconstructs an exact Frame from a numeric one: entries are recovered as
/// rational multiples of the largest entry and the squared scale is recovered
/// the same way. std::nullopt when any step fails.
std::optional<Frame> reconstruct_frame(const NumericFrame& f, double tolerance = 1e-9,
                                       long max_denominator = 10000);

struct RationalityCheck {
    bool holds = false;
    RationalMatrix basis;  // ambient x rank, basis of the generated lattice
    RationalMatrix z;      // integer rank x count, basis * z = vectors
    Rational frame_bound;  // B B^T = frame_bound on the span
};

/// For a tight frame B with lattice basis A and integer Z, A Z = B, checks
/// B^T B = c Z^T (Z Z^T)^{-1} Z exactly, c the frame bound.
/// Throws std::invalid_argument for non-tight input and std::logic_error if
/// Z fails to be integral.
RationalityCheck verify_rationality_theorem(const Frame& f);

/// X with B0 X = B1, where B0 is the first `split_index` columns. Throws
/// std::domain_error unless B0 has independent columns spanning the frame.
RationalMatrix b0_inverse_b1_rationality(const Frame& f, std::size_t split_index);

/// Orbit of `seed` under coordinate permutations, (g v)_{g(i)} = v_i. Breadth
/// first from the seed; duplicates removed. Throws std::length_error beyond
/// `cap` vectors and std::invalid_argument for a zero or mis-sized seed.
Frame orbit_frame(const PermutationGroup& g, const RationalVector& seed, std::size_t cap = 10000);

enum class DiscretenessVerdict { no_evidence, likely_non_discrete };

struct DiscretenessReport {
    DiscretenessVerdict verdict = DiscretenessVerdict::no_evidence;
    double initial_min_norm = 0;
    double smallest_norm = 0;   // smallest nonzero norm reached
    std::size_t iterations = 0;
};

/// Pairwise integer reduction of the generators. Vectors that collapse to
/// zero are dropped; a norm falling below `shrink` times the initial minimum
/// is reported as likely non-discrete. Never a proof either way.
DiscretenessReport detect_non_discreteness(const std::vector<std::vector<double>>& columns,
                                           std::size_t iterations = 200, double shrink = 1e-4);

/// Minimal vectors of `l`, one per +/- pair, as a frame in the lattice's
/// ambient coordinates (or basis coordinates for Gram-only lattices, with the
/// Gram as metric folded into the tightness test).
bool minimal_vectors_form_tight_frame(const Lattice& l);

/// Orbit frame of P_lambda e_1 under the automorphisms found for `g`.
/// Throws std::runtime_error when no transitivity witness is found.
Frame graph_orbit_frame(const Graph& g, const Rational& lambda);

/// CSV with a first line "scale_sq,<q>" and one vector per line.
Frame read_frame_csv(const std::string& text);
std::string write_frame_csv(const Frame& f);
/// One vector per line, decimal entries.
NumericFrame read_numeric_frame_csv(const std::string& text);

}  // namespace latgraph
