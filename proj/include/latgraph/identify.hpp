#pragma once

#include "latgraph/lattice.hpp"

#include <string>
#include <utility>
#include <vector>

namespace latgraph {

/// Similarity invariants: each field is unchanged by rescaling and isometry.
struct LatticeFingerprint {
    std::size_t rank = 0;
    std::size_t kissing_number = 0;
    Rational normalized_determinant;                         // det(gram) / |L|^{2 rank}
    std::vector<std::pair<Rational, std::size_t>> histogram;  // (norm / |L|^2, count) for the first 3 norm levels

    bool operator==(const LatticeFingerprint&) const = default;
};

LatticeFingerprint fingerprint(const Lattice& l);
std::string to_string(const LatticeFingerprint& f);

enum class SimilarityStatus { similar, not_similar, inconclusive };

struct SimilarityResult {
    SimilarityStatus status = SimilarityStatus::not_similar;
    Rational scale_sq;  // alpha^2 = |l1|^2 / |l2|^2
    /// Integer r x r matrix T (row-major) with T^T (alpha^2 G2) T = G1: column j
    /// holds the l2-coordinates of the image of l1's j-th basis vector.
    IntegerMatrix witness;
    std::size_t nodes = 0;
};

/// Backtracking search for a similarity l1 -> l2 (Plesken-Souvignier style):
/// a short basis of l1 is mapped onto vectors of l2 with matching norms and
/// inner products. `inconclusive` when the node budget runs out.
SimilarityResult is_similar(const Lattice& l1, const Lattice& l2, std::size_t node_budget = 5'000'000);

/// Families: Zn, An, An_dual, An_r, Dn, Dn_dual, Dn_plus, E6, E6_dual, E7,
/// E7_dual, E8. Throws std::invalid_argument on bad parameters.
Lattice catalog_build(const std::string& family, const std::vector<std::size_t>& params = {});

struct CatalogEntry {
    std::string name;    // e.g. "A5^2", "D5_dual", "A2_tensor_A2"
    std::size_t rank = 0;
    int tier = 0;        // 0 basic families, 1 Coxeter A_n^r, 2 composites
};

/// All catalog entries up to rank 10.
const std::vector<CatalogEntry>& catalog();
/// Builds a catalog entry by name; throws std::invalid_argument if unknown.
Lattice catalog_lattice(const std::string& name);
/// Cached fingerprint of a catalog entry.
const LatticeFingerprint& catalog_fingerprint(const std::string& name);

struct Identification {
    std::vector<std::string> names;              // certified matches from the lowest matching tier
    std::vector<std::string> fingerprint_only;   // candidates not certified (search too large or inconclusive)
    bool certified = false;
};

/// Fingerprint filter over the catalog, then is_similar confirmation.
/// Backtracking is skipped above kissing number 256.
Identification identify(const Lattice& l);

struct IdentificationReport {
    std::string graph;
    Rational eigenvalue;
    std::size_t multiplicity = 0;
    std::string lattice_name;  // joined names, or "" when unidentified
    bool certified = false;
};

/// {"graph", "eigenvalue", "multiplicity", "lattice_name", "certified"}
std::string to_json(const IdentificationReport& r);

}  // namespace latgraph
