#pragma once

#include "latgraph/frames.hpp"
#include "latgraph/graphs.hpp"
#include "latgraph/identify.hpp"
#include "latgraph/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latgraph {

struct LatticeRecord {
    std::size_t rank = 0;
    Rational min_norm_sq;
    std::size_t kissing = 0;
    bool strongly_eutactic = false;
    bool perfect = false;
    std::optional<Rational> coherence_sq;  // absent for rank 1
    std::vector<std::string> names;
    std::vector<std::string> fingerprint_only;
    bool certified = false;
};

LatticeRecord describe_lattice(const Lattice& l, bool with_identify = true);

struct EigenRecord {
    Rational eigenvalue;
    std::size_t multiplicity = 0;
    LatticeRecord lattice;
};

/// graph -> rational spectrum -> P_lambda Z^n -> properties -> identification.
struct PipelineReport {
    std::string graph;
    std::size_t vertices = 0;
    bool vertex_transitive = false;
    std::string intersection_array;  // empty unless distance-regular
    std::size_t irrational_multiplicity = 0;
    std::vector<EigenRecord> records;  // one per rational eigenvalue, descending
    double seconds = 0;
};

struct PipelineOptions {
    std::optional<Rational> eigenvalue;  // only this eigenvalue when set
    bool identify = true;
};

/// Throws std::invalid_argument when the selected eigenvalue is not a
/// rational eigenvalue of `g`.
PipelineReport run_pipeline(const Graph& g, const PipelineOptions& options = {});

std::string report_json(const PipelineReport& r);
std::string report_table(const PipelineReport& r);

struct TableRow {
    std::string graph;        // DSL expression
    Rational eigenvalue;
    std::size_t multiplicity = 0;
    std::string expected;     // catalog name, or "" when only rank/eutaxy are checked
    std::size_t expected_rank = 0;
    bool expect_strong = false;
};

struct RowOutcome {
    TableRow row;
    EigenRecord record;
    bool ok = false;
    std::string diff;  // empty when ok
};

/// The fourteen rows of the vertex-transitive graph table; the complete and
/// empty graph rows use n = 5.
std::vector<TableRow> table1_fixture();
/// Johnson graphs J(n,2), n = 4..n_max, eigenvalues n-4 and -2. Throws
/// std::invalid_argument unless 4 <= n_max <= 10.
std::vector<TableRow> table2_fixture(std::size_t n_max);

RowOutcome check_row(const TableRow& row);
std::vector<RowOutcome> check_rows(const std::vector<TableRow>& rows);
std::string outcomes_json(const std::vector<RowOutcome>& rows);
std::string outcomes_table(const std::vector<RowOutcome>& rows);

struct FrameReport {
    bool rational = false;
    std::string message;
    std::optional<TightnessReport> tightness;
    std::optional<LatticeRecord> lattice;
    std::optional<bool> rationality_identity;  // tight frames only
    std::optional<DiscretenessReport> discreteness;  // numeric frames only
};

FrameReport analyze_frame(const Frame& f);
FrameReport analyze_numeric_frame(const NumericFrame& f);
std::string frame_report_json(const FrameReport& r);

std::string lattice_record_json(const LatticeRecord& r);

}  // namespace latgraph
