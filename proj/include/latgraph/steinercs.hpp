#pragma once

// Floating-point side of the project: Steiner equiangular tight frames and
// sparse recovery of integer-valued signals.

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace latgraph {

struct SteinerSystem {
    std::size_t v = 0;
    std::vector<std::array<std::size_t, 3>> blocks;

    std::size_t replication() const { return (v - 1) / 2; }
};

/// Bose construction for v = 3 (mod 6), Skolem construction for v = 1
/// (mod 6). Throws std::invalid_argument for other v or v < 7.
SteinerSystem steiner_triple_system(std::size_t v);

/// Every pair of points lies in exactly one block.
bool is_steiner_triple_system(const SteinerSystem& s);

/// +-1 matrix with H H^T = order I, from Sylvester doubling and Paley's
/// construction for primes q = 3 (mod 4). Throws std::invalid_argument when
/// no such composition reaches `order`.
Eigen::MatrixXi hadamard(std::size_t order);

struct MeasurementMatrix {
    Eigen::MatrixXd a;   // rows x cols, unit-norm columns
    double coherence = 0;
    std::string provenance;

    std::size_t rows() const { return static_cast<std::size_t>(a.rows()); }
    std::size_t cols() const { return static_cast<std::size_t>(a.cols()); }
};

double mutual_coherence(const Eigen::MatrixXd& a);
/// sqrt((n - k) / (k (n - 1))) for k x n frames.
double welch_bound(std::size_t k, std::size_t n);

/// b x v(r+1) matrix: each point contributes r+1 columns built from a
/// Hadamard matrix of order r+1 with its all-ones row removed, placed on the
/// point's r blocks. Tightness and equiangularity are checked at 1e-10.
MeasurementMatrix steiner_etf(const SteinerSystem& s);

struct RecoveryResult {
    Eigen::VectorXd estimate;
    std::vector<std::size_t> support;
    double residual_norm = 0;
    bool rank_deficient = false;  // a restricted system needed the pseudoinverse
    bool exact = false;           // set by score_recovery
};

RecoveryResult solve_ls(const MeasurementMatrix& m, const Eigen::VectorXd& y);
RecoveryResult solve_ht(const MeasurementMatrix& m, const Eigen::VectorXd& y, std::size_t s);
RecoveryResult solve_omp(const MeasurementMatrix& m, const Eigen::VectorXd& y, std::size_t s);
/// OMP whose restricted least-squares estimate is rounded to integers before
/// the residual is updated; `round` = false gives plain OMP.
RecoveryResult solve_promp(const MeasurementMatrix& m, const Eigen::VectorXd& y, std::size_t s, bool round = true);

/// Marks `r.exact` when every entry is within `tolerance` of `truth`.
void score_recovery(RecoveryResult& r, const Eigen::VectorXd& truth, double tolerance = 1e-6);

struct ExperimentConfig {
    std::vector<std::size_t> sparsities{1, 2, 3, 4, 5, 6};
    std::size_t trials = 500;
    double noise_norm = 0.1;
    int max_amplitude = 5;
    std::uint64_t seed = 20240101;
};

struct ExperimentRow {
    std::size_t sparsity = 0;
    std::string method;      // LS, HT, OMP, PrOMP
    double success_rate = 0; // noiseless exact recoveries / trials
    double mean_error = 0;   // mean l2 error with noise of norm noise_norm
};

/// Each (sparsity, trial) pair draws from its own generator seeded from
/// (seed, sparsity, trial), so results do not depend on evaluation order.
std::vector<ExperimentRow> run_experiment(const MeasurementMatrix& m, const ExperimentConfig& config);

std::string experiment_csv(const std::vector<ExperimentRow>& rows);
std::string experiment_json(const std::vector<ExperimentRow>& rows, const ExperimentConfig& config,
                            const MeasurementMatrix& m);

}  // namespace latgraph
