#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latgraph/steinercs.hpp"

#include <random>
#include <set>

using namespace latgraph;

TEST_CASE("Steiner triple systems") {
    for (std::size_t v : {7, 9, 13, 15, 19, 21, 25, 27, 31}) {
        CAPTURE(v);
        auto s = steiner_triple_system(v);
        CHECK(s.blocks.size() == v * (v - 1) / 6);
        CHECK(is_steiner_triple_system(s));
        std::vector<std::size_t> rep(v, 0);
        for (const auto& b : s.blocks)
            for (auto p : b) ++rep[p];
        for (auto r : rep) CHECK(r == s.replication());
    }
    CHECK(steiner_triple_system(7).replication() == 3);
    CHECK(steiner_triple_system(9).blocks.size() == 12);
    CHECK_THROWS_AS(steiner_triple_system(6), std::invalid_argument);
    CHECK_THROWS_AS(steiner_triple_system(3), std::invalid_argument);
    SteinerSystem broken = steiner_triple_system(7);
    broken.blocks[0] = broken.blocks[1];
    CHECK_FALSE(is_steiner_triple_system(broken));
}

TEST_CASE("Hadamard matrices") {
    Eigen::MatrixXi h2(2, 2);
    h2 << 1, 1, 1, -1;
    CHECK(hadamard(2) == h2);
    for (std::size_t n : {1, 2, 4, 8, 12, 16, 20, 24, 32}) {
        CAPTURE(n);
        auto h = hadamard(n);
        const int ni = static_cast<int>(n);
        CHECK(h * h.transpose() == ni * Eigen::MatrixXi::Identity(ni, ni));
        CHECK(h.cwiseAbs() == Eigen::MatrixXi::Ones(ni, ni));
    }
    CHECK_THROWS_AS(hadamard(5), std::invalid_argument);
    CHECK_THROWS_AS(hadamard(6), std::invalid_argument);
}

TEST_CASE("Steiner ETFs meet the Welch bound") {
    auto a7 = steiner_etf(steiner_triple_system(7));
    CHECK(a7.rows() == 7);
    CHECK(a7.cols() == 28);
    CHECK(a7.coherence == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(std::fabs(a7.coherence - welch_bound(7, 28)) < 1e-9);

    auto a15 = steiner_etf(steiner_triple_system(15));
    CHECK(a15.rows() == 35);
    CHECK(a15.cols() == 120);
    CHECK(std::fabs(a15.coherence - welch_bound(35, 120)) < 1e-9);
    for (auto* m : {&a7, &a15}) {
        const double ratio = static_cast<double>(m->cols()) / static_cast<double>(m->rows());
        Eigen::MatrixXd diff = m->a * m->a.transpose() - ratio * Eigen::MatrixXd::Identity(m->a.rows(), m->a.rows());
        CHECK(diff.cwiseAbs().maxCoeff() < 1e-9);
        CHECK((m->a.colwise().norm().array() - 1.0).abs().maxCoeff() < 1e-10);
    }
    CHECK_THROWS_AS(steiner_etf(steiner_triple_system(9)), std::invalid_argument);
}

TEST_CASE("solvers on trivial inputs") {
    auto m = steiner_etf(steiner_triple_system(7));
    Eigen::VectorXd zero = Eigen::VectorXd::Zero(7);
    Eigen::VectorXd truth = Eigen::VectorXd::Zero(28);
    for (auto r : {solve_ls(m, zero), solve_ht(m, zero, 2), solve_omp(m, zero, 2), solve_promp(m, zero, 2)}) {
        score_recovery(r, truth);
        CHECK(r.exact);
        CHECK(r.residual_norm == 0);
    }
    // every noiseless 1-sparse signal is recovered by OMP
    for (Eigen::Index j = 0; j < 28; ++j)
        for (int amp : {-5, -1, 3}) {
            Eigen::VectorXd x = Eigen::VectorXd::Zero(28);
            x(j) = amp;
            auto r = solve_omp(m, m.a * x, 1);
            score_recovery(r, x);
            CHECK(r.exact);
            CHECK(r.support == std::vector<std::size_t>{static_cast<std::size_t>(j)});
        }
    CHECK_THROWS_AS(solve_ls(m, Eigen::VectorXd::Zero(5)), std::invalid_argument);
}

TEST_CASE("least squares is the minimum-norm solution") {
    auto m = steiner_etf(steiner_triple_system(7));
    std::mt19937 rng(3);
    std::normal_distribution<double> g;
    Eigen::VectorXd y(7);
    for (int i = 0; i < 7; ++i) y(i) = g(rng);
    auto r = solve_ls(m, y);
    CHECK(r.residual_norm < 1e-10);
    // tight frame: pseudoinverse is (k/n) A^T
    CHECK((r.estimate - (7.0 / 28.0) * m.a.transpose() * y).norm() < 1e-10);
}

TEST_CASE("PrOMP rounding can be disabled") {
    auto m = steiner_etf(steiner_triple_system(7));
    Eigen::VectorXd x = Eigen::VectorXd::Zero(28);
    x(2) = 3;
    x(17) = -2;
    Eigen::VectorXd y = m.a * x;
    auto plain = solve_promp(m, y, 2, false);
    auto omp = solve_omp(m, y, 2);
    CHECK(plain.support == omp.support);
    CHECK((plain.estimate - omp.estimate).norm() == 0);
    auto rounded = solve_promp(m, y + 0.05 * Eigen::VectorXd::Ones(7), 2);
    CHECK((rounded.estimate.array().round() - rounded.estimate.array()).abs().maxCoeff() == 0);
}

TEST_CASE("experiment properties") {
    auto m = steiner_etf(steiner_triple_system(7));
    ExperimentConfig cfg;
    cfg.sparsities = {0, 1, 2, 3};
    cfg.trials = 200;
    auto rows = run_experiment(m, cfg);
    REQUIRE(rows.size() == 16);
    for (int i = 0; i < 4; ++i) {
        CHECK(rows[i].sparsity == 0);
        CHECK(rows[i].success_rate == 1.0);
    }
    auto rate = [&](std::size_t s, const std::string& method) {
        for (const auto& r : rows)
            if (r.sparsity == s && r.method == method) return r.success_rate;
        return -1.0;
    };
    CHECK(rate(1, "OMP") == 1.0);
    CHECK(rate(1, "OMP") >= rate(2, "OMP"));
    CHECK(rate(2, "OMP") >= rate(3, "OMP"));
    CHECK(rate(1, "PrOMP") == 1.0);

    // bit-reproducible under a fixed seed
    CHECK(experiment_csv(run_experiment(m, cfg)) == experiment_csv(rows));
    cfg.seed += 1;
    CHECK(experiment_csv(run_experiment(m, cfg)) != experiment_csv(rows));

    auto csv = experiment_csv(rows);
    CHECK(csv.rfind("sparsity,method,success_rate,mean_error\n", 0) == 0);
    CHECK(experiment_json(rows, cfg, m).find("\"PrOMP\"") != std::string::npos);
}
