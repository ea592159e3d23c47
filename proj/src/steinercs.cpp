#include "latgraph/steinercs.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace latgraph {

namespace {

bool is_prime(std::size_t q) {
    if (q < 2) return false;
    for (std::size_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

Eigen::MatrixXi paley(std::size_t q) {
    std::vector<int> chi(q, -1);
    chi[0] = 0;
    for (std::size_t x = 1; x < q; ++x) chi[(x * x) % q] = 1;
    const int n = static_cast<int>(q + 1);
    Eigen::MatrixXi h = Eigen::MatrixXi::Identity(n, n);
    for (int j = 1; j < n; ++j) {
        h(0, j) += 1;
        h(j, 0) -= 1;
    }
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) h(i + 1, j + 1) += chi[(j + q - i) % q];
    return h;
}

Eigen::MatrixXi kron2(const Eigen::MatrixXi& h) {
    const auto n = h.rows();
    Eigen::MatrixXi out(2 * n, 2 * n);
    out << h, h, h, -h;
    return out;
}

Eigen::VectorXd restricted_ls(const MeasurementMatrix& m, const std::vector<std::size_t>& support,
                              const Eigen::VectorXd& y, bool& deficient) {
    Eigen::MatrixXd sub(m.a.rows(), static_cast<Eigen::Index>(support.size()));
    for (std::size_t i = 0; i < support.size(); ++i) sub.col(static_cast<Eigen::Index>(i)) = m.a.col(static_cast<Eigen::Index>(support[i]));
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(sub);
    if (cod.rank() < sub.cols()) deficient = true;
    return cod.solve(y);
}

Eigen::VectorXd scatter(std::size_t n, const std::vector<std::size_t>& support, const Eigen::VectorXd& values) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < support.size(); ++i) x(static_cast<Eigen::Index>(support[i])) = values(static_cast<Eigen::Index>(i));
    return x;
}

RecoveryResult finish(const MeasurementMatrix& m, const Eigen::VectorXd& y, Eigen::VectorXd x,
                      std::vector<std::size_t> support, bool deficient) {
    RecoveryResult r;
    r.residual_norm = (y - m.a * x).norm();
    r.estimate = std::move(x);
    std::sort(support.begin(), support.end());
    r.support = std::move(support);
    r.rank_deficient = deficient;
    return r;
}

void check_dims(const MeasurementMatrix& m, const Eigen::VectorXd& y) {
    if (y.size() != m.a.rows()) throw std::invalid_argument("measurement length differs from matrix rows");
}

}  // namespace

SteinerSystem steiner_triple_system(std::size_t v) {
    if (v < 7 || (v % 6 != 1 && v % 6 != 3))
        throw std::invalid_argument("a Steiner triple system needs v = 1 or 3 (mod 6), v >= 7");
    SteinerSystem s;
    s.v = v;
    if (v % 6 == 3) {
        const std::size_t m = v / 3;  // odd, idempotent quasigroup x o y = (x + y)(m + 1)/2
        auto op = [&](std::size_t x, std::size_t y) { return ((x + y) * ((m + 1) / 2)) % m; };
        auto pt = [&](std::size_t x, std::size_t i) { return x + m * (i % 3); };
        for (std::size_t x = 0; x < m; ++x) s.blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
        for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = x + 1; y < m; ++y)
                for (std::size_t i = 0; i < 3; ++i) s.blocks.push_back({pt(x, i), pt(y, i), pt(op(x, y), i + 1)});
    } else {
        const std::size_t n = (v - 1) / 6, m = 2 * n;  // half-idempotent quasigroup of order 2n
        auto op = [&](std::size_t x, std::size_t y) {
            std::size_t t = (x + y) % m;
            return t % 2 == 0 ? t / 2 : (t - 1) / 2 + n;
        };
        auto pt = [&](std::size_t x, std::size_t i) { return x + m * (i % 3); };
        const std::size_t inf = v - 1;
        for (std::size_t x = 0; x < n; ++x) s.blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t i = 0; i < 3; ++i) s.blocks.push_back({inf, pt(n + x, i), pt(x, i + 1)});
        for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = x + 1; y < m; ++y)
                for (std::size_t i = 0; i < 3; ++i) s.blocks.push_back({pt(x, i), pt(y, i), pt(op(x, y), i + 1)});
    }
    for (auto& b : s.blocks) std::sort(b.begin(), b.end());
    std::sort(s.blocks.begin(), s.blocks.end());
    if (!is_steiner_triple_system(s)) throw std::logic_error("triple system construction failed");
    return s;
}

bool is_steiner_triple_system(const SteinerSystem& s) {
    if (s.v < 3 || s.blocks.size() * 6 != s.v * (s.v - 1)) return false;
    std::vector<int> seen(s.v * s.v, 0);
    for (const auto& b : s.blocks) {
        for (std::size_t p : b)
            if (p >= s.v) return false;
        if (b[0] == b[1] || b[1] == b[2] || b[0] == b[2]) return false;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                std::size_t a = std::min(b[i], b[j]), c = std::max(b[i], b[j]);
                if (++seen[a * s.v + c] > 1) return false;
            }
    }
    for (std::size_t a = 0; a < s.v; ++a)
        for (std::size_t c = a + 1; c < s.v; ++c)
            if (seen[a * s.v + c] != 1) return false;
    return true;
}

Eigen::MatrixXi hadamard(std::size_t order) {
    Eigen::MatrixXi h;
    if (order == 1) {
        h = Eigen::MatrixXi::Ones(1, 1);
    } else if (order == 2) {
        h.resize(2, 2);
        h << 1, 1, 1, -1;
    } else if (order % 4 != 0) {
        throw std::invalid_argument("no Hadamard matrix of order " + std::to_string(order));
    } else if (is_prime(order - 1) && (order - 1) % 4 == 3) {
        h = paley(order - 1);
    } else {
        h = kron2(hadamard(order / 2));
    }
    const int n = static_cast<int>(order);
    if (h.rows() != n || h * h.transpose() != n * Eigen::MatrixXi::Identity(n, n))
        throw std::logic_error("Hadamard construction failed for order " + std::to_string(order));
    return h;
}

double mutual_coherence(const Eigen::MatrixXd& a) {
    double best = 0;
    for (Eigen::Index i = 0; i < a.cols(); ++i)
        for (Eigen::Index j = i + 1; j < a.cols(); ++j)
            best = std::max(best, std::fabs(a.col(i).dot(a.col(j))) / (a.col(i).norm() * a.col(j).norm()));
    return best;
}

double welch_bound(std::size_t k, std::size_t n) {
    if (k == 0 || n < 2) throw std::invalid_argument("Welch bound needs k >= 1 and n >= 2");
    if (n <= k) return 0;
    return std::sqrt(static_cast<double>(n - k) / (static_cast<double>(k) * static_cast<double>(n - 1)));
}

MeasurementMatrix steiner_etf(const SteinerSystem& s) {
    if (!is_steiner_triple_system(s)) throw std::invalid_argument("input is not a Steiner triple system");
    const std::size_t r = s.replication(), b = s.blocks.size();
    Eigen::MatrixXi h = hadamard(r + 1);
    for (Eigen::Index c = 0; c < h.cols(); ++c)
        if (h(0, c) < 0) h.col(c) *= -1;
    std::vector<std::vector<std::size_t>> incident(s.v);
    for (std::size_t blk = 0; blk < b; ++blk)
        for (std::size_t p : s.blocks[blk]) incident[p].push_back(blk);
    MeasurementMatrix m;
    m.a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(s.v * (r + 1)));
    const double norm = 1.0 / std::sqrt(static_cast<double>(r));
    for (std::size_t p = 0; p < s.v; ++p)
        for (std::size_t c = 0; c <= r; ++c)
            for (std::size_t t = 0; t < r; ++t)
                m.a(static_cast<Eigen::Index>(incident[p][t]), static_cast<Eigen::Index>(p * (r + 1) + c)) =
                    norm * h(static_cast<Eigen::Index>(t + 1), static_cast<Eigen::Index>(c));
    m.coherence = mutual_coherence(m.a);
    m.provenance = "steiner_etf(sts(" + std::to_string(s.v) + "))";

    const double n = static_cast<double>(m.cols()), k = static_cast<double>(m.rows());
    Eigen::MatrixXd frame_op = m.a * m.a.transpose();
    if ((frame_op - (n / k) * Eigen::MatrixXd::Identity(m.a.rows(), m.a.rows())).cwiseAbs().maxCoeff() > 1e-10)
        throw std::logic_error("Steiner ETF is not tight");
    Eigen::MatrixXd g = m.a.transpose() * m.a;
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            double want = i == j ? 1.0 : 1.0 / static_cast<double>(r);
            if (std::fabs(std::fabs(g(i, j)) - want) > 1e-10) throw std::logic_error("Steiner ETF is not equiangular");
        }
    return m;
}

RecoveryResult solve_ls(const MeasurementMatrix& m, const Eigen::VectorXd& y) {
    check_dims(m, y);
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(m.a);
    std::vector<std::size_t> all(m.cols());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return finish(m, y, cod.solve(y), all, cod.rank() < m.a.cols());
}

RecoveryResult solve_ht(const MeasurementMatrix& m, const Eigen::VectorXd& y, std::size_t s) {
    check_dims(m, y);
    s = std::min(s, m.cols());
    Eigen::VectorXd proxy = (m.a.transpose() * y).cwiseAbs();
    std::vector<std::size_t> idx(m.cols());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return proxy(static_cast<Eigen::Index>(a)) > proxy(static_cast<Eigen::Index>(b));
    });
    idx.resize(s);
    bool deficient = false;
    Eigen::VectorXd x = s ? scatter(m.cols(), idx, restricted_ls(m, idx, y, deficient))
                          : Eigen::VectorXd::Zero(m.a.cols()).eval();
    return finish(m, y, x, idx, deficient);
}

RecoveryResult solve_promp(const MeasurementMatrix& m, const Eigen::VectorXd& y, std::size_t s, bool round) {
    check_dims(m, y);
    s = std::min(s, m.cols());
    std::vector<std::size_t> support;
    std::vector<bool> used(m.cols(), false);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(m.a.cols());
    Eigen::VectorXd residual = y;
    bool deficient = false;
    const double stop = 1e-12 * std::max(1.0, y.norm());
    for (std::size_t it = 0; it < s && residual.norm() > stop; ++it) {
        Eigen::VectorXd corr = (m.a.transpose() * residual).cwiseAbs();
        std::size_t best = m.cols();
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!used[j] && (best == m.cols() || corr(static_cast<Eigen::Index>(j)) > corr(static_cast<Eigen::Index>(best))))
                best = j;
        used[best] = true;
        support.push_back(best);
        Eigen::VectorXd coef = restricted_ls(m, support, y, deficient);
        if (round) coef = coef.array().round().matrix();
        x = scatter(m.cols(), support, coef);
        residual = y - m.a * x;
    }
    return finish(m, y, x, support, deficient);
}

RecoveryResult solve_omp(const MeasurementMatrix& m, const Eigen::VectorXd& y, std::size_t s) {
    return solve_promp(m, y, s, false);
}

void score_recovery(RecoveryResult& r, const Eigen::VectorXd& truth, double tolerance) {
    r.exact = r.estimate.size() == truth.size() && (r.estimate - truth).cwiseAbs().maxCoeff() <= tolerance;
}

std::vector<ExperimentRow> run_experiment(const MeasurementMatrix& m, const ExperimentConfig& config) {
    if (config.max_amplitude < 1) throw std::invalid_argument("max amplitude must be at least 1");
    static const char* names[] = {"LS", "HT", "OMP", "PrOMP"};
    std::vector<ExperimentRow> rows;
    const std::size_t n = m.cols();
    for (std::size_t s : config.sparsities) {
        if (s > n) throw std::invalid_argument("sparsity exceeds the number of columns");
        std::array<std::size_t, 4> wins{};
        std::array<double, 4> err{};
        for (std::size_t trial = 0; trial < config.trials; ++trial) {
            std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                              static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(trial)};
            std::mt19937_64 rng(seq);
            std::vector<std::size_t> idx(n);
            std::iota(idx.begin(), idx.end(), std::size_t{0});
            for (std::size_t i = 0; i < s; ++i) {
                std::uniform_int_distribution<std::size_t> pick(i, n - 1);
                std::swap(idx[i], idx[pick(rng)]);
            }
            std::uniform_int_distribution<int> amp(1, config.max_amplitude);
            std::bernoulli_distribution sign(0.5);
            Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
            for (std::size_t i = 0; i < s; ++i) x(static_cast<Eigen::Index>(idx[i])) = (sign(rng) ? -1 : 1) * amp(rng);
            Eigen::VectorXd y = m.a * x;

            Eigen::VectorXd noisy = y;
            if (config.noise_norm > 0) {
                std::normal_distribution<double> gauss;
                Eigen::VectorXd e(y.size());
                for (Eigen::Index i = 0; i < e.size(); ++i) e(i) = gauss(rng);
                noisy += config.noise_norm / e.norm() * e;
            }
            auto run = [&](int method, const Eigen::VectorXd& meas) {
                switch (method) {
                    case 0: return solve_ls(m, meas);
                    case 1: return solve_ht(m, meas, s);
                    case 2: return solve_omp(m, meas, s);
                    default: return solve_promp(m, meas, s);
                }
            };
            for (int method = 0; method < 4; ++method) {
                RecoveryResult clean = run(method, y);
                score_recovery(clean, x);
                if (clean.exact) ++wins[method];
                err[method] += config.noise_norm > 0 ? (run(method, noisy).estimate - x).norm() : (clean.estimate - x).norm();
            }
        }
        for (int method = 0; method < 4; ++method) {
            const double t = config.trials ? static_cast<double>(config.trials) : 1.0;
            rows.push_back({s, names[method], config.trials ? wins[method] / t : 1.0, err[method] / t});
        }
    }
    return rows;
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
    std::ostringstream out;
    out.precision(17);
    out << "sparsity,method,success_rate,mean_error\n";
    for (const auto& r : rows) out << r.sparsity << ',' << r.method << ',' << r.success_rate << ',' << r.mean_error << '\n';
    return out.str();
}

std::string experiment_json(const std::vector<ExperimentRow>& rows, const ExperimentConfig& config,
                            const MeasurementMatrix& m) {
    nlohmann::json j;
    j["matrix"] = {{"rows", m.rows()}, {"cols", m.cols()}, {"coherence", m.coherence}, {"provenance", m.provenance}};
    j["config"] = {{"trials", config.trials},
                   {"noise_norm", config.noise_norm},
                   {"max_amplitude", config.max_amplitude},
                   {"seed", config.seed},
                   {"sparsities", config.sparsities}};
    auto& out = j["rows"] = nlohmann::json::array();
    for (const auto& r : rows)
        out.push_back({{"sparsity", r.sparsity}, {"method", r.method}, {"success_rate", r.success_rate},
                       {"mean_error", r.mean_error}});
    return j.dump(2);
}

}  // namespace latgraph
