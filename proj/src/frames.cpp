#include "latgraph/frames.hpp"

#include "latgraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace latgraph {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        auto b = cell.find_first_not_of(" \t\r");
        auto e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? std::string() : cell.substr(b, e - b + 1));
    }
    return out;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        rows.push_back(split_csv_line(line));
    }
    return rows;
}

/// Best continued-fraction convergent within tolerance.
std::optional<Rational> approximate(double x, double tolerance, long max_denominator) {
    if (!std::isfinite(x)) return std::nullopt;
    const double target = x;
    long double rest = x;
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int step = 0; step < 64; ++step) {
        long double a = std::floor(rest);
        Integer ai(static_cast<double>(a));
        Integer p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > max_denominator) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double approx = Rational(p1, q1).get_d();
        if (std::fabs(approx - target) <= tolerance * std::max(1.0, std::fabs(target))) return make_rational(p1, q1);
        long double frac = rest - a;
        if (frac == 0) break;
        rest = 1 / frac;
    }
    return std::nullopt;
}

double dotd(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

std::size_t Frame::dim() const { return rank(vectors); }

RationalMatrix Frame::gram() const { return vectors.transpose() * vectors * scale_sq; }

Frame make_frame(const std::vector<RationalVector>& columns, const Rational& scale_sq) {
    if (columns.empty()) throw std::invalid_argument("frame needs at least one vector");
    if (scale_sq <= 0) throw std::invalid_argument("frame scale must be positive");
    const std::size_t k = columns.front().size();
    for (const auto& c : columns)
        if (c.size() != k) throw std::invalid_argument("frame vectors differ in length");
    return Frame{RationalMatrix::from_columns(columns, k), scale_sq};
}

TightnessReport analyze(const Frame& f) {
    TightnessReport r;
    const RationalMatrix v = f.vectors;
    const RationalMatrix s = v * v.transpose();
    const std::size_t rk = rank(v);
    const Rational tr = s.trace();
    if (rk > 0 && tr > 0) {
        Rational c = tr / static_cast<long>(rk);
        if (s * s == s * c) {
            r.is_tight = true;
            r.gamma = static_cast<long>(rk) / (f.scale_sq * tr);
        }
    }
    const RationalMatrix g = v.transpose() * v;
    const std::size_t n = g.rows();
    r.is_uniform = true;
    for (std::size_t i = 1; i < n; ++i)
        if (g(i, i) != g(0, 0)) r.is_uniform = false;
    r.is_equiangular = true;
    r.coherence_sq = 0;
    std::optional<Rational> angle;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational ip2 = g(i, j) * g(i, j);
            if (!angle) angle = ip2;
            else if (*angle != ip2) r.is_equiangular = false;
            if (g(i, i) == 0 || g(j, j) == 0) continue;
            Rational c = ip2 / (g(i, i) * g(j, j));
            if (c > r.coherence_sq) r.coherence_sq = c;
        }
    return r;
}

Frame simplex_etf(std::size_t k) {
    if (k == 0) throw std::invalid_argument("simplex_etf needs k >= 1");
    std::vector<RationalVector> cols;
    for (std::size_t i = 0; i <= k; ++i) {
        RationalVector c(k + 1, Rational(1));
        c[i] = -static_cast<long>(k);
        cols.push_back(std::move(c));
    }
    const long kk = static_cast<long>(k);
    return make_frame(cols, make_rational(1, kk * kk + kk));
}

Frame standard_basis_frame(std::size_t k) {
    if (k == 0) throw std::invalid_argument("standard_basis_frame needs k >= 1");
    return Frame{RationalMatrix::identity(k), 1};
}

Lattice lattice_from_frame(const Frame& f) {
    Lattice l = lattice_from_generators(f.vectors.columns(), "frame");
    if (f.scale_sq == 1) return l;
    return scaled(l, f.scale_sq);
}

bool is_rational_frame(const Frame&) { return true; }

NumericRationality is_rational_frame(const NumericFrame& f, double tolerance, long max_denominator) {
    NumericRationality out;
    const std::size_t n = f.columns.size();
    if (n == 0) {
        out.reason = "empty frame";
        return out;
    }
    std::size_t ref = n;
    for (std::size_t i = 0; i < n; ++i)
        if (dotd(f.columns[i], f.columns[i]) > 0) {
            ref = i;
            break;
        }
    if (ref == n) {
        out.reason = "all vectors are zero";
        return out;
    }
    out.reference = dotd(f.columns[ref], f.columns[ref]);
    out.gram = RationalMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            double ratio = dotd(f.columns[i], f.columns[j]) / out.reference;
            auto q = approximate(ratio, tolerance, max_denominator);
            if (!q) {
                std::ostringstream msg;
                msg << "Gram ratio (" << i << "," << j << ") = " << ratio << " has no small rational approximation";
                out.reason = msg.str();
                out.gram = RationalMatrix();
                return out;
            }
            out.gram(i, j) = *q;
            out.gram(j, i) = *q;
        }
    out.rational = true;
    return out;
}

std::optional<Frame> reconstruct_frame(const NumericFrame& f, double tolerance, long max_denominator) {
    if (f.columns.empty()) return std::nullopt;
    double m = 0;
    for (const auto& c : f.columns)
        for (double x : c) m = std::max(m, std::fabs(x));
    if (m == 0) return std::nullopt;
    std::vector<RationalVector> cols;
    for (const auto& c : f.columns) {
        RationalVector v;
        for (double x : c) {
            auto q = approximate(x / m, tolerance, max_denominator);
            if (!q) return std::nullopt;
            v.push_back(*q);
        }
        cols.push_back(std::move(v));
    }
    auto s = approximate(m * m, tolerance, max_denominator);
    if (!s || *s <= 0) return std::nullopt;
    try {
        return make_frame(cols, *s);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

RationalityCheck verify_rationality_theorem(const Frame& f) {
    auto report = analyze(f);
    if (!report.is_tight) throw std::invalid_argument("verify_rationality_theorem needs a tight frame");
    RationalityCheck out;
    const Lattice l = lattice_from_generators(f.vectors.columns(), "frame");
    out.basis = l.basis();
    const RationalMatrix at = out.basis.transpose();
    out.z = solve(at * out.basis, at * f.vectors);
    if (!out.z.is_integral() || out.basis * out.z != f.vectors)
        throw std::logic_error("frame vectors are not integral in the lattice basis");
    out.frame_bound = 1 / report.gamma;
    const RationalMatrix zt = out.z.transpose();
    const RationalMatrix lhs = f.gram();
    const RationalMatrix rhs = zt * inverse(out.z * zt) * out.z * out.frame_bound;
    out.holds = lhs == rhs;
    return out;
}

RationalMatrix b0_inverse_b1_rationality(const Frame& f, std::size_t split_index) {
    if (split_index == 0 || split_index > f.count()) throw std::domain_error("split index out of range");
    const RationalMatrix b0 = f.vectors.column_block(0, split_index);
    const RationalMatrix b1 = f.vectors.column_block(split_index, f.count() - split_index);
    if (rank(b0) != split_index || split_index != f.dim())
        throw std::domain_error("leading block is not a basis of the frame span");
    const RationalMatrix b0t = b0.transpose();
    RationalMatrix x = solve(b0t * b0, b0t * b1);
    if (b0 * x != b1) throw std::logic_error("trailing vectors outside the leading span");
    return x;
}

Frame orbit_frame(const PermutationGroup& g, const RationalVector& seed, std::size_t cap) {
    if (seed.size() != g.degree) throw std::invalid_argument("seed length differs from group degree");
    if (is_zero(seed)) throw std::invalid_argument("seed must be nonzero");
    std::set<RationalVector> seen{seed};
    std::vector<RationalVector> order{seed};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const RationalVector v = order[queue.front()];
        queue.pop_front();
        for (const Permutation& p : g.generators) {
            RationalVector w(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) w[p[i]] = v[i];
            if (seen.insert(w).second) {
                if (order.size() >= cap) throw std::length_error("orbit exceeds size cap");
                order.push_back(std::move(w));
                queue.push_back(order.size() - 1);
            }
        }
    }
    return make_frame(order);
}

DiscretenessReport detect_non_discreteness(const std::vector<std::vector<double>>& columns,
                                           std::size_t iterations, double shrink) {
    DiscretenessReport out;
    std::vector<std::vector<double>> v;
    double largest = 0;
    for (const auto& c : columns) largest = std::max(largest, std::sqrt(dotd(c, c)));
    if (largest == 0) return out;
    const double zero = 1e-10 * largest;
    for (const auto& c : columns)
        if (std::sqrt(dotd(c, c)) > zero) v.push_back(c);
    auto min_norm = [&] {
        double m = largest;
        for (const auto& c : v) m = std::min(m, std::sqrt(dotd(c, c)));
        return m;
    };
    out.initial_min_norm = min_norm();
    out.smallest_norm = out.initial_min_norm;
    for (; out.iterations < iterations; ++out.iterations) {
        bool changed = false;
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) {
                if (i == j) continue;
                double nj = dotd(v[j], v[j]);
                double q = std::round(dotd(v[i], v[j]) / nj);
                if (q == 0) continue;
                std::vector<double> w = v[i];
                for (std::size_t t = 0; t < w.size(); ++t) w[t] -= q * v[j][t];
                if (dotd(w, w) < dotd(v[i], v[i])) {
                    v[i] = std::move(w);
                    changed = true;
                }
            }
        std::erase_if(v, [&](const std::vector<double>& c) { return std::sqrt(dotd(c, c)) <= zero; });
        if (v.empty()) break;
        out.smallest_norm = std::min(out.smallest_norm, min_norm());
        if (out.smallest_norm < shrink * out.initial_min_norm) {
            out.verdict = DiscretenessVerdict::likely_non_discrete;
            ++out.iterations;
            break;
        }
        if (!changed) break;
    }
    return out;
}

bool minimal_vectors_form_tight_frame(const Lattice& l) {
    const MinimalVectorSet& mv = l.minimal_vectors();
    if (l.has_basis()) {
        std::vector<RationalVector> cols;
        for (std::size_t i = 0; i < mv.ambient_vectors.size(); i += 2) cols.push_back(mv.ambient_vectors[i]);
        Frame f = make_frame(cols);
        return analyze(f).is_tight && f.dim() == l.rank();
    }
    const std::size_t r = l.rank();
    RationalMatrix s(r, r);
    for (std::size_t t = 0; t < mv.vectors.size(); t += 2)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) s(i, j) += Rational(mv.vectors[t][i] * mv.vectors[t][j]);
    RationalMatrix m = s * l.gram();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (m(i, j) != (i == j ? m(0, 0) : Rational(0))) return false;
    return m(0, 0) != 0;
}

Frame graph_orbit_frame(const Graph& g, const Rational& lambda) {
    auto witness = vertex_transitivity_witness(g);
    if (witness.status != TransitivityStatus::witness)
        throw std::runtime_error("no vertex-transitivity witness for " + g.label());
    auto p = eigenprojection(g, lambda);
    return orbit_frame(witness.group, p.projection.column(0));
}

Frame read_frame_csv(const std::string& text) {
    auto rows = csv_rows(text);
    if (rows.empty()) throw std::invalid_argument("frame CSV is empty");
    Rational scale = 1;
    std::size_t start = 0;
    if (!rows[0].empty() && rows[0][0] == "scale_sq") {
        if (rows[0].size() != 2) throw std::invalid_argument("scale_sq line needs exactly one value");
        scale = parse_rational(rows[0][1]);
        start = 1;
    }
    std::vector<RationalVector> cols;
    for (std::size_t r = start; r < rows.size(); ++r) {
        RationalVector v;
        for (const auto& cell : rows[r]) v.push_back(parse_rational(cell));
        cols.push_back(std::move(v));
    }
    if (cols.empty()) throw std::invalid_argument("frame CSV has no vectors");
    return make_frame(cols, scale);
}

std::string write_frame_csv(const Frame& f) {
    std::ostringstream out;
    out << "scale_sq," << to_string(f.scale_sq) << '\n';
    for (std::size_t c = 0; c < f.count(); ++c) {
        for (std::size_t r = 0; r < f.ambient_dim(); ++r) out << (r ? "," : "") << to_string(f.vectors(r, c));
        out << '\n';
    }
    return out.str();
}

NumericFrame read_numeric_frame_csv(const std::string& text) {
    NumericFrame f;
    for (const auto& row : csv_rows(text)) {
        std::vector<double> v;
        for (const auto& cell : row) {
            std::size_t used = 0;
            double x = 0;
            try {
                x = std::stod(cell, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != cell.size()) throw std::invalid_argument("bad decimal '" + cell + "'");
            v.push_back(x);
        }
        if (!f.columns.empty() && v.size() != f.columns.front().size())
            throw std::invalid_argument("numeric frame rows differ in length");
        f.columns.push_back(std::move(v));
    }
    if (f.columns.empty()) throw std::invalid_argument("numeric frame CSV is empty");
    return f;
}

}  // namespace latgraph
