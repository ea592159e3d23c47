#include "latgraph/lattice.hpp"

#include "latgraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace latgraph {

struct Lattice::Cache {
    std::once_flag once;
    std::optional<MinimalVectorSet> minimal;
};

namespace {

RationalMatrix gram_of(const RationalMatrix& basis) { return basis.transpose() * basis; }

RationalMatrix integer_columns_matrix(const std::vector<IntegerVector>& cols, std::size_t rows) {
    RationalMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    return m;
}

IntegerVector negated(const IntegerVector& v) {
    IntegerVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

std::size_t sym_dim(std::size_t k) { return k * (k + 1) / 2; }

// Upper-triangle entries of x x^T.
RationalVector sym_outer(const IntegerVector& x) {
    RationalVector out;
    out.reserve(sym_dim(x.size()));
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = a; b < x.size(); ++b) out.emplace_back(x[a] * x[b]);
    return out;
}

RationalVector sym_entries(const RationalMatrix& m) {
    RationalVector out;
    for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = a; b < m.cols(); ++b) out.push_back(m(a, b));
    return out;
}

// Minimal exact simplex for: minimize c.x subject to A x = b, x >= 0.
// Two phases, Bland's rule throughout.
class ExactSimplex {
public:
    enum class Status { optimal, infeasible, unbounded };

    ExactSimplex(std::vector<RationalVector> a, RationalVector b, RationalVector c)
        : m_(a.size()), n_(c.size()), cost_(std::move(c)) {
        // Tableau columns: n structural, m artificial, then rhs.
        rows_.assign(m_, RationalVector(n_ + m_ + 1));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            bool flip = b[i] < 0;
            for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
            rows_[i][n_ + i] = 1;
            rows_[i][n_ + m_] = flip ? Rational(-b[i]) : b[i];
            basis_[i] = n_ + i;
        }
    }

    Status solve() {
        // Phase 1: minimize the sum of artificials.
        RationalVector phase1(n_ + m_, 0);
        for (std::size_t i = 0; i < m_; ++i) phase1[n_ + i] = 1;
        run(phase1, n_ + m_);
        Rational infeas = 0;
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= n_) infeas += rows_[i][n_ + m_];
        if (infeas > 0) return Status::infeasible;
        drive_out_artificials();
        RationalVector phase2(n_ + m_, 0);
        for (std::size_t j = 0; j < n_; ++j) phase2[j] = cost_[j];
        return run(phase2, n_) ? Status::optimal : Status::unbounded;
    }

    RationalVector solution() const {
        RationalVector x(n_, 0);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] < n_) x[basis_[i]] = rows_[i][n_ + m_];
        return x;
    }

private:
    // Returns false when unbounded. Columns >= `allowed` never enter.
    bool run(const RationalVector& c, std::size_t allowed) {
        for (;;) {
            std::size_t enter = allowed;
            for (std::size_t j = 0; j < allowed; ++j) {
                if (is_basic(j)) continue;
                Rational reduced = c[j];
                for (std::size_t i = 0; i < rows_.size(); ++i)
                    if (rows_[i][j] != 0) reduced -= c[basis_[i]] * rows_[i][j];
                if (reduced < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == allowed) return true;
            std::size_t leave = rows_.size();
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][enter] <= 0) continue;
                Rational ratio = rows_[i][n_ + m_] / rows_[i][enter];
                if (leave == rows_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows_.size()) return false;
            pivot(leave, enter);
        }
    }

    bool is_basic(std::size_t j) const { return std::find(basis_.begin(), basis_.end(), j) != basis_.end(); }

    void pivot(std::size_t r, std::size_t col) {
        Rational inv = 1 / rows_[r][col];
        for (auto& v : rows_[r]) v *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || rows_[i][col] == 0) continue;
            Rational f = rows_[i][col];
            for (std::size_t j = 0; j < rows_[i].size(); ++j)
                if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
        }
        basis_[r] = col;
    }

    // Zero-level artificials left in the basis are pivoted out, or their
    // (redundant) rows dropped.
    void drive_out_artificials() {
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            std::size_t col = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (rows_[i][j] != 0 && !is_basic(j)) {
                    col = j;
                    break;
                }
            if (col < n_) {
                pivot(i, col);
                ++i;
            } else {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    std::size_t m_, n_;
    RationalVector cost_;
    std::vector<RationalVector> rows_;
    std::vector<std::size_t> basis_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Lattice

Lattice::Lattice(RationalMatrix basis, std::string provenance)
    : provenance_(std::move(provenance)), cache_(std::make_shared<Cache>()) {
    if (basis.cols() == 0) throw std::invalid_argument("Lattice: empty basis");
    if (latgraph::rank(basis) != basis.cols()) throw std::invalid_argument("Lattice: basis columns are linearly dependent");
    gram_ = gram_of(basis);
    basis_ = std::move(basis);
}

Lattice Lattice::from_gram(RationalMatrix gram, std::string provenance) {
    if (!gram.is_square() || gram.rows() == 0) throw std::invalid_argument("Lattice::from_gram: gram must be square and nonempty");
    ldlt(gram);  // validates symmetry and positive definiteness
    Lattice l;
    l.gram_ = std::move(gram);
    l.provenance_ = std::move(provenance);
    l.cache_ = std::make_shared<Cache>();
    return l;
}

const RationalMatrix& Lattice::basis() const {
    if (!basis_) throw std::logic_error("Lattice '" + provenance_ + "' has no ambient basis");
    return *basis_;
}

Rational Lattice::determinant() const { return latgraph::determinant(gram_); }

const MinimalVectorSet& Lattice::minimal_vectors() const {
    std::call_once(cache_->once, [this] { cache_->minimal = latgraph::minimal_vectors(*this); });
    return *cache_->minimal;
}

RationalVector Lattice::ambient(const IntegerVector& coords) const {
    const RationalMatrix& b = basis();
    RationalVector out(b.rows(), 0);
    for (std::size_t c = 0; c < b.cols(); ++c) {
        if (coords[c] == 0) continue;
        for (std::size_t r = 0; r < b.rows(); ++r) out[r] += b(r, c) * coords[c];
    }
    return out;
}

Rational Lattice::inner(const IntegerVector& a, const IntegerVector& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j)
            if (b[j] != 0) s += gram_(i, j) * a[i] * b[j];
    }
    return s;
}

Rational Lattice::norm(const IntegerVector& coords) const { return inner(coords, coords); }

Lattice lattice_from_generators(const std::vector<RationalVector>& vectors, std::string provenance) {
    if (vectors.empty()) throw std::invalid_argument("lattice_from_generators: no vectors");
    const std::size_t dim = vectors.front().size();
    bool any = false;
    for (const auto& v : vectors) any = any || !is_zero(v);
    if (!any) throw std::invalid_argument("lattice_from_generators: all vectors are zero");
    return Lattice(hnf_column_basis(vectors, dim), std::move(provenance));
}

Lattice graph_lattice(const Graph& g, const Rational& lambda) {
    EigenProjection p = eigenprojection(g, lambda);
    return lattice_from_generators(p.projection.columns(), "L(" + g.label() + "," + to_string(lambda) + ")");
}

// ---------------------------------------------------------------------------
// Reduction and enumeration

std::vector<IntegerVector> lll_reduce(const RationalMatrix& gram, double delta) {
    const std::size_t n = gram.rows();
    const Integer den = gram.denominator_lcm();
    std::vector<std::vector<Integer>> g(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i][j] = Rational(gram(i, j) * den).get_num();
    std::vector<IntegerVector> u(n, IntegerVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
    if (n < 2) return u;

    std::vector<std::vector<long double>> mu(n, std::vector<long double>(n, 0));
    std::vector<long double> bstar(n, 0);
    auto row = [&](std::size_t i) {
        for (std::size_t j = 0; j < i; ++j) {
            long double s = g[i][j].get_d();
            for (std::size_t l = 0; l < j; ++l) s -= mu[j][l] * mu[i][l] * bstar[l];
            mu[i][j] = s / bstar[j];
        }
        long double s = g[i][i].get_d();
        for (std::size_t l = 0; l < i; ++l) s -= mu[i][l] * mu[i][l] * bstar[l];
        bstar[i] = s;
    };
    for (std::size_t i = 0; i < n; ++i) row(i);

    auto reduce = [&](std::size_t k, std::size_t j, const Integer& q) {
        g[k][k] += q * q * g[j][j] - 2 * q * g[k][j];
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            g[k][i] -= q * g[j][i];
            g[i][k] = g[k][i];
        }
        for (std::size_t i = 0; i < n; ++i) u[k][i] -= q * u[j][i];
    };

    std::size_t k = 1;
    std::size_t steps = 0;
    while (k < n) {
        if (++steps > 1'000'000) throw std::runtime_error("lll_reduce: no convergence");
        for (int pass = 0;; ++pass) {
            row(k);
            if (pass > 200) throw std::runtime_error("lll_reduce: size reduction did not converge");
            bool changed = false;
            for (std::size_t j = k; j-- > 0;) {
                long double m = mu[k][j];
                if (std::fabs(m) <= 0.5L + 1e-9L) continue;
                Integer q(static_cast<double>(std::nearbyint(m)));
                if (q == 0) continue;
                reduce(k, j, q);
                long double qd = q.get_d();
                for (std::size_t l = 0; l < j; ++l) mu[k][l] -= qd * mu[j][l];
                mu[k][j] -= qd;
                changed = true;
            }
            if (!changed) break;
        }
        if (bstar[k] < (static_cast<long double>(delta) - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
            std::swap(g[k], g[k - 1]);
            for (auto& r : g) std::swap(r[k], r[k - 1]);
            std::swap(u[k], u[k - 1]);
            row(k - 1);
            k = std::max<std::size_t>(k - 1, 1);
        } else {
            ++k;
        }
    }
    return u;
}

namespace {

struct Enumerator {
    std::size_t n;
    std::vector<std::vector<long double>> l;  // unit lower LDL factor
    std::vector<long double> d;
    long double radius;
    std::vector<std::vector<Integer>> gi;     // denominator-cleared reduced Gram
    Integer bound_num;                        // accept x^T gi x <= bound_num / bound_den
    Integer bound_den;
    std::vector<long> x;
    std::vector<std::vector<long>> hits;
    std::vector<Integer> hit_norms;
    std::size_t max_count;

    void leaf() {
        Integer s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            Integer row = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (x[j] != 0) row += gi[i][j] * x[j];
            s += row * x[i];
        }
        if (s * bound_den > bound_num) return;
        hits.push_back(x);
        hit_norms.push_back(s);
        if (hits.size() > max_count) throw std::length_error("short_vectors: more than max_count vectors");
    }

    void search(std::size_t i, long double partial, bool higher_zero) {
        long double c = 0;
        for (std::size_t j = i + 1; j < n; ++j) c -= l[j][i] * x[j];
        long double rem = radius - partial;
        if (rem < 0) return;
        long double w = std::sqrt(rem / d[i]);
        long lo = static_cast<long>(std::ceil(c - w - 1e-9L));
        long hi = static_cast<long>(std::floor(c + w + 1e-9L));
        if (higher_zero) lo = std::max(lo, 0L);
        for (long v = lo; v <= hi; ++v) {
            x[i] = v;
            long double t = v - c;
            long double p = partial + d[i] * t * t;
            if (p > radius) continue;
            bool zero = higher_zero && v == 0;
            if (i == 0) {
                if (!zero) leaf();
            } else {
                search(i - 1, p, zero);
            }
        }
        x[i] = 0;
    }
};

}  // namespace

std::vector<ShortVector> short_vectors(const RationalMatrix& gram, const Rational& bound, std::size_t max_count) {
    const std::size_t n = gram.rows();
    std::vector<ShortVector> out;
    if (n == 0 || bound <= 0) return out;

    auto u = lll_reduce(gram);
    RationalMatrix umat = integer_columns_matrix(u, n);
    RationalMatrix reduced = umat.transpose() * gram * umat;
    Ldlt f = ldlt(reduced);

    Enumerator e;
    e.n = n;
    e.l.assign(n, std::vector<long double>(n, 0));
    e.d.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        e.d[i] = static_cast<long double>(f.diagonal[i].get_d());
        for (std::size_t j = 0; j < n; ++j) e.l[i][j] = static_cast<long double>(f.lower(i, j).get_d());
    }
    e.radius = static_cast<long double>(bound.get_d()) * (1 + 1e-9L) + 1e-12L;
    const Integer den = reduced.denominator_lcm();
    e.gi.assign(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e.gi[i][j] = Rational(reduced(i, j) * den).get_num();
    Rational scaled_bound = bound * den;
    e.bound_num = scaled_bound.get_num();
    e.bound_den = scaled_bound.get_den();
    e.x.assign(n, 0);
    e.max_count = max_count;
    e.search(n - 1, 0, true);

    out.reserve(e.hits.size());
    for (std::size_t h = 0; h < e.hits.size(); ++h) {
        ShortVector sv;
        sv.coords.assign(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (e.hits[h][j] == 0) continue;
            for (std::size_t i = 0; i < n; ++i) sv.coords[i] += u[j][i] * e.hits[h][j];
        }
        // Canonical sign: last nonzero original coordinate positive.
        for (std::size_t i = n; i-- > 0;)
            if (sv.coords[i] != 0) {
                if (sv.coords[i] < 0) sv.coords = negated(sv.coords);
                break;
            }
        sv.norm = Rational(e.hit_norms[h], den);
        sv.norm.canonicalize();
        out.push_back(std::move(sv));
    }
    std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return a.coords < b.coords;
    });
    return out;
}

MinimalVectorSet minimal_vectors(const Lattice& l) {
    const std::size_t n = l.rank();
    if (n == 0) throw std::invalid_argument("minimal_vectors: rank-0 lattice");
    auto u = lll_reduce(l.gram());
    Rational bound = l.norm(u[0]);
    for (const auto& col : u) bound = std::min(bound, l.norm(col));
    auto sv = short_vectors(l.gram(), bound);
    if (sv.empty()) throw std::logic_error("minimal_vectors: enumeration missed a basis vector");

    MinimalVectorSet out;
    out.min_norm_sq = sv.front().norm;
    for (const auto& v : sv) {
        if (v.norm != out.min_norm_sq) break;
        out.vectors.push_back(v.coords);
        out.vectors.push_back(negated(v.coords));
    }
    if (l.has_basis())
        for (const auto& v : out.vectors) out.ambient_vectors.push_back(l.ambient(v));
    return out;
}

// ---------------------------------------------------------------------------
// Eutaxy and perfection

EutaxyCertificate strong_eutaxy_check(const Lattice& l) {
    const auto& mv = l.minimal_vectors();
    const std::size_t k = l.rank();
    RationalMatrix m(k, k);
    for (const auto& x : mv.vectors)
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) m(a, b) += x[a] * x[b];
    // Sum x x^T = t G^{-1} in coordinates  <=>  (Sum x x^T) G = t I.
    RationalMatrix mg = m * l.gram();
    Rational t = mg(0, 0);
    EutaxyCertificate cert;
    if (mg != RationalMatrix::identity(k) * t) return cert;
    cert.kind = EutaxyKind::strong;
    cert.coefficient = 1 / t;
    cert.coefficients.assign(mv.vectors.size(), cert.coefficient);
    return cert;
}

EutaxyCertificate weak_eutaxy_check(const Lattice& l) {
    EutaxyCertificate strong = strong_eutaxy_check(l);
    if (strong.kind == EutaxyKind::strong) return strong;

    const auto& mv = l.minimal_vectors();
    const std::size_t k = l.rank();
    const std::size_t pairs = mv.vectors.size() / 2;
    const RationalVector target = sym_entries(inverse(l.gram()));
    std::vector<RationalVector> outer;
    for (std::size_t p = 0; p < pairs; ++p) outer.push_back(sym_outer(mv.vectors[2 * p]));

    // Pair coefficients c_p = t + s_p with t, s_p >= 0; maximize t.
    const std::size_t rows = sym_dim(k);
    std::vector<RationalVector> a(rows, RationalVector(pairs + 1, 0));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t p = 0; p < pairs; ++p) {
            a[r][p] = outer[p][r];
            a[r][pairs] += outer[p][r];
        }
    }
    RationalVector cost(pairs + 1, 0);
    cost[pairs] = -1;
    ExactSimplex lp(a, target, cost);
    EutaxyCertificate cert;
    if (lp.solve() != ExactSimplex::Status::optimal) return cert;
    RationalVector sol = lp.solution();
    if (sol[pairs] <= 0) return cert;

    RationalVector check(rows, 0);
    cert.coefficients.reserve(mv.vectors.size());
    for (std::size_t p = 0; p < pairs; ++p) {
        Rational c = sol[pairs] + sol[p];
        for (std::size_t r = 0; r < rows; ++r) check[r] += c * outer[p][r];
        // split evenly between x and -x
        cert.coefficients.push_back(c / 2);
        cert.coefficients.push_back(c / 2);
    }
    if (check != target) throw std::logic_error("weak_eutaxy_check: simplex certificate failed verification");
    cert.kind = EutaxyKind::weak;
    return cert;
}

bool perfection_check(const Lattice& l) {
    const auto& mv = l.minimal_vectors();
    const std::size_t k = l.rank();
    const std::size_t pairs = mv.vectors.size() / 2;
    if (pairs < sym_dim(k)) return false;
    RationalMatrix m(pairs, sym_dim(k));
    for (std::size_t p = 0; p < pairs; ++p) {
        auto s = sym_outer(mv.vectors[2 * p]);
        for (std::size_t c = 0; c < s.size(); ++c) m(p, c) = s[c];
    }
    return rank(m) == sym_dim(k);
}

bool is_well_rounded(const Lattice& l) {
    const auto& mv = l.minimal_vectors();
    return rank(integer_columns_matrix(mv.vectors, l.rank())) == l.rank();
}

// ---------------------------------------------------------------------------
// Constructions

Lattice dual_lattice(const Lattice& l) {
    RationalMatrix ginv = inverse(l.gram());
    std::string name = "dual(" + l.provenance() + ")";
    if (l.has_basis()) return Lattice(l.basis() * ginv, name);
    return Lattice::from_gram(ginv, name);
}

Lattice tensor_product(const Lattice& a, const Lattice& b) {
    std::string name = "tensor(" + a.provenance() + "," + b.provenance() + ")";
    if (a.has_basis() && b.has_basis()) return Lattice(kronecker(a.basis(), b.basis()), name);
    return Lattice::from_gram(kronecker(a.gram(), b.gram()), name);
}

Lattice orthogonal_sum(const Lattice& a, const Lattice& b) {
    std::string name = "sum(" + a.provenance() + "," + b.provenance() + ")";
    if (a.has_basis() && b.has_basis()) return Lattice(block_diagonal(a.basis(), b.basis()), name);
    return Lattice::from_gram(block_diagonal(a.gram(), b.gram()), name);
}

Lattice scaled(const Lattice& l, const Rational& factor_sq) {
    if (factor_sq <= 0) throw std::invalid_argument("scaled: factor must be positive");
    std::string name = "scaled(" + l.provenance() + "," + to_string(factor_sq) + ")";
    if (l.has_basis() && mpz_perfect_square_p(factor_sq.get_num_mpz_t()) &&
        mpz_perfect_square_p(factor_sq.get_den_mpz_t())) {
        Rational f(sqrt(factor_sq.get_num()), sqrt(factor_sq.get_den()));
        return Lattice(l.basis() * f, name);
    }
    return Lattice::from_gram(l.gram() * factor_sq, name);
}

Lattice change_basis(const Lattice& l, const std::vector<IntegerVector>& transform) {
    RationalMatrix u = integer_columns_matrix(transform, l.rank());
    Rational d = determinant(u);
    if (d != 1 && d != -1) throw std::invalid_argument("change_basis: transform is not unimodular");
    if (l.has_basis()) return Lattice(l.basis() * u, l.provenance());
    return Lattice::from_gram(u.transpose() * l.gram() * u, l.provenance());
}

Lattice kernel_sublattice(const Lattice& l, const RationalMatrix& constraints, std::string provenance) {
    RationalMatrix cb = constraints * l.basis();
    IntegerMatrix m(cb.rows(), std::vector<Integer>(cb.cols()));
    for (std::size_t r = 0; r < cb.rows(); ++r) {
        Integer den = 1;
        for (std::size_t c = 0; c < cb.cols(); ++c) den = lcm(den, cb(r, c).get_den());
        for (std::size_t c = 0; c < cb.cols(); ++c) m[r][c] = Rational(cb(r, c) * den).get_num();
    }
    IntegerMatrix k = integer_kernel(m, cb.cols());
    if (k.empty() || k[0].empty()) throw std::invalid_argument("kernel_sublattice: kernel is trivial");
    RationalMatrix km(k.size(), k[0].size());
    for (std::size_t r = 0; r < k.size(); ++r)
        for (std::size_t c = 0; c < k[0].size(); ++c) km(r, c) = k[r][c];
    return Lattice(l.basis() * km, std::move(provenance));
}

// ---------------------------------------------------------------------------
// Coherence and packing

Rational coherence_sq(const Lattice& l) {
    if (l.rank() < 2) throw std::invalid_argument("coherence: rank must be at least 2");
    const auto& mv = l.minimal_vectors();
    const Rational m2 = mv.min_norm_sq * mv.min_norm_sq;
    Rational best = 0;
    for (std::size_t i = 0; i < mv.vectors.size(); i += 2)
        for (std::size_t j = i + 2; j < mv.vectors.size(); j += 2) {
            Rational ip = l.inner(mv.vectors[i], mv.vectors[j]);
            Rational c = ip * ip / m2;
            if (c > best) best = c;
        }
    return best;
}

double unit_ball_volume(std::size_t n) {
    const double h = static_cast<double>(n) / 2.0;
    return std::exp(h * std::log(std::numbers::pi) - std::lgamma(h + 1.0));
}

double packing_density(const Lattice& l) {
    const std::size_t n = l.rank();
    const auto& mv = l.minimal_vectors();
    // log delta = log omega_n + (n/2) log m - n log 2 - (1/2) log det G
    double log_m = std::log(mv.min_norm_sq.get_d());
    double log_det = std::log(l.determinant().get_d());
    double h = static_cast<double>(n) / 2.0;
    return std::exp(std::log(unit_ball_volume(n)) + h * log_m - static_cast<double>(n) * std::log(2.0) - 0.5 * log_det);
}

CoherenceBoundReport coherence_bound_check(const Lattice& l, const std::vector<IntegerVector>& minimal_basis) {
    const std::size_t n = l.rank();
    const auto& mv = l.minimal_vectors();
    if (minimal_basis.size() != n) throw std::invalid_argument("coherence_bound_check: need exactly rank vectors");
    for (const auto& v : minimal_basis) {
        if (v.size() != n) throw std::invalid_argument("coherence_bound_check: coordinate length mismatch");
        if (l.norm(v) != mv.min_norm_sq) throw std::invalid_argument("coherence_bound_check: vector is not minimal");
    }
    RationalMatrix v = integer_columns_matrix(minimal_basis, n);
    Rational d = determinant(v);
    if (d != 1 && d != -1) throw std::invalid_argument("coherence_bound_check: vectors are not a lattice basis");

    RationalMatrix w = v.transpose() * l.gram() * v;
    CoherenceBoundReport rep;
    Rational prev = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        Rational cur = determinant(w.submatrix(0, 0, i, i));
        if (i >= 2) rep.cos_sq.push_back(1 - cur / (prev * mv.min_norm_sq));
        prev = cur;
    }
    Rational mn = 1;
    for (std::size_t i = 0; i < n; ++i) mn *= mv.min_norm_sq;
    rep.bound_sq = 1 - l.determinant() / mn;
    rep.holds = std::all_of(rep.cos_sq.begin(), rep.cos_sq.end(), [&](const Rational& c) { return c <= rep.bound_sq; });
    rep.density = packing_density(l);
    return rep;
}

std::optional<std::vector<IntegerVector>> primitive_basis_from(const std::vector<IntegerVector>& candidates,
                                                              std::size_t n) {
    std::vector<IntegerVector> chosen;
    for (const auto& c : candidates) {
        if (chosen.size() == n) break;
        // chosen + c is primitive iff the column HNF of its transpose has unit pivots.
        IntegerMatrix rows;
        for (const auto& v : chosen) rows.push_back(v);
        rows.push_back(c);
        ColumnHnf h = column_hnf(rows, n, false);
        if (h.rank != rows.size()) continue;
        Integer prod = 1;
        for (std::size_t i = 0; i < h.rank; ++i) {
            // pivot of column i: first nonzero entry
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (h.h[r][i] != 0) {
                    prod *= h.h[r][i];
                    break;
                }
        }
        if (abs(prod) == 1) chosen.push_back(c);
    }
    if (chosen.size() != n) return std::nullopt;
    return chosen;
}

std::optional<std::vector<IntegerVector>> minimal_vector_basis(const Lattice& l) {
    const auto& mv = l.minimal_vectors();
    std::vector<IntegerVector> reps;
    for (std::size_t i = 0; i < mv.vectors.size(); i += 2) reps.push_back(mv.vectors[i]);
    return primitive_basis_from(reps, l.rank());
}

// ---------------------------------------------------------------------------
// Text formats

std::string write_gram(const RationalMatrix& gram) {
    std::ostringstream os;
    os << gram.rows() << "\n";
    for (std::size_t r = 0; r < gram.rows(); ++r) {
        for (std::size_t c = 0; c < gram.cols(); ++c) os << (c ? " " : "") << to_string(gram(r, c));
        os << "\n";
    }
    return os.str();
}

RationalMatrix read_gram(const std::string& text) {
    std::istringstream is(text);
    long n = 0;
    if (!(is >> n) || n <= 0) throw std::invalid_argument("read_gram: expected positive rank on first line");
    const auto k = static_cast<std::size_t>(n);
    RationalMatrix g(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) {
            std::string tok;
            if (!(is >> tok)) throw std::invalid_argument("read_gram: expected " + std::to_string(k * k) + " entries");
            g(r, c) = parse_rational(tok);
        }
    std::string extra;
    if (is >> extra) throw std::invalid_argument("read_gram: trailing data '" + extra + "'");
    if (!g.is_symmetric()) throw std::invalid_argument("read_gram: matrix is not symmetric");
    return g;
}

std::string write_vectors(const std::vector<IntegerVector>& vectors) {
    std::ostringstream os;
    for (const auto& v : vectors) {
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i].get_str();
        os << "\n";
    }
    return os.str();
}

}  // namespace latgraph
