#include "latgraph/exactq.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <mutex>
#include <sstream>
#include <utility>

namespace latgraph {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        std::string str(s);
        if (!str.empty() && str.front() == '+') str.erase(0, 1);
        Integer z;
        if (str.empty() || z.set_str(str, 10) != 0)
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        return z;
    };
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return make_rational(parse_int(text));
    return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// RationalMatrix

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (const auto& x : r) {
            Rational q = x;
            q.canonicalize();
            data_.push_back(q);
        }
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns, std::size_t rows) {
    RationalMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

RationalVector RationalMatrix::column(std::size_t c) const {
    RationalVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

RationalVector RationalMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<RationalVector> RationalMatrix::columns() const {
    std::vector<RationalVector> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RationalMatrix RationalMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("submatrix out of range");
    RationalMatrix s(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) s(r, c) = (*this)(r0 + r, c0 + c);
    return s;
}

Rational RationalMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool RationalMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

bool RationalMatrix::is_integral() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

Integer RationalMatrix::denominator_lcm() const {
    Integer l = 1;
    for (const auto& q : data_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
    RationalMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + o.data_[i];
    return s;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
    RationalMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - o.data_[i];
    return s;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in *");
    RationalMatrix p(rows_, o.cols_);
    Rational acc;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                const Rational& b = o(k, c);
                if (b == 0) continue;
                acc = a * b;
                p(r, c) += acc;
            }
        }
    }
    return p;
}

RationalMatrix RationalMatrix::operator*(const Rational& s) const {
    RationalMatrix p = *this;
    for (auto& q : p.data_) q *= s;
    return p;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("shape mismatch in matrix*vector");
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != 0 && v[c] != 0) out[r] += (*this)(r, c) * v[c];
    return out;
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return k;
}

RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    RationalMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

RationalVector scaled(const RationalVector& v, const Rational& s) {
    RationalVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
    return out;
}

bool is_zero(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

// ---------------------------------------------------------------------------
// Elimination

RrefResult rref(const RationalMatrix& m) {
    RrefResult res{m, {}, 0};
    RationalMatrix& a = res.matrix;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
        Rational inv = 1 / a(row, col);
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            Rational f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                if (a(row, c) != 0) a(r, c) -= f * a(row, c);
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = res.pivots.size();
    return res;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank; }

Rational determinant(const RationalMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    RationalMatrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col) == 0) continue;
            Rational f = a(r, col) / a(col, col);
            for (std::size_t c = col; c < n; ++c)
                if (a(col, c) != 0) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b) {
    if (!a.is_square() || a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
    const std::size_t n = a.rows();
    RrefResult r = rref(hstack(a, b));
    if (r.rank < n || r.pivots[n - 1] != n - 1) throw std::domain_error("solve: singular matrix");
    return r.matrix.submatrix(0, n, n, b.cols());
}

RationalMatrix inverse(const RationalMatrix& m) {
    return solve(m, RationalMatrix::identity(m.rows()));
}

std::vector<RationalVector> nullspace_basis(const RationalMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.matrix(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Polynomials

void IntPolynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rational IntPolynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

IntPolynomial IntPolynomial::from_roots(const std::vector<std::pair<Integer, int>>& roots) {
    IntPolynomial p{{1}};
    for (const auto& [r, mult] : roots)
        for (int i = 0; i < mult; ++i) p = p * IntPolynomial{{-r, 1}};
    return p;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPolynomial p;
    p.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) p.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    p.trim();
    return p;
}

std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = p.degree(); d >= 0; --d) {
        const Integer& c = p.coeffs[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        Integer mag = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (mag != 1 || d == 0) os << mag.get_str();
        if (d > 0) os << "x";
        if (d > 1) os << "^" << d;
        first = false;
    }
    return os.str();
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// The index-th prime below 2^61 (index 0 is the largest).
u64 crt_prime(std::size_t index) {
    static std::mutex mu;
    static std::vector<u64> primes;
    std::lock_guard lock(mu);
    u64 candidate = primes.empty() ? (u64{1} << 61) - 1 : primes.back() - 2;
    while (primes.size() <= index) {
        Integer z;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &candidate);
        if (mpz_probab_prime_p(z.get_mpz_t(), 30) > 0) primes.push_back(candidate);
        candidate -= 2;
    }
    return primes[index];
}

u64 reduce_mod(const Integer& z, u64 p) {
    Integer r;
    Integer pz;
    mpz_import(pz.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t());
    u64 out = 0;
    mpz_export(&out, nullptr, 1, sizeof(u64), 0, 0, r.get_mpz_t());
    return out;
}

// Characteristic polynomial modulo p via Hessenberg reduction.
std::vector<u64> charpoly_mod(std::vector<std::vector<u64>> h, u64 p) {
    const std::size_t n = h.size();
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t piv = m;
        while (piv < n && h[piv][m - 1] == 0) ++piv;
        if (piv == n) continue;
        if (piv != m) {
            std::swap(h[piv], h[m]);
            for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][m]);
        }
        u64 inv = invmod(h[m][m - 1], p);
        for (std::size_t i = m + 1; i < n; ++i) {
            if (h[i][m - 1] == 0) continue;
            u64 u = mulmod(h[i][m - 1], inv, p);
            for (std::size_t c = 0; c < n; ++c)
                h[i][c] = (h[i][c] + p - mulmod(u, h[m][c], p)) % p;
            for (std::size_t r = 0; r < n; ++r) h[r][m] = (h[r][m] + mulmod(u, h[r][i], p)) % p;
        }
    }
    // polys[k] = charpoly of leading k x k block, coefficients low-first.
    std::vector<std::vector<u64>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<u64> next(k + 1, 0);
        const auto& prev = polys[k - 1];
        u64 diag = h[k - 1][k - 1];
        for (std::size_t i = 0; i < prev.size(); ++i) {
            next[i + 1] = (next[i + 1] + prev[i]) % p;
            next[i] = (next[i] + p - mulmod(diag, prev[i], p)) % p;
        }
        u64 prod = 1;
        for (std::size_t i = 1; i < k; ++i) {
            // row k-1-i, column k-1, times product of subdiagonal h[j][j-1], j = k-i .. k-1
            prod = mulmod(prod, h[k - i][k - i - 1], p);
            if (prod == 0) break;
            u64 coef = mulmod(h[k - 1 - i][k - 1], prod, p);
            if (coef == 0) continue;
            const auto& q = polys[k - 1 - i];
            for (std::size_t j = 0; j < q.size(); ++j) next[j] = (next[j] + p - mulmod(coef, q[j], p)) % p;
        }
        polys[k] = std::move(next);
    }
    return polys[n];
}

}  // namespace

IntPolynomial charpoly(const RationalMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("charpoly of non-square matrix");
    if (!m.is_integral()) throw std::invalid_argument("charpoly requires integer entries");
    const std::size_t n = m.rows();
    if (n == 0) return IntPolynomial{{1}};

    // Every coefficient is a signed sum of principal minors, so
    // |c_k| <= 2^n * prod_i max(1, ||row_i||).
    Integer bound = 1;
    bound <<= static_cast<mp_bitcnt_t>(n);
    for (std::size_t r = 0; r < n; ++r) {
        Integer sq = 0;
        for (std::size_t c = 0; c < n; ++c) sq += m(r, c).get_num() * m(r, c).get_num();
        Integer root = sqrt(sq) + 1;
        bound *= root;
    }
    bound = 2 * bound + 1;

    std::vector<Integer> residues(n + 1, 0);
    Integer modulus = 1;
    for (std::size_t index = 0; modulus <= bound; ++index) {
        u64 p = crt_prime(index);
        std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) h[r][c] = reduce_mod(m(r, c).get_num(), p);
        std::vector<u64> cp = charpoly_mod(std::move(h), p);

        Integer pz;
        mpz_import(pz.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
        Integer minv;
        mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
        for (std::size_t i = 0; i <= n; ++i) {
            // x = residue + modulus * t, with t = (cp_i - residue) * modulus^{-1} mod p
            Integer ci;
            mpz_import(ci.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &cp[i]);
            Integer t = (ci - residues[i]) * minv;
            mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
            residues[i] += modulus * t;
        }
        modulus *= pz;
    }
    IntPolynomial out;
    out.coeffs.resize(n + 1);
    Integer half = modulus / 2;
    for (std::size_t i = 0; i <= n; ++i) out.coeffs[i] = residues[i] > half ? residues[i] - modulus : residues[i];
    return out;
}

namespace {

std::vector<Integer> positive_divisors_small(const Integer& z) {
    if (!z.fits_ulong_p() || z > 1000000) throw std::domain_error("rational_roots: leading coefficient too large");
    unsigned long v = z.get_ui();
    std::vector<Integer> out;
    for (unsigned long d = 1; d <= v; ++d)
        if (v % d == 0) out.emplace_back(d);
    return out;
}

// Deflates `poly` (rational coefficients, low first) by (x - r) as long as
// r remains a root; returns the multiplicity.
int deflate(std::vector<Rational>& poly, const Rational& r) {
    int mult = 0;
    while (poly.size() > 1) {
        std::vector<Rational> quot(poly.size() - 1);
        Rational carry = 0;
        for (std::size_t i = poly.size(); i-- > 1;) {
            carry = poly[i] + carry * r;
            quot[i - 1] = carry;
        }
        // Horner: remainder = poly[0] + r * quot[0]
        Rational rem = poly[0] + r * quot[0];
        if (rem != 0) break;
        poly = std::move(quot);
        ++mult;
    }
    return mult;
}

}  // namespace

std::vector<RationalRoot> rational_roots(const IntPolynomial& p_in) {
    IntPolynomial p = p_in;
    p.trim();
    if (p.is_zero()) throw std::invalid_argument("rational_roots of zero polynomial");

    std::vector<RationalRoot> roots;
    std::size_t zero_mult = 0;
    while (zero_mult < p.coeffs.size() && p.coeffs[zero_mult] == 0) ++zero_mult;
    std::vector<Rational> work(p.coeffs.begin() + static_cast<std::ptrdiff_t>(zero_mult), p.coeffs.end());
    if (zero_mult > 0) roots.push_back({0, static_cast<int>(zero_mult)});
    if (work.size() <= 1) return roots;

    const Integer lead = abs(p.leading());
    const Integer constant = abs(p.coeffs[zero_mult]);
    const std::size_t deg = work.size() - 1;

    // Fujiwara-style bound on |root|: 2 * max_k (|a_{n-k}| / |a_n|)^{1/k}.
    Integer bound = 1;
    for (std::size_t k = 1; k <= deg; ++k) {
        Integer a = abs(p.coeffs[zero_mult + deg - k]);
        if (a == 0) continue;
        Integer ratio;
        mpz_cdiv_q(ratio.get_mpz_t(), a.get_mpz_t(), lead.get_mpz_t());
        Integer rt;
        mpz_root(rt.get_mpz_t(), ratio.get_mpz_t(), k);
        rt = 2 * (rt + 1);
        if (k == deg) {
            Integer half = ratio / 2;
            mpz_root(rt.get_mpz_t(), half.get_mpz_t(), k);
            rt = 2 * (rt + 1);
        }
        if (rt > bound) bound = rt;
    }

    std::vector<Integer> dens = lead == 1 ? std::vector<Integer>{1} : positive_divisors_small(lead);
    for (const Integer& q : dens) {
        Integer top = bound * q;
        if (!top.fits_slong_p() || top > 50000000)
            throw std::domain_error("rational_roots: root bound too large for candidate search");
        long limit = top.get_si();
        for (long a = 1; a <= limit; ++a) {
            Integer num(a);
            if (!mpz_divisible_p(constant.get_mpz_t(), num.get_mpz_t())) continue;
            if (gcd(num, q) != 1) continue;
            for (int sign : {1, -1}) {
                Rational r = make_rational(num * sign, q);
                int mult = deflate(work, r);
                if (mult > 0) roots.push_back({r, mult});
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const RationalRoot& a, const RationalRoot& b) { return a.value > b.value; });
    return roots;
}

// ---------------------------------------------------------------------------
// Hermite normal form

namespace {

void column_axpy(IntegerMatrix& a, std::size_t dst, std::size_t src, const Integer& q) {
    // col_dst -= q * col_src
    for (auto& row : a)
        if (row[src] != 0) row[dst] -= q * row[src];
}

void column_swap(IntegerMatrix& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
}

void column_negate(IntegerMatrix& a, std::size_t i) {
    for (auto& row : a) row[i] = -row[i];
}

}  // namespace

ColumnHnf column_hnf(const IntegerMatrix& m, std::size_t cols, bool want_transform) {
    IntegerMatrix a = m;
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("column_hnf: ragged matrix");
    IntegerMatrix u;
    if (want_transform) {
        u.assign(cols, std::vector<Integer>(cols, 0));
        for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
    }
    std::size_t pc = 0;
    for (std::size_t r = 0; r < a.size() && pc < cols; ++r) {
        for (;;) {
            std::size_t best = cols;
            for (std::size_t j = pc; j < cols; ++j)
                if (a[r][j] != 0 && (best == cols || abs(a[r][j]) < abs(a[r][best]))) best = j;
            if (best == cols) break;
            column_swap(a, pc, best);
            if (want_transform) column_swap(u, pc, best);
            bool done = true;
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (a[r][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[r][j].get_mpz_t(), a[r][pc].get_mpz_t());
                column_axpy(a, j, pc, q);
                if (want_transform) column_axpy(u, j, pc, q);
                if (a[r][j] != 0) done = false;
            }
            if (done) break;
        }
        if (a[r][pc] == 0) continue;
        if (a[r][pc] < 0) {
            column_negate(a, pc);
            if (want_transform) column_negate(u, pc);
        }
        for (std::size_t j = 0; j < pc; ++j) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a[r][j].get_mpz_t(), a[r][pc].get_mpz_t());
            if (q == 0) continue;
            column_axpy(a, j, pc, q);
            if (want_transform) column_axpy(u, j, pc, q);
        }
        ++pc;
    }
    ColumnHnf out;
    out.rank = pc;
    out.h.assign(a.size(), std::vector<Integer>(pc));
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < pc; ++c) out.h[r][c] = a[r][c];
    out.transform = std::move(u);
    return out;
}

IntegerMatrix integer_kernel(const IntegerMatrix& m, std::size_t cols) {
    ColumnHnf hnf = column_hnf(m, cols, true);
    IntegerMatrix k(cols, std::vector<Integer>(cols - hnf.rank));
    for (std::size_t r = 0; r < cols; ++r)
        for (std::size_t c = hnf.rank; c < cols; ++c) k[r][c - hnf.rank] = hnf.transform[r][c];
    return k;
}

RationalMatrix hnf_column_basis(const std::vector<RationalVector>& gens, std::size_t dim) {
    if (gens.empty()) return RationalMatrix(dim, 0);
    Integer l = 1;
    for (const auto& g : gens) {
        if (g.size() != dim) throw std::invalid_argument("hnf_column_basis: generator dimension mismatch");
        for (const auto& q : g) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    IntegerMatrix a(dim, std::vector<Integer>(gens.size()));
    for (std::size_t c = 0; c < gens.size(); ++c)
        for (std::size_t r = 0; r < dim; ++r) a[r][c] = gens[c][r].get_num() * (l / gens[c][r].get_den());
    ColumnHnf hnf = column_hnf(a, gens.size(), false);
    RationalMatrix basis(dim, hnf.rank);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < hnf.rank; ++c) basis(r, c) = make_rational(hnf.h[r][c], l);
    return basis;
}

// ---------------------------------------------------------------------------

Ldlt ldlt(const RationalMatrix& gram) {
    if (!gram.is_symmetric()) throw std::invalid_argument("ldlt: matrix is not symmetric");
    const std::size_t n = gram.rows();
    Ldlt f{RationalMatrix::identity(n), RationalVector(n)};
    for (std::size_t j = 0; j < n; ++j) {
        Rational d = gram(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= f.lower(j, k) * f.lower(j, k) * f.diagonal[k];
        if (d <= 0) throw std::invalid_argument("ldlt: matrix is not positive definite");
        f.diagonal[j] = d;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rational s = gram(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= f.lower(i, k) * f.lower(j, k) * f.diagonal[k];
            f.lower(i, j) = s / d;
        }
    }
    return f;
}

}  // namespace latgraph
