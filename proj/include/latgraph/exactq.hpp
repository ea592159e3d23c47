#pragma once

// Exact rational linear algebra over GMP. Nothing in here touches floating
// point; every routine returns bit-exact results.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace latgraph {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Reduced rational p/q. Throws std::domain_error on q == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "p", "-p" or "p/q" (decimal integers, optional whitespace).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Dense row-major matrix of reduced rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector column(std::size_t c) const;
    RationalVector row(std::size_t r) const;
    std::vector<RationalVector> columns() const;

    RationalMatrix transpose() const;
    RationalMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    /// Columns [c0, c0 + nc).
    RationalMatrix column_block(std::size_t c0, std::size_t nc) const { return submatrix(0, c0, rows_, nc); }

    Rational trace() const;
    bool is_symmetric() const;
    bool is_zero() const;
    /// Every entry has denominator 1.
    bool is_integral() const;
    /// Least common multiple of all entry denominators.
    Integer denominator_lcm() const;

    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator*(const Rational& s) const;
    RationalVector operator*(const RationalVector& v) const;
    bool operator==(const RationalMatrix& o) const = default;

    const std::vector<Rational>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);

Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector scaled(const RationalVector& v, const Rational& s);
bool is_zero(const RationalVector& v);

struct RrefResult {
    RationalMatrix matrix;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

RrefResult rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);
/// Throws std::domain_error when singular.
RationalMatrix inverse(const RationalMatrix& m);
/// Solves a x = b for square nonsingular a (b may have several columns).
RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b);

/// Basis of {v : m v = 0}; one vector per free column of the RREF.
std::vector<RationalVector> nullspace_basis(const RationalMatrix& m);

/// Integer polynomial, coefficients stored lowest degree first.
struct IntPolynomial {
    std::vector<Integer> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    const Integer& leading() const { return coeffs.back(); }
    Rational evaluate(const Rational& x) const;
    void trim();
    bool operator==(const IntPolynomial& o) const = default;

    static IntPolynomial from_roots(const std::vector<std::pair<Integer, int>>& roots);
};

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
std::string to_string(const IntPolynomial& p);

/// det(xI - m) for a square integer matrix. Computed by Hessenberg reduction
/// modulo word-sized primes and recombined by CRT against a Hadamard bound.
IntPolynomial charpoly(const RationalMatrix& m);

struct RationalRoot {
    Rational value;
    int multiplicity = 0;
    bool operator==(const RationalRoot& o) const = default;
};

/// All rational roots with exact multiplicities, in decreasing order.
std::vector<RationalRoot> rational_roots(const IntPolynomial& p);

/// Column Hermite normal form basis of the Z-span of `gens` (each of length
/// `dim`). Returns a dim x rank matrix, lower-triangular in echelon sense.
RationalMatrix hnf_column_basis(const std::vector<RationalVector>& gens, std::size_t dim);

/// Dense integer matrix helpers used by HNF and kernel computations.
using IntegerMatrix = std::vector<std::vector<Integer>>;  // row-major rows

struct ColumnHnf {
    IntegerMatrix h;          // rows x rank, column HNF
    IntegerMatrix transform;  // cols x cols unimodular, m * transform = [h | 0]
    std::size_t rank = 0;
};

ColumnHnf column_hnf(const IntegerMatrix& m, std::size_t cols, bool want_transform);

/// Z-basis (as columns) of {z in Z^cols : m z = 0}.
IntegerMatrix integer_kernel(const IntegerMatrix& m, std::size_t cols);

struct Ldlt {
    RationalMatrix lower;     // unit lower triangular
    RationalVector diagonal;  // all positive
};

/// gram = L diag(D) L^T exactly. Throws std::invalid_argument for
/// non-symmetric or non-positive-definite input.
Ldlt ldlt(const RationalMatrix& gram);

}  // namespace latgraph
