#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "brcover/errors.hpp"

namespace brcover {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Empty shapes are legal (0×n, n×0, 0×0).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    std::span<const Integer> entries() const { return entries_; }
    std::span<const Integer> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

    IntMatrix transpose() const;
    bool is_symmetric() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Block-diagonal sum; blocks need not be square.
IntMatrix block_diagonal(std::span<const IntMatrix> blocks);

std::string to_string(const IntMatrix& m);

/// u · a · v = d with u, v unimodular and d in Smith normal form.
struct SnfResult {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;

    /// Diagonal of d, length min(rows, cols).
    std::vector<Integer> divisors() const;
};

SnfResult snf(const IntMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination. Throws DimensionError
/// for non-square input; det of the 0×0 matrix is 1.
Integer det(const IntMatrix& a);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& a);

/// First Betti number of the abelianization of ⟨x_1..x_n | r_1..r_m⟩, each
/// relator given as its exponent-sum vector.
std::size_t abelianized_b1(std::size_t generators, const std::vector<std::vector<long>>& relators);

/// Exact rational coordinates, each kept in lowest terms with positive denominator.
class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(std::vector<Rational> coords);
    RationalVector(std::initializer_list<Rational> coords);

    std::size_t size() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    std::span<const Rational> coords() const { return coords_; }

    /// Σ coords[i] · v[i]; throws DimensionError on length mismatch.
    Rational pair(std::span<const Integer> v) const;

    friend bool operator==(const RationalVector& a, const RationalVector& b) { return a.coords_ == b.coords_; }

private:
    std::vector<Rational> coords_;
};

/// Bilinear pairing xᵀ · q · y.
Integer bilinear(std::span<const Integer> x, const IntMatrix& q, std::span<const Integer> y);

/// Parses "p/q", "p" or "-p/q" into a canonical rational. Throws DomainError.
Rational parse_rational(const std::string& text);

/// Always "p/q", q ≥ 1, lowest terms.
std::string format_rational(const Rational& r);

}  // namespace brcover
