#include "brcover/exact_linalg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

namespace brcover {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows_ * cols_) {
        throw DimensionError("matrix of shape " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                             " given " + std::to_string(entries_.size()) + " entries");
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<std::vector<long>> copy;
    for (const auto& r : rows) copy.emplace_back(r);
    const std::size_t cols = copy.empty() ? 0 : copy.front().size();
    return from_rows(copy, cols);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols)
{
    std::vector<Integer> entries;
    entries.reserve(rows.size() * cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw DimensionError("row " + std::to_string(i) + " has length " + std::to_string(rows[i].size()) +
                                 ", expected " + std::to_string(cols));
        }
        for (long x : rows[i]) entries.emplace_back(x);
    }
    return IntMatrix(rows.size(), cols, std::move(entries));
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_symmetric() const
{
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows()) {
        throw DimensionError("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    }
    return c;
}

IntMatrix block_diagonal(std::span<const IntMatrix> blocks)
{
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    IntMatrix out(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

std::string to_string(const IntMatrix& m)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) swap(m(i, a), m(i, b));
}

// row[dst] += factor * row[src]
void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (sgn(m(src, j)) != 0) m(dst, j) += factor * m(src, j);
}

// col[dst] += factor * col[src]
void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (sgn(m(i, src)) != 0) m(i, dst) += factor * m(i, src);
}

// Smallest nonzero |entry| in the trailing block starting at (t, t).
std::optional<std::pair<std::size_t, std::size_t>> smallest_nonzero(const IntMatrix& m, std::size_t t)
{
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < m.rows(); ++i) {
        for (std::size_t j = t; j < m.cols(); ++j) {
            if (sgn(m(i, j)) == 0) continue;
            Integer a = abs(m(i, j));
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = a;
                if (best_abs == 1) return best;
            }
        }
    }
    return best;
}

}  // namespace

std::vector<Integer> SnfResult::divisors() const
{
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
    return out;
}

SnfResult snf(const IntMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SnfResult r{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& d = r.d;

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            auto pivot = smallest_nonzero(d, t);
            if (!pivot) return r;  // trailing block is zero
            swap_rows(d, t, pivot->first);
            swap_rows(r.u, t, pivot->first);
            swap_cols(d, t, pivot->second);
            swap_cols(r.v, t, pivot->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(d(i, t)) == 0) continue;
                Integer q = d(i, t) / d(t, t);
                if (q != 0) {
                    add_row_multiple(d, i, t, -q);
                    add_row_multiple(r.u, i, t, -q);
                }
                if (sgn(d(i, t)) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(d(t, j)) == 0) continue;
                Integer q = d(t, j) / d(t, t);
                if (q != 0) {
                    add_col_multiple(d, j, t, -q);
                    add_col_multiple(r.v, j, t, -q);
                }
                if (sgn(d(t, j)) != 0) clean = false;
            }
            if (!clean) continue;

            // Row and column are clear; enforce divisibility of the trailing block.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (sgn(d(i, j)) != 0 && !mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
                        add_row_multiple(d, t, i, Integer(1));
                        add_row_multiple(r.u, t, i, Integer(1));
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }
        if (sgn(d(t, t)) < 0) {
            for (std::size_t j = 0; j < n; ++j) d(t, j) = -d(t, j);
            for (std::size_t j = 0; j < m; ++j) r.u(t, j) = -r.u(t, j);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------

Integer det(const IntMatrix& a)
{
    if (!a.is_square()) {
        throw DimensionError("determinant of non-square " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " matrix");
    }
    const std::size_t n = a.rows();
    if (n == 0) return 1;

    IntMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(m(p, k)) == 0) ++p;
            if (p == n) return 0;
            swap_rows(m, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& a)
{
    // Integer row echelon; each touched row is divided by its content to keep entries small.
    IntMatrix m = a;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        swap_rows(m, r, p);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (sgn(m(i, c)) == 0) continue;
            Integer pivot = m(r, c);
            Integer lead = m(i, c);
            Integer content = 0;
            for (std::size_t j = c; j < m.cols(); ++j) {
                m(i, j) = pivot * m(i, j) - lead * m(r, j);
                mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), m(i, j).get_mpz_t());
            }
            if (content > 1)
                for (std::size_t j = c; j < m.cols(); ++j)
                    mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), content.get_mpz_t());
        }
        ++r;
    }
    return r;
}

std::size_t abelianized_b1(std::size_t generators, const std::vector<std::vector<long>>& relators)
{
    const IntMatrix rel = IntMatrix::from_rows(relators, generators);
    return generators - rank(rel);
}

// ---------------------------------------------------------------------------

RationalVector::RationalVector(std::vector<Rational> coords) : coords_(std::move(coords))
{
    for (auto& c : coords_) c.canonicalize();
}

RationalVector::RationalVector(std::initializer_list<Rational> coords)
    : RationalVector(std::vector<Rational>(coords)) {}

Rational RationalVector::pair(std::span<const Integer> v) const
{
    if (v.size() != coords_.size()) {
        throw DimensionError("pairing a length-" + std::to_string(coords_.size()) +
                             " class with a length-" + std::to_string(v.size()) + " vector");
    }
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += coords_[i] * Rational(v[i]);
    return s;
}

Integer bilinear(std::span<const Integer> x, const IntMatrix& q, std::span<const Integer> y)
{
    if (x.size() != q.rows() || y.size() != q.cols()) throw DimensionError("bilinear form shape mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * q(i, j) * y[j];
    }
    return s;
}

Rational parse_rational(const std::string& text)
{
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0) throw DomainError("not a rational number: '" + text + "'");
    if (sgn(r.get_den()) == 0) throw DomainError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& r)
{
    Rational c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace brcover
