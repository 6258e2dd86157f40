#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact matrices over any CommutativeRing.
 *
 * Storage is row-major. operator()(r, c) is 0-based like any C++ container;
 * the named matrix operations (minor_remove, submatrix, row, ...) take
 * 1-based indices so that formulas can be transcribed index for index.
 *
 * Nothing here divides: the determinant is a column-subset dynamic
 * programme over Laplace expansions, valid over rings with zero divisors.
 */

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "concepts.hpp"
#include "error.hpp"
#include "polynomial.hpp"

namespace exactla {

template <CommutativeRing R>
class Matrix {
public:
    using Element = typename R::Element;

    /// rows x cols zero matrix.
    Matrix(R ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero())
    {
    }

    Matrix(R ring, std::size_t rows, std::size_t cols, std::vector<Element> entries)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(std::move(entries))
    {
        if (data_.size() != rows_ * cols_)
            throw ShapeError("matrix entry count " + std::to_string(data_.size()) + " does not match " +
                             std::to_string(rows_) + "x" + std::to_string(cols_));
    }

    static Matrix zero(R ring, std::size_t rows, std::size_t cols) { return Matrix(std::move(ring), rows, cols); }

    static Matrix identity(R ring, std::size_t n)
    {
        Matrix m(std::move(ring), n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = m.ring_.one();
        return m;
    }

    /// Integer literal rows, embedded into the ring. Handy for tests.
    static Matrix from_ints(R ring, std::initializer_list<std::initializer_list<long>> rows)
    {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.begin()->size();
        std::vector<Element> data;
        data.reserve(r * c);
        for (const auto& row : rows) {
            if (row.size() != c)
                throw ShapeError("ragged matrix literal");
            for (long v : row)
                data.push_back(ring.from_int(BigInt(v)));
        }
        return Matrix(std::move(ring), r, c, std::move(data));
    }

    const R& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    std::span<const Element> entries() const { return data_; }

    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        if (!(a.ring_ == b.ring_) || a.rows_ != b.rows_ || a.cols_ != b.cols_)
            return false;
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            if (!a.ring_.equal(a.data_[k], b.data_[k]))
                return false;
        return true;
    }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [&](const Element& x) { return ring_.is_zero(x); });
    }

private:
    R ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> data_;
};

namespace matrix_detail {

template <CommutativeRing R>
void require_ring(const Matrix<R>& a, const Matrix<R>& b, const char* what)
{
    if (!(a.ring() == b.ring()))
        throw RingMismatch(std::string(what) + ": matrices over different rings");
}

template <CommutativeRing R>
void require_square(const Matrix<R>& a, const char* what)
{
    if (!a.is_square())
        throw ShapeError(std::string(what) + ": matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", expected square");
}

inline void require_index(std::size_t i, std::size_t bound, const char* what)
{
    if (i < 1 || i > bound)
        throw IndexError(std::string(what) + ": index " + std::to_string(i) + " outside 1.." +
                         std::to_string(bound));
}

} // namespace matrix_detail

template <CommutativeRing R>
Matrix<R> operator+(const Matrix<R>& a, const Matrix<R>& b)
{
    matrix_detail::require_ring(a, b, "matrix add");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("matrix add: shapes differ");
    Matrix<R> out(a.ring(), a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a.ring().add(a(r, c), b(r, c));
    return out;
}

template <CommutativeRing R>
Matrix<R> operator-(const Matrix<R>& a, const Matrix<R>& b)
{
    matrix_detail::require_ring(a, b, "matrix sub");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("matrix sub: shapes differ");
    Matrix<R> out(a.ring(), a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a.ring().sub(a(r, c), b(r, c));
    return out;
}

template <CommutativeRing R>
Matrix<R> operator-(const Matrix<R>& a)
{
    Matrix<R> out(a.ring(), a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a.ring().neg(a(r, c));
    return out;
}

template <CommutativeRing R>
Matrix<R> operator*(const Matrix<R>& a, const Matrix<R>& b)
{
    matrix_detail::require_ring(a, b, "matrix product");
    if (a.cols() != b.rows())
        throw ShapeError("matrix product: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    const R& ring = a.ring();
    Matrix<R> out(ring, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (ring.is_zero(a(i, k)))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) = ring.add(out(i, j), ring.mul(a(i, k), b(k, j)));
        }
    return out;
}

/// lambda * A
template <CommutativeRing R>
Matrix<R> scale(const typename R::Element& lambda, const Matrix<R>& a)
{
    Matrix<R> out(a.ring(), a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a.ring().mul(lambda, a(r, c));
    return out;
}

template <CommutativeRing R>
Matrix<R> matrix_power(const Matrix<R>& a, std::uint64_t e)
{
    matrix_detail::require_square(a, "matrix power");
    auto result = Matrix<R>::identity(a.ring(), a.rows());
    auto base = a;
    while (e > 0) {
        if (e & 1U)
            result = result * base;
        e >>= 1U;
        if (e > 0)
            base = base * base;
    }
    return result;
}

template <CommutativeRing R>
typename R::Element trace(const Matrix<R>& a)
{
    matrix_detail::require_square(a, "trace");
    auto s = a.ring().zero();
    for (std::size_t i = 0; i < a.rows(); ++i)
        s = a.ring().add(s, a(i, i));
    return s;
}

/// Determinant by dynamic programming over column subsets.
///
/// f[S] is the determinant of the submatrix formed by the first |S| rows and
/// the columns in S (kept in increasing order). Expanding along the last of
/// those rows gives f[S] = sum_{j in S} (-1)^{(|S|-1) + pos_S(j)} a_{|S|-1, j} f[S \ {j}],
/// which needs n * 2^(n-1) ring multiplications and no division.
template <CommutativeRing R>
typename R::Element det(const Matrix<R>& a)
{
    matrix_detail::require_square(a, "det");
    const std::size_t n = a.rows();
    const R& ring = a.ring();
    if (n == 0)
        return ring.one();
    if (n > 24)
        throw DomainError("det: dimension " + std::to_string(n) + " exceeds the subset-DP limit of 24");
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<typename R::Element> f(std::size_t{full} + 1, ring.zero());
    f[0] = ring.one();
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const auto row = static_cast<std::size_t>(std::popcount(mask)) - 1;
        auto acc = ring.zero();
        std::size_t pos = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (std::uint32_t{1} << j)))
                continue;
            const auto& entry = a(row, j);
            const auto& sub = f[mask & ~(std::uint32_t{1} << j)];
            if (!ring.is_zero(entry) && !ring.is_zero(sub)) {
                auto term = ring.mul(entry, sub);
                acc = ((row + pos) % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
            }
            ++pos;
        }
        f[mask] = std::move(acc);
    }
    return f[full];
}

/// Literal sum over all permutations of 1..n of sign(sigma) * prod a_{i,sigma(i)}.
/// Refuses n > 8.
template <CommutativeRing R>
typename R::Element det_leibniz(const Matrix<R>& a)
{
    matrix_detail::require_square(a, "det_leibniz");
    const std::size_t n = a.rows();
    if (n > 8)
        throw DomainError("det_leibniz: n = " + std::to_string(n) + " exceeds the limit of 8");
    const R& ring = a.ring();
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    auto total = ring.zero();
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (sigma[i] > sigma[j])
                    ++inversions;
        auto prod = ring.one();
        for (std::size_t i = 0; i < n; ++i)
            prod = ring.mul(prod, a(i, sigma[i]));
        total = (inversions % 2 == 0) ? ring.add(total, prod) : ring.sub(total, prod);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

/// A with row i and column j (1-based) crossed out.
template <CommutativeRing R>
Matrix<R> minor_remove(const Matrix<R>& a, std::size_t i, std::size_t j)
{
    matrix_detail::require_index(i, a.rows(), "minor_remove row");
    matrix_detail::require_index(j, a.cols(), "minor_remove column");
    Matrix<R> out(a.ring(), a.rows() - 1, a.cols() - 1);
    for (std::size_t r = 0, orow = 0; r < a.rows(); ++r) {
        if (r == i - 1)
            continue;
        for (std::size_t c = 0, ocol = 0; c < a.cols(); ++c) {
            if (c == j - 1)
                continue;
            out(orow, ocol++) = a(r, c);
        }
        ++orow;
    }
    return out;
}

/// Entry (x, y) of the result is a_{row_idx[x], col_idx[y]}. Indices are
/// 1-based and may repeat or come in any order.
template <CommutativeRing R>
Matrix<R> submatrix(const Matrix<R>& a, std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx)
{
    for (auto i : row_idx)
        matrix_detail::require_index(i, a.rows(), "submatrix row");
    for (auto j : col_idx)
        matrix_detail::require_index(j, a.cols(), "submatrix column");
    Matrix<R> out(a.ring(), row_idx.size(), col_idx.size());
    for (std::size_t x = 0; x < row_idx.size(); ++x)
        for (std::size_t y = 0; y < col_idx.size(); ++y)
            out(x, y) = a(row_idx[x] - 1, col_idx[y] - 1);
    return out;
}

/// Adjugate from cofactors: entry (i, j) is (-1)^{i+j} det(A with row j and column i removed).
template <CommutativeRing R>
Matrix<R> adjugate_cofactor(const Matrix<R>& a)
{
    matrix_detail::require_square(a, "adjugate");
    const std::size_t n = a.rows();
    Matrix<R> out(a.ring(), n, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            auto d = det(minor_remove(a, j, i));
            out(i - 1, j - 1) = ((i + j) % 2 == 0) ? d : a.ring().neg(d);
        }
    return out;
}

/// Applies f to every entry; the result lives in target.
template <CommutativeRing S, CommutativeRing R, class F>
Matrix<S> entrywise_map(const Matrix<R>& a, const S& target, F&& f)
{
    std::vector<typename S::Element> data;
    data.reserve(a.rows() * a.cols());
    for (const auto& x : a.entries())
        data.push_back(f(x));
    return Matrix<S>(target, a.rows(), a.cols(), std::move(data));
}

/// Four blocks glued into ((A, B), (C, D)).
template <CommutativeRing R>
struct BlockQuad {
    Matrix<R> a;
    Matrix<R> b;
    Matrix<R> c;
    Matrix<R> d;
};

template <CommutativeRing R>
Matrix<R> block2x2(const BlockQuad<R>& q)
{
    matrix_detail::require_ring(q.a, q.b, "block2x2");
    matrix_detail::require_ring(q.a, q.c, "block2x2");
    matrix_detail::require_ring(q.a, q.d, "block2x2");
    if (q.a.rows() != q.b.rows() || q.c.rows() != q.d.rows() || q.a.cols() != q.c.cols() ||
        q.b.cols() != q.d.cols())
        throw ShapeError("block2x2: blocks do not conform");
    const std::size_t n = q.a.rows(), m = q.a.cols();
    Matrix<R> out(q.a.ring(), n + q.c.rows(), m + q.b.cols());
    auto put = [&](const Matrix<R>& blk, std::size_t r0, std::size_t c0) {
        for (std::size_t r = 0; r < blk.rows(); ++r)
            for (std::size_t c = 0; c < blk.cols(); ++c)
                out(r0 + r, c0 + c) = blk(r, c);
    };
    put(q.a, 0, 0);
    put(q.b, 0, m);
    put(q.c, n, 0);
    put(q.d, n, m);
    return out;
}

/// The sole entry of a 1x1 matrix.
template <CommutativeRing R>
typename R::Element ent(const Matrix<R>& b)
{
    if (b.rows() != 1 || b.cols() != 1)
        throw ShapeError("ent: expected a 1x1 matrix, got " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    return b(0, 0);
}

/// Row j (1-based) as a 1 x cols matrix.
template <CommutativeRing R>
Matrix<R> row(const Matrix<R>& a, std::size_t j)
{
    matrix_detail::require_index(j, a.rows(), "row");
    Matrix<R> out(a.ring(), 1, a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c)
        out(0, c) = a(j - 1, c);
    return out;
}

/// B with row j (1-based) replaced by the 1 x cols matrix r.
template <CommutativeRing R>
Matrix<R> replace_row(Matrix<R> b, std::size_t j, const Matrix<R>& r)
{
    matrix_detail::require_index(j, b.rows(), "replace_row");
    if (r.rows() != 1 || r.cols() != b.cols())
        throw ShapeError("replace_row: replacement is not a matching row");
    for (std::size_t c = 0; c < b.cols(); ++c)
        b(j - 1, c) = r(0, c);
    return b;
}

template <CommutativeRing R>
Matrix<R> transpose(const Matrix<R>& a)
{
    Matrix<R> out(a.ring(), a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(c, r) = a(r, c);
    return out;
}

/// f(A) = sum_k [t^k]f * A^k, by Horner's rule.
template <CommutativeRing R>
Matrix<R> apply_to_matrix(const Polynomial<R>& f, const Matrix<R>& a)
{
    matrix_detail::require_square(a, "polynomial substitution");
    if (!(f.ring() == a.ring()))
        throw RingMismatch("polynomial substitution: polynomial and matrix over different rings");
    const std::size_t n = a.rows();
    Matrix<R> acc(a.ring(), n, n);
    for (long k = f.degree(); k >= 0; --k) {
        acc = acc * a;
        const auto c = f.coeff(k);
        for (std::size_t i = 0; i < n; ++i)
            acc(i, i) = a.ring().add(acc(i, i), c);
    }
    return acc;
}

/// A viewed as a matrix of constant polynomials.
template <CommutativeRing R>
Matrix<PolynomialRing<R>> as_constant_polys(const Matrix<R>& a)
{
    PolynomialRing<R> p(a.ring());
    return entrywise_map(a, p, [&](const typename R::Element& x) { return p.constant(x); });
}

/// t*I_n + A over R[t] (pass a negated A to get t*I_n - A).
template <CommutativeRing R>
Matrix<PolynomialRing<R>> t_identity_plus(const Matrix<R>& a)
{
    matrix_detail::require_square(a, "tI + A");
    auto m = as_constant_polys(a);
    const auto& p = m.ring();
    for (std::size_t i = 0; i < a.rows(); ++i)
        m(i, i) = p.add(m(i, i), p.t());
    return m;
}

} // namespace exactla
