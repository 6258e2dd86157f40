#pragma once

/**
 * @file charpoly.hpp
 * @brief Characteristic polynomials, the coefficient matrices of adj(tI - A),
 *        and the adjugate written as a polynomial in A.
 *
 * Conventions: chi_A = det(tI_n - A), c_j = [t^{n-j}] chi_A (zero for j
 * outside 0..n), and D_0..D_{n-1} are the matrices with
 * adj(tI_n - A) = sum_k t^k D_k (D_k = 0 for k outside 0..n-1).
 *
 * The D_k satisfy c_{n-k} I = D_{k-1} - A D_k for every k, which gives the
 * cheap descending recursion D_{n-1} = I, D_{k-1} = A D_k + c_{n-k} I used
 * by default. adjugate_expansion() reads the D_k off the cofactor adjugate
 * over R[t] instead and serves as the independent check.
 */

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "concepts.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace exactla {

template <CommutativeRing R>
struct CharPolyData {
    using Element = typename R::Element;

    std::size_t n = 0;
    Polynomial<R> chi;
    std::vector<Element> c;     // c_0..c_n
    std::vector<Matrix<R>> d;   // D_0..D_{n-1}

    /// c_j for any integer j; zero outside 0..n.
    Element coefficient(long j) const
    {
        if (j < 0 || j > static_cast<long>(n))
            return chi.ring().zero();
        return c[static_cast<std::size_t>(j)];
    }

    /// D_k for any integer k; the zero matrix outside 0..n-1.
    Matrix<R> d_matrix(long k) const
    {
        if (k < 0 || k >= static_cast<long>(n))
            return Matrix<R>::zero(chi.ring(), n, n);
        return d[static_cast<std::size_t>(k)];
    }

    friend bool operator==(const CharPolyData& a, const CharPolyData& b)
    {
        if (a.n != b.n || !(a.chi == b.chi) || a.c.size() != b.c.size() || a.d != b.d)
            return false;
        for (std::size_t j = 0; j < a.c.size(); ++j)
            if (!a.chi.ring().equal(a.c[j], b.c[j]))
                return false;
        return true;
    }
};

namespace charpoly_detail {

// D_{n-1} = I, D_{k-1} = A D_k + c_{n-k} I.
template <CommutativeRing R>
std::vector<Matrix<R>> descend(const Matrix<R>& a, const std::vector<typename R::Element>& c)
{
    const std::size_t n = a.rows();
    std::vector<Matrix<R>> d(n, Matrix<R>::zero(a.ring(), n, n));
    if (n == 0)
        return d;
    d[n - 1] = Matrix<R>::identity(a.ring(), n);
    for (std::size_t k = n - 1; k >= 1; --k) {
        auto next = a * d[k];
        for (std::size_t i = 0; i < n; ++i)
            next(i, i) = a.ring().add(next(i, i), c[n - k]);
        d[k - 1] = std::move(next);
    }
    return d;
}

template <CommutativeRing R>
std::vector<typename R::Element> c_from_chi(const Polynomial<R>& chi, std::size_t n)
{
    std::vector<typename R::Element> c;
    c.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        c.push_back(chi.coeff(static_cast<long>(n - j)));
    return c;
}

} // namespace charpoly_detail

/// chi_A = det(tI_n - A) computed over R[t]; D_k by the descending recursion.
template <CommutativeRing R>
CharPolyData<R> charpoly_direct(const Matrix<R>& a)
{
    matrix_detail::require_square(a, "charpoly");
    const std::size_t n = a.rows();
    CharPolyData<R> out{n, det(t_identity_plus(-a)), {}, {}};
    out.c = charpoly_detail::c_from_chi(out.chi, n);
    out.d = charpoly_detail::descend(a, out.c);
    return out;
}

/// The coefficient matrices D_0..D_{n-1} of the cofactor adjugate of tI_n - A over R[t].
template <CommutativeRing R>
std::vector<Matrix<R>> adjugate_expansion(const Matrix<R>& a)
{
    matrix_detail::require_square(a, "adjugate expansion");
    const std::size_t n = a.rows();
    const auto adj = adjugate_cofactor(t_identity_plus(-a));
    std::vector<Matrix<R>> d;
    d.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        d.push_back(entrywise_map(adj, a.ring(), [&](const Polynomial<R>& f) { return f.coeff(static_cast<long>(k)); }));
    return d;
}

/// Characteristic polynomial from power traces:
/// c_k = -(1/k) sum_{i=1}^{k} Tr(A^i) c_{k-i}. Needs a Q-algebra; throws Unsupported otherwise.
template <CommutativeRing R>
CharPolyData<R> charpoly_newton(const Matrix<R>& a)
{
    matrix_detail::require_square(a, "charpoly_newton");
    const R& ring = a.ring();
    if (!ring.is_q_algebra())
        throw Unsupported("charpoly_newton: ring is not a Q-algebra");
    const std::size_t n = a.rows();
    std::vector<typename R::Element> power_traces{ring.zero()};
    auto p = Matrix<R>::identity(ring, n);
    for (std::size_t i = 1; i <= n; ++i) {
        p = p * a;
        power_traces.push_back(trace(p));
    }
    std::vector<typename R::Element> c{ring.one()};
    for (std::size_t k = 1; k <= n; ++k) {
        auto s = ring.zero();
        for (std::size_t i = 1; i <= k; ++i)
            s = ring.add(s, ring.mul(power_traces[i], c[k - i]));
        auto q = ring.div_int(s, static_cast<unsigned long>(k));
        if (!q)
            throw Unsupported("charpoly_newton: division by an integer failed");
        c.push_back(ring.neg(*q));
    }
    std::vector<typename R::Element> coeffs(n + 1, ring.zero());
    for (std::size_t k = 0; k <= n; ++k)
        coeffs[k] = c[n - k];
    CharPolyData<R> out{n, Polynomial<R>(ring, std::move(coeffs)), std::move(c), {}};
    out.d = charpoly_detail::descend(a, out.c);
    return out;
}

/// adj A = (-1)^{n-1} sum_{i=0}^{n-1} c_{n-1-i} A^i.
template <CommutativeRing R>
Matrix<R> adjugate_via_charpoly(const Matrix<R>& a)
{
    matrix_detail::require_square(a, "adjugate_via_charpoly");
    const std::size_t n = a.rows();
    const R& ring = a.ring();
    if (n == 0)
        return Matrix<R>(ring, 0, 0);
    const auto cp = charpoly_direct(a);
    // Horner in A over the coefficients c_{n-1-i}.
    Matrix<R> acc(ring, n, n);
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * a;
        for (std::size_t r = 0; r < n; ++r)
            acc(r, r) = ring.add(acc(r, r), cp.c[n - 1 - i]);
    }
    return (n % 2 == 1) ? acc : -acc;
}

/// k c_k + sum_{i=1}^{k} Tr(A^i) c_{k-i}; zero for every k by the trace Cayley-Hamilton theorem.
template <CommutativeRing R>
typename R::Element trace_ch_residual(const Matrix<R>& a, std::size_t k, const CharPolyData<R>& cp)
{
    const R& ring = a.ring();
    auto s = ring.mul(ring.from_int(BigInt(static_cast<unsigned long>(k))), cp.coefficient(static_cast<long>(k)));
    auto p = Matrix<R>::identity(ring, a.rows());
    for (std::size_t i = 1; i <= k; ++i) {
        p = p * a;
        s = ring.add(s, ring.mul(trace(p), cp.coefficient(static_cast<long>(k) - static_cast<long>(i))));
    }
    return s;
}

template <CommutativeRing R>
typename R::Element trace_ch_residual(const Matrix<R>& a, std::size_t k)
{
    return trace_ch_residual(a, k, charpoly_direct(a));
}

/// chi_A(A); the zero matrix by Cayley-Hamilton.
template <CommutativeRing R>
Matrix<R> cayley_hamilton_residual(const Matrix<R>& a)
{
    return apply_to_matrix(charpoly_direct(a).chi, a);
}

} // namespace exactla
