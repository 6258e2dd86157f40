#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over any CommutativeRing.
 *
 * Coefficients are stored by degree (coeffs[k] is the coefficient of t^k)
 * with no trailing zeros, so the zero polynomial is the empty list and two
 * polynomials are equal exactly when their coefficient lists are.
 *
 * PolynomialRing<R> turns R[t] into a CommutativeRing again, which is how
 * matrices such as tI - A are handled by the ordinary matrix code.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "concepts.hpp"
#include "error.hpp"

namespace exactla {

namespace poly_detail {

template <CommutativeRing R>
void trim(const R& ring, std::vector<typename R::Element>& c)
{
    while (!c.empty() && ring.is_zero(c.back()))
        c.pop_back();
}

template <CommutativeRing R>
std::vector<typename R::Element> add(const R& ring, std::span<const typename R::Element> a,
                                     std::span<const typename R::Element> b)
{
    std::vector<typename R::Element> out;
    out.reserve(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
        if (k < a.size() && k < b.size())
            out.push_back(ring.add(a[k], b[k]));
        else
            out.push_back(k < a.size() ? a[k] : b[k]);
    }
    trim(ring, out);
    return out;
}

template <CommutativeRing R>
std::vector<typename R::Element> neg(const R& ring, std::span<const typename R::Element> a)
{
    std::vector<typename R::Element> out;
    out.reserve(a.size());
    for (const auto& x : a)
        out.push_back(ring.neg(x));
    return out;
}

template <CommutativeRing R>
std::vector<typename R::Element> sub(const R& ring, std::span<const typename R::Element> a,
                                     std::span<const typename R::Element> b)
{
    std::vector<typename R::Element> out;
    out.reserve(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
        if (k < a.size() && k < b.size())
            out.push_back(ring.sub(a[k], b[k]));
        else
            out.push_back(k < a.size() ? a[k] : ring.neg(b[k]));
    }
    trim(ring, out);
    return out;
}

// Cauchy product: [t^k](ab) = sum_{i=0}^{k} a_i b_{k-i}.
template <CommutativeRing R>
std::vector<typename R::Element> mul(const R& ring, std::span<const typename R::Element> a,
                                     std::span<const typename R::Element> b)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<typename R::Element> out(a.size() + b.size() - 1, ring.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (ring.is_zero(a[i]))
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = ring.add(out[i + j], ring.mul(a[i], b[j]));
    }
    trim(ring, out);
    return out;
}

template <CommutativeRing R>
std::vector<typename R::Element> scale(const R& ring, const typename R::Element& s,
                                       std::span<const typename R::Element> a)
{
    std::vector<typename R::Element> out;
    out.reserve(a.size());
    for (const auto& x : a)
        out.push_back(ring.mul(s, x));
    trim(ring, out);
    return out;
}

template <CommutativeRing R>
std::vector<typename R::Element> derivative(const R& ring, std::span<const typename R::Element> a)
{
    std::vector<typename R::Element> out;
    if (a.size() <= 1)
        return out;
    out.reserve(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k)
        out.push_back(ring.mul(ring.from_int(BigInt(static_cast<unsigned long>(k))), a[k]));
    trim(ring, out);
    return out;
}

template <CommutativeRing R>
bool equal(const R& ring, std::span<const typename R::Element> a,
           std::span<const typename R::Element> b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!ring.equal(a[k], b[k]))
            return false;
    return true;
}

// Coefficientwise division by a positive integer; nullopt unless the ring is a Q-algebra.
template <CommutativeRing R>
std::optional<std::vector<typename R::Element>> div_int(const R& ring,
                                                        std::span<const typename R::Element> a,
                                                        unsigned long d)
{
    if (!ring.is_q_algebra())
        return std::nullopt;
    std::vector<typename R::Element> out;
    out.reserve(a.size());
    for (const auto& x : a) {
        auto q = ring.div_int(x, d);
        if (!q)
            return std::nullopt;
        out.push_back(std::move(*q));
    }
    trim(ring, out);
    return out;
}

} // namespace poly_detail

/// A polynomial in t over the base ring R.
template <CommutativeRing R>
class Polynomial {
public:
    using Element = typename R::Element;

    explicit Polynomial(R ring) : ring_(std::move(ring)) {}

    Polynomial(R ring, std::vector<Element> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs))
    {
        poly_detail::trim(ring_, coeffs_);
    }

    static Polynomial constant(R ring, Element c)
    {
        return Polynomial(ring, std::vector<Element>{std::move(c)});
    }

    /// c * t^k
    static Polynomial monomial(R ring, Element c, std::size_t k)
    {
        std::vector<Element> v(k + 1, ring.zero());
        v[k] = std::move(c);
        return Polynomial(std::move(ring), std::move(v));
    }

    /// The indeterminate t.
    static Polynomial t(R ring) { return monomial(ring, ring.one(), 1); }

    const R& ring() const { return ring_; }
    std::span<const Element> coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, with -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    /// [t^k]f; zero for k < 0 and for k above the degree.
    Element coeff(long k) const
    {
        if (k < 0 || k >= static_cast<long>(coeffs_.size()))
            return ring_.zero();
        return coeffs_[static_cast<std::size_t>(k)];
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.ring_ == b.ring_ && poly_detail::equal(a.ring_, a.coeffs(), b.coeffs());
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        check_same(a, b);
        return Polynomial(a.ring_, poly_detail::add(a.ring_, a.coeffs(), b.coeffs()));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b)
    {
        check_same(a, b);
        return Polynomial(a.ring_, poly_detail::sub(a.ring_, a.coeffs(), b.coeffs()));
    }
    friend Polynomial operator-(const Polynomial& a)
    {
        return Polynomial(a.ring_, poly_detail::neg(a.ring_, a.coeffs()));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        check_same(a, b);
        return Polynomial(a.ring_, poly_detail::mul(a.ring_, a.coeffs(), b.coeffs()));
    }

    /// Scalar multiple s*f.
    Polynomial scaled(const Element& s) const
    {
        return Polynomial(ring_, poly_detail::scale(ring_, s, coeffs()));
    }

private:
    static void check_same(const Polynomial& a, const Polynomial& b)
    {
        if (!(a.ring_ == b.ring_))
            throw RingMismatch("polynomials over different base rings");
    }

    R ring_;
    std::vector<Element> coeffs_;
};

/// Formal derivative: coefficient k of the result is (k+1)*[t^{k+1}]f.
template <CommutativeRing R>
Polynomial<R> derivative(const Polynomial<R>& f)
{
    return Polynomial<R>(f.ring(), poly_detail::derivative(f.ring(), f.coeffs()));
}

/// Evaluation at t = 0, i.e. the constant term.
template <CommutativeRing R>
typename R::Element eval_zero(const Polynomial<R>& f)
{
    return f.coeff(0);
}

/// Horner evaluation at a ring element.
template <CommutativeRing R>
typename R::Element evaluate(const Polynomial<R>& f, const typename R::Element& x)
{
    const auto& ring = f.ring();
    auto acc = ring.zero();
    for (long k = f.degree(); k >= 0; --k)
        acc = ring.add(ring.mul(acc, x), f.coeff(k));
    return acc;
}

/// R[t] as a ring in its own right.
template <CommutativeRing R>
class PolynomialRing {
public:
    using Element = Polynomial<R>;

    explicit PolynomialRing(R base) : base_(std::move(base)) {}

    const R& base() const { return base_; }

    Element zero() const { return Element(base_); }
    Element one() const { return Element::constant(base_, base_.one()); }
    Element from_int(const BigInt& k) const { return Element::constant(base_, base_.from_int(k)); }
    Element constant(typename R::Element c) const { return Element::constant(base_, std::move(c)); }
    Element t() const { return Element::t(base_); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool is_q_algebra() const { return base_.is_q_algebra(); }
    std::optional<Element> div_int(const Element& a, unsigned long d) const
    {
        auto q = poly_detail::div_int(base_, a.coeffs(), d);
        if (!q)
            return std::nullopt;
        return Element(base_, std::move(*q));
    }

    friend bool operator==(const PolynomialRing& a, const PolynomialRing& b)
    {
        return a.base_ == b.base_;
    }

private:
    R base_;
};

} // namespace exactla
