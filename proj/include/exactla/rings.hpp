#pragma once

// Statically typed models of CommutativeRing: Z, Z/m and Q.

#include <optional>
#include <utility>

#include "concepts.hpp"
#include "error.hpp"

namespace exactla {

struct IntegerRing {
    using Element = BigInt;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(const BigInt& k) const { return k; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool is_q_algebra() const { return false; }
    std::optional<Element> div_int(const Element&, unsigned long) const { return std::nullopt; }

    friend bool operator==(const IntegerRing&, const IntegerRing&) = default;
};

/// Z/m for any m >= 1; residues are kept in [0, m). m == 1 is the zero ring.
class ModularRing {
public:
    using Element = BigInt;

    explicit ModularRing(BigInt modulus) : m_(std::move(modulus))
    {
        if (m_ < 1)
            throw DomainError("modulus must be a positive integer, got " + m_.get_str());
    }

    const BigInt& modulus() const { return m_; }

    Element reduce(const BigInt& x) const
    {
        BigInt r = x % m_;
        if (sgn(r) < 0)
            r += m_;
        return r;
    }

    Element zero() const { return 0; }
    Element one() const { return reduce(1); }
    Element from_int(const BigInt& k) const { return reduce(k); }
    Element add(const Element& a, const Element& b) const { return reduce(a + b); }
    Element sub(const Element& a, const Element& b) const { return reduce(a - b); }
    Element neg(const Element& a) const { return reduce(-a); }
    Element mul(const Element& a, const Element& b) const { return reduce(a * b); }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool is_q_algebra() const { return false; }
    std::optional<Element> div_int(const Element&, unsigned long) const { return std::nullopt; }

    friend bool operator==(const ModularRing& a, const ModularRing& b) { return a.m_ == b.m_; }

private:
    BigInt m_;
};

struct RationalRing {
    using Element = BigRational;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(const BigInt& k) const { return BigRational(k); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool is_q_algebra() const { return true; }
    std::optional<Element> div_int(const Element& a, unsigned long d) const
    {
        if (d == 0)
            throw DomainError("division by zero");
        BigRational q = a / BigRational(d);
        q.canonicalize();
        return q;
    }

    friend bool operator==(const RationalRing&, const RationalRing&) = default;
};

static_assert(CommutativeRing<IntegerRing>);
static_assert(CommutativeRing<ModularRing>);
static_assert(CommutativeRing<RationalRing>);

} // namespace exactla
