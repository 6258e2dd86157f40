#pragma once

/**
 * @file ring.hpp
 * @brief Commutative rings chosen at runtime.
 *
 * A Ring is an immutable, cheaply copyable descriptor: the integers, Z/m,
 * the rationals, or the polynomial ring over another descriptor. It models
 * CommutativeRing with Scalar as its element type, so every templated
 * algorithm runs over a ring parsed from user input.
 *
 * Scalars are kept canonical (reduced residues, lowest-terms fractions with
 * positive denominator, trimmed coefficient lists), which makes equality of
 * ring elements plain structural equality.
 *
 * Regular elements (non-zero-divisors) are not decidable over an arbitrary
 * ring and no test for them is offered.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "concepts.hpp"
#include "polynomial.hpp"

namespace exactla {

/// Untagged canonical value of some Ring. Which alternative is active is
/// fixed by the ring: BigInt for Z and Z/m, BigRational for Q, a trimmed
/// coefficient list for polynomial rings.
struct Scalar {
    std::variant<BigInt, BigRational, std::vector<Scalar>> rep;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.rep == b.rep; }
};

class Ring {
public:
    enum class Kind { integers, modular, rationals, polynomial };
    using Element = Scalar;

    static Ring integers();
    static Ring modular(const BigInt& m);
    static Ring rationals();
    static Ring polynomial(const Ring& base);

    Kind kind() const;
    /// Modulus of Z/m. Throws DomainError for other kinds.
    const BigInt& modulus() const;
    /// Coefficient ring of a polynomial ring. Throws DomainError for other kinds.
    const Ring& base() const;
    /// Short human-readable name: Z, Z/8, Q, Z/4[t], Q[t][t].
    std::string name() const;

    /// Smallest p > 0 with p*1 == 0, or 0 when no such p exists.
    BigInt characteristic() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(const BigInt& k) const;
    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    bool equal(const Scalar& a, const Scalar& b) const { return a == b; }
    bool is_zero(const Scalar& a) const;
    bool is_q_algebra() const;
    std::optional<Scalar> div_int(const Scalar& a, unsigned long d) const;

    /// Canonicalizes a raw value (reduces residues and fractions, trims
    /// coefficient lists). Throws ParseError when the alternative is wrong.
    Scalar canonical(Scalar raw) const;

    /// Polynomial ring only: the coefficient list of a value.
    const std::vector<Scalar>& coefficients(const Scalar& a) const;
    /// Polynomial ring only: builds a value from coefficients in base().
    Scalar from_coefficients(std::vector<Scalar> coeffs) const;
    /// Polynomial ring only: the indeterminate t.
    Scalar indeterminate() const;

    std::string to_string(const Scalar& a) const;

    friend bool operator==(const Ring& a, const Ring& b);

private:
    struct Node;
    explicit Ring(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

static_assert(CommutativeRing<Ring>);

/// Conversions between a polynomial-ring Scalar and Polynomial<Ring>.
Polynomial<Ring> as_polynomial(const Ring& poly_ring, const Scalar& a);
Scalar from_polynomial(const Ring& poly_ring, const Polynomial<Ring>& f);

/// A value together with the ring it belongs to. Arithmetic between
/// elements of different rings throws RingMismatch.
struct RingElement {
    Ring ring;
    Scalar value;

    std::string to_string() const { return ring.to_string(value); }

    friend bool operator==(const RingElement& a, const RingElement& b)
    {
        return a.ring == b.ring && a.value == b.value;
    }
    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a);
};

/// k * 1 in the ring.
RingElement int_embed(const Ring& ring, const BigInt& k);

/// y with k*y == x when the ring is a Q-algebra; nullopt otherwise, even if
/// such a y happens to exist (e.g. 4/2 in Z). Throws DomainError for k == 0.
std::optional<RingElement> try_div_int(const RingElement& x, unsigned long k);

void require_same_ring(const Ring& a, const Ring& b, const char* what);

} // namespace exactla
