#pragma once

/**
 * @file concepts.hpp
 * @brief The ring interface every algorithm in the library is written against.
 *
 * A ring is a small copyable context object (it knows the modulus, the base
 * ring of a polynomial ring, ...) and its elements are plain values. All
 * arithmetic goes through the context, so zeros and ones are available even
 * for empty matrices.
 */

#include <concepts>
#include <cstdint>
#include <optional>

#include <gmpxx.h>

namespace exactla {

using BigInt = mpz_class;
using BigRational = mpq_class;

template <class R>
concept CommutativeRing =
    std::copyable<R> && std::equality_comparable<R> &&
    requires(const R& r, const typename R::Element& a, const typename R::Element& b,
             const BigInt& k, unsigned long d) {
        typename R::Element;
        requires std::copyable<typename R::Element>;
        { r.zero() } -> std::same_as<typename R::Element>;
        { r.one() } -> std::same_as<typename R::Element>;
        { r.from_int(k) } -> std::same_as<typename R::Element>;
        { r.add(a, b) } -> std::same_as<typename R::Element>;
        { r.sub(a, b) } -> std::same_as<typename R::Element>;
        { r.neg(a) } -> std::same_as<typename R::Element>;
        { r.mul(a, b) } -> std::same_as<typename R::Element>;
        { r.equal(a, b) } -> std::convertible_to<bool>;
        { r.is_zero(a) } -> std::convertible_to<bool>;
        // Declared capability: every positive integer is a unit.
        { r.is_q_algebra() } -> std::convertible_to<bool>;
        // y with d*y == a, or nullopt when the ring is not a Q-algebra.
        { r.div_int(a, d) } -> std::same_as<std::optional<typename R::Element>>;
    };

/// x^e by repeated squaring; x^0 is one, including 0^0.
template <CommutativeRing R>
typename R::Element power(const R& ring, typename R::Element x, std::uint64_t e)
{
    auto result = ring.one();
    while (e > 0) {
        if (e & 1U)
            result = ring.mul(result, x);
        e >>= 1U;
        if (e > 0)
            x = ring.mul(x, x);
    }
    return result;
}

/// (-1)^e as a ring element.
template <CommutativeRing R>
typename R::Element sign_power(const R& ring, long long e)
{
    return (e % 2 == 0) ? ring.one() : ring.neg(ring.one());
}

} // namespace exactla
