#pragma once

#include <initializer_list>
#include <vector>

#include "exactla/matrix.hpp"
#include "exactla/polynomial.hpp"
#include "exactla/random.hpp"
#include "exactla/ring.hpp"

namespace th {

using namespace exactla;

inline Ring Z() { return Ring::integers(); }
inline Ring Q() { return Ring::rationals(); }
inline Ring Zm(long m) { return Ring::modular(BigInt(m)); }
inline Ring Pol(const Ring& base) { return Ring::polynomial(base); }

inline Scalar el(const Ring& r, long v) { return r.from_int(BigInt(v)); }
inline Scalar frac(long num, long den) { return Q().canonical(Scalar{BigRational(num, den)}); }

/// Element of base[t] with the given integer coefficients (index = degree).
inline Scalar pel(const Ring& poly_ring, std::initializer_list<long> coeffs)
{
    std::vector<Scalar> c;
    for (long v : coeffs)
        c.push_back(el(poly_ring.base(), v));
    return poly_ring.from_coefficients(std::move(c));
}

inline Polynomial<Ring> poly(const Ring& base, std::initializer_list<long> coeffs)
{
    std::vector<Scalar> c;
    for (long v : coeffs)
        c.push_back(el(base, v));
    return Polynomial<Ring>(base, std::move(c));
}

inline Matrix<Ring> mat(const Ring& r, std::initializer_list<std::initializer_list<long>> rows)
{
    return Matrix<Ring>::from_ints(r, rows);
}

/// The rings every property test runs over.
inline std::vector<Ring> test_rings() { return {Z(), Zm(6), Zm(8), Q(), Pol(Z()), Pol(Zm(4))}; }

} // namespace th
