#include "exactla/random.hpp"

#include "exactla/error.hpp"

namespace exactla {

namespace {

constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ULL;

// A nonzero scalar c with c^j = 0 for some j, if the ring has an obvious one.
std::optional<Scalar> nilpotent_scalar(const Ring& ring)
{
    if (ring.kind() == Ring::Kind::polynomial) {
        auto c = nilpotent_scalar(ring.base());
        if (c)
            return ring.from_coefficients({*c});
        return std::nullopt;
    }
    if (ring.kind() != Ring::Kind::modular)
        return std::nullopt;
    // m = p^2 q for a prime p gives the nonzero nilpotent p q.
    const BigInt& m = ring.modulus();
    for (unsigned long p = 2; p * p <= m; ++p)
        if (m % (p * p) == 0)
            return ring.from_int(BigInt(m / p));
    return std::nullopt;
}

} // namespace

std::uint64_t SplitMix64::mix(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next()
{
    state_ += golden;
    return mix(state_);
}

std::uint64_t SplitMix64::uniform(std::uint64_t bound)
{
    if (bound == 0)
        throw DomainError("uniform: bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        std::uint64_t x = next();
        if (x >= threshold)
            return x % bound;
    }
}

std::int64_t SplitMix64::uniform_int(std::int64_t lo, std::int64_t hi)
{
    if (hi < lo)
        throw DomainError("uniform_int: empty range");
    const auto width = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(width == 0 ? next() : uniform(width));
}

BigInt SplitMix64::uniform_big(const BigInt& bound)
{
    if (bound <= 0)
        throw DomainError("uniform_big: bound must be positive");
    if (bound.fits_ulong_p())
        return BigInt(static_cast<unsigned long>(uniform(bound.get_ui())));
    // Draw enough 64-bit words, mask to the bit length, reject values >= bound.
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    while (true) {
        BigInt x = 0;
        for (std::size_t w = 0; w < words; ++w) {
            x <<= 64;
            x += BigInt(std::to_string(next()), 10);
        }
        mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
        if (x < bound)
            return x;
    }
}

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t key) { return SplitMix64(mix(seed ^ mix(key + golden))); }

Scalar random_element(SplitMix64& rng, const Ring& ring, const EntryDistribution& dist)
{
    switch (ring.kind()) {
    case Ring::Kind::integers:
        return ring.from_int(BigInt(static_cast<long>(rng.uniform_int(-dist.int_bound, dist.int_bound))));
    case Ring::Kind::modular:
        return ring.from_int(rng.uniform_big(ring.modulus()));
    case Ring::Kind::rationals: {
        auto nonzero = [&] {
            auto v = rng.uniform_int(-dist.rat_bound, dist.rat_bound - 1);
            return v >= 0 ? v + 1 : v;
        };
        const long num = static_cast<long>(nonzero());
        const long den = static_cast<long>(nonzero());
        return ring.canonical(Scalar{BigRational(num, den)});
    }
    case Ring::Kind::polynomial: {
        std::vector<Scalar> c;
        for (std::size_t k = 0; k <= dist.poly_degree; ++k)
            c.push_back(random_element(rng, ring.base(), dist));
        return ring.from_coefficients(std::move(c));
    }
    }
    return ring.zero();
}

Matrix<Ring> random_matrix(SplitMix64& rng, const Ring& ring, std::size_t rows, std::size_t cols,
                           const EntryDistribution& dist)
{
    Matrix<Ring> a(ring, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            a(r, c) = random_element(rng, ring, dist);
    return a;
}

Polynomial<Ring> random_polynomial(SplitMix64& rng, const Ring& ring, std::size_t max_degree,
                                   const EntryDistribution& dist)
{
    std::vector<Scalar> c;
    for (std::size_t k = 0; k <= max_degree; ++k)
        c.push_back(random_element(rng, ring, dist));
    return Polynomial<Ring>(ring, std::move(c));
}

Matrix<Ring> random_singular(SplitMix64& rng, const Ring& ring, std::size_t n, const EntryDistribution& dist)
{
    if (n == 0)
        throw DomainError("random_singular: n must be positive");
    auto a = random_matrix(rng, ring, n, n, dist);
    const auto target = static_cast<std::size_t>(rng.uniform(n));
    if (n >= 2 && rng.uniform(2) == 0) {
        auto source = static_cast<std::size_t>(rng.uniform(n - 1));
        if (source >= target)
            ++source;
        for (std::size_t c = 0; c < n; ++c)
            a(target, c) = a(source, c);
    } else {
        for (std::size_t c = 0; c < n; ++c)
            a(target, c) = ring.zero();
    }
    return a;
}

Matrix<Ring> random_strictly_upper(SplitMix64& rng, const Ring& ring, std::size_t n, const EntryDistribution& dist)
{
    Matrix<Ring> a(ring, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
            a(r, c) = random_element(rng, ring, dist);
    return a;
}

std::pair<Matrix<Ring>, Matrix<Ring>> random_unimodular(SplitMix64& rng, const Ring& ring, std::size_t n,
                                                        std::size_t steps, const EntryDistribution& dist)
{
    auto u = Matrix<Ring>::identity(ring, n);
    auto inv = Matrix<Ring>::identity(ring, n);
    if (n < 2)
        return {u, inv};
    for (std::size_t s = 0; s < steps; ++s) {
        const auto i = static_cast<std::size_t>(rng.uniform(n));
        auto j = static_cast<std::size_t>(rng.uniform(n - 1));
        if (j >= i)
            ++j;
        const auto c = random_element(rng, ring, dist);
        // u <- u (I + c E_ij): column j += c * column i.
        for (std::size_t r = 0; r < n; ++r)
            u(r, j) = ring.add(u(r, j), ring.mul(c, u(r, i)));
        // inv <- (I - c E_ij) inv: row i -= c * row j.
        for (std::size_t k = 0; k < n; ++k)
            inv(i, k) = ring.sub(inv(i, k), ring.mul(c, inv(j, k)));
    }
    return {u, inv};
}

Matrix<Ring> random_nilpotent(SplitMix64& rng, const Ring& ring, std::size_t n, const EntryDistribution& dist)
{
    auto base = random_strictly_upper(rng, ring, n, dist);
    const auto c = nilpotent_scalar(ring);
    const auto choice = rng.uniform(c ? 4 : 2);
    Matrix<Ring> a = base;
    if (choice == 2)
        a = base + scale(*c, Matrix<Ring>::identity(ring, n));
    else if (choice == 3)
        a = scale(*c, random_matrix(rng, ring, n, n, dist));
    if (choice == 0)
        return a;
    auto [u, inv] = random_unimodular(rng, ring, n, 2 * n, dist);
    return u * a * inv;
}

Matrix<Ring> random_commuting_partner(SplitMix64& rng, const Matrix<Ring>& a, const EntryDistribution& dist)
{
    return apply_to_matrix(random_polynomial(rng, a.ring(), 2, dist), a);
}

std::optional<std::uint32_t> nilpotency_index(const Matrix<Ring>& a, std::uint32_t limit)
{
    auto p = a;
    for (std::uint32_t k = 0; k < limit; ++k) {
        if (p.is_zero())
            return k;
        p = p * a;
    }
    return std::nullopt;
}

} // namespace exactla
