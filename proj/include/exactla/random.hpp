#pragma once

/**
 * @file random.hpp
 * @brief Seeded generation of ring elements and structured matrices.
 *
 * All randomness comes from SplitMix64, so a seed fixes every generated
 * input on every platform. Uniform draws below a bound use rejection
 * sampling, never a bare modulo.
 */

#include <cstdint>

#include "matrix.hpp"
#include "ring.hpp"

namespace exactla {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t uniform(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
    /// Uniform in [0, bound) for a positive big integer.
    BigInt uniform_big(const BigInt& bound);

    /// Independent generator for sub-stream key, seeded with
    /// mix(seed XOR mix(key + golden)). Does not advance this generator.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t key);
    static std::uint64_t mix(std::uint64_t z);

private:
    std::uint64_t state_;
};

/// Entry distributions: integers in [-9, 9]; every residue of Z/m;
/// fractions a/b with a, b in [-5, 5] \ {0}; polynomials with coefficients
/// from the base distribution up to poly_degree.
struct EntryDistribution {
    std::int64_t int_bound = 9;
    std::int64_t rat_bound = 5;
    std::size_t poly_degree = 1;
};

Scalar random_element(SplitMix64& rng, const Ring& ring, const EntryDistribution& dist = {});
Matrix<Ring> random_matrix(SplitMix64& rng, const Ring& ring, std::size_t rows, std::size_t cols,
                           const EntryDistribution& dist = {});
/// Polynomial over ring with degree at most max_degree.
Polynomial<Ring> random_polynomial(SplitMix64& rng, const Ring& ring, std::size_t max_degree,
                                   const EntryDistribution& dist = {});

/// A random n x n matrix with det = 0: one row copied onto another, or a
/// row zeroed. Needs n >= 1.
Matrix<Ring> random_singular(SplitMix64& rng, const Ring& ring, std::size_t n, const EntryDistribution& dist = {});
Matrix<Ring> random_strictly_upper(SplitMix64& rng, const Ring& ring, std::size_t n,
                                   const EntryDistribution& dist = {});
/// U and its inverse, U a product of `steps` elementary matrices I + c E_ij.
std::pair<Matrix<Ring>, Matrix<Ring>> random_unimodular(SplitMix64& rng, const Ring& ring, std::size_t n,
                                                        std::size_t steps, const EntryDistribution& dist = {});
/// A nilpotent matrix: a conjugated strictly upper triangular matrix, plus,
/// when the ring has nonzero nilpotent scalars, c I + N or c X with c a
/// nilpotent scalar, so the trace need not vanish.
Matrix<Ring> random_nilpotent(SplitMix64& rng, const Ring& ring, std::size_t n, const EntryDistribution& dist = {});
/// p(A) for a random polynomial p of degree at most 2; it commutes with A.
Matrix<Ring> random_commuting_partner(SplitMix64& rng, const Matrix<Ring>& a, const EntryDistribution& dist = {});

/// Smallest k with A^(k+1) = 0, searching k < limit.
std::optional<std::uint32_t> nilpotency_index(const Matrix<Ring>& a, std::uint32_t limit);

} // namespace exactla
