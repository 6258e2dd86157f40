#pragma once

/**
 * @file suite.hpp
 * @brief Running selections of identities on one matrix or on seeded random cases.
 *
 * Identities needing more than one matrix get the extra inputs from a
 * generator seeded per identity, so a report's "inputs" field is enough to
 * rerun the check on its own. Commuting partners are polynomials in A;
 * nilpotent inputs are built (see random.hpp), since random matrices almost
 * never satisfy those hypotheses.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "report.hpp"
#include "ring.hpp"
#include "matrix.hpp"

namespace exactla {

/// Every identity name, in the order reports are produced.
const std::vector<std::string>& all_identities();

/// Comma-separated names and group names (core, block, nilpotent, trace,
/// derivation, all). Duplicates are dropped; order follows all_identities().
/// Throws ParseError on an unknown name.
std::vector<std::string> parse_suite(std::string_view text);

/// True if any selected identity builds a matrix of twice the input size.
bool has_block_identity(const std::vector<std::string>& ids);

struct SuiteOptions {
    std::optional<std::uint32_t> k;       ///< almkvist exponent; default: smallest k with A^(k+1) = 0
    std::optional<std::uint64_t> p;       ///< frobenius prime; default: the characteristic if prime
    std::optional<std::size_t> imax;      ///< nilpotency_converse bound; default 2n+1
    std::optional<nlohmann::json> derivation; ///< "zero" | "ddt" | {"gddt": g}; default cycles
};

/// Runs each identity on A. Extra inputs come from the seed.
std::vector<VerificationReport> run_suite(const Matrix<Ring>& a, const std::vector<std::string>& ids,
                                          std::uint64_t seed, const SuiteOptions& opts = {});

struct FuzzConfig {
    Ring ring = Ring::integers();
    std::size_t size = 3;  ///< cases use n in 0..size
    std::size_t count = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> ids;
    SuiteOptions opts;
};

/// count cases, each running every selected identity on fresh inputs.
/// Case i draws from SplitMix64::stream(seed, i); reports come in case order.
/// Throws DomainError when size exceeds 8, or 6 with block identities.
std::vector<VerificationReport> run_fuzz(const FuzzConfig& cfg);

} // namespace exactla
