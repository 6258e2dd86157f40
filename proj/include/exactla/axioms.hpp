#pragma once

#include <array>
#include <span>

#include "report.hpp"
#include "ring.hpp"

namespace exactla {

/// Checks commutativity, associativity, distributivity, identities and
/// additive inverses on each sampled triple. Every sample must belong to
/// ring (RingMismatch otherwise). The report's note names the first
/// violated axiom and residual holds lhs - rhs for it.
VerificationReport axiom_spotcheck(const Ring& ring, std::span<const std::array<RingElement, 3>> samples);

} // namespace exactla
