#pragma once

/**
 * @file derivation.hpp
 * @brief Derivations on a commutative algebra and the derivative of a determinant.
 *
 * A derivation is stored extensionally: the algebra it acts on, a map and a
 * label. Nothing forces the map to be additive or to satisfy the Leibniz
 * rule; verify_derivation_axioms checks that on samples.
 *
 * Only linearity over integer scalars can be tested through the ring
 * interface. Linearity over a larger base ring is assumed, not checked.
 */

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "matrix.hpp"
#include "report.hpp"
#include "ring.hpp"

namespace exactla {

struct Derivation {
    Ring algebra;
    /// Must be pure; it may be called from several threads at once.
    std::function<Scalar(const Scalar&)> apply;
    std::string label;
    /// How the derivation is selected in configuration ("zero", "ddt", {"gddt": g}).
    nlohmann::json config;

    Scalar operator()(const Scalar& x) const { return apply(x); }
};

Derivation zero_derivation(const Ring& algebra);
/// d/dt on base[t]. Throws DomainError if algebra is not a polynomial ring.
Derivation d_dt(const Ring& algebra);
/// g * d/dt for an element g of the polynomial ring algebra.
Derivation scaled_d_dt(const Ring& algebra, const Scalar& g);

/// zero, and on polynomial algebras also d/dt and g * d/dt (g defaults to t).
std::vector<Derivation> make_standard_derivations(const Ring& algebra, std::optional<Scalar> g = std::nullopt);

/// Reads "zero" | "ddt" | {"gddt": <polynomial>}. ParseError on anything else.
Derivation derivation_from_json(const Ring& algebra, const nlohmann::json& j);

/// Additivity, the Leibniz rule, f(1) = 0 and f(k x) = k f(x) for small
/// integers k, on each sampled pair.
VerificationReport verify_derivation_axioms(const Derivation& f, std::span<const std::array<Scalar, 2>> pairs);

/// f(a_1 ... a_n) = sum_i a_1 ... a_(i-1) f(a_i) a_(i+1) ... a_n, and the
/// form f(a_k) prod_(i != k) a_i. The empty product gives f(1) = 0.
VerificationReport verify_leibniz_chain(const Derivation& f, std::span<const RingElement> elems);

/// f(det A) = Tr(f(A) adj A), with f applied entrywise.
VerificationReport verify_derivation_det(const Derivation& f, const Matrix<Ring>& a);

/// f(det A) = sum_k det A'_k, where A'_k applies f to row k only.
VerificationReport verify_derivation_det_rows(const Derivation& f, const Matrix<Ring>& a);

} // namespace exactla
