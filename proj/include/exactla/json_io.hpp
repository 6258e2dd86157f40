#pragma once

/**
 * @file json_io.hpp
 * @brief JSON forms of rings, elements, polynomials, matrices and
 *        characteristic-polynomial data.
 *
 *   ring:       {"kind":"int"} | {"kind":"mod","m":8} | {"kind":"rat"} | {"kind":"poly","base":<ring>}
 *   element:    "12" (Z, Z/m) | {"num":"1","den":"2"} (Q) | [c0, c1, ...] (polynomial ring)
 *   polynomial: {"coeffs":[c0, c1, ...]}
 *   matrix:     {"ring":<ring>,"rows":n,"cols":m,"entries":[[...],...]}
 *   charpoly:   {"chi":<polynomial>,"c":[...],"D":[<matrix>,...]}
 *
 * Numerals are always written as decimal strings. On input, plain JSON
 * integers and "a/b" strings are accepted as well.
 */

#include <optional>
#include <string_view>

#include <json.hpp>

#include "charpoly.hpp"
#include "matrix.hpp"
#include "ring.hpp"

namespace exactla {

nlohmann::json ring_to_json(const Ring& ring);
Ring ring_from_json(const nlohmann::json& j);

/// Parses a ring given either as JSON or in the short form
/// int | rat | mod:<m> | poly:<ring>.
Ring parse_ring(std::string_view text);

nlohmann::json element_to_json(const Ring& ring, const Scalar& x);
Scalar element_from_json(const Ring& ring, const nlohmann::json& j);
nlohmann::json to_json(const RingElement& x);

nlohmann::json polynomial_to_json(const Polynomial<Ring>& f);
Polynomial<Ring> polynomial_from_json(const Ring& base, const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix<Ring>& a);
/// Reads a matrix. When ring is given it overrides (or supplies) the "ring" field.
Matrix<Ring> matrix_from_json(const nlohmann::json& j, const std::optional<Ring>& ring = std::nullopt);

/// Matrices over Ring[t] (the static polynomial ring) are written as matrices
/// over the descriptor poly-over(base).
nlohmann::json matrix_to_json(const Matrix<PolynomialRing<Ring>>& a);

nlohmann::json charpoly_to_json(const CharPolyData<Ring>& data);
CharPolyData<Ring> charpoly_from_json(const Ring& base, const nlohmann::json& j);

/// Converts between the two representations of matrices over Ring[t].
Matrix<Ring> to_descriptor_form(const Matrix<PolynomialRing<Ring>>& a);
Matrix<PolynomialRing<Ring>> to_polynomial_form(const Matrix<Ring>& a);

} // namespace exactla
