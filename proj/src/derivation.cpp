#include "exactla/derivation.hpp"

#include "exactla/error.hpp"
#include "exactla/json_io.hpp"
#include "exactla/verifier.hpp"

namespace exactla {

using nlohmann::json;
using verifier_detail::PartChecker;

namespace {

void require_polynomial(const Ring& algebra, const char* what)
{
    if (algebra.kind() != Ring::Kind::polynomial)
        throw DomainError(std::string(what) + ": needs a polynomial ring, got " + algebra.name());
}

Scalar differentiate(const Ring& algebra, const Scalar& x)
{
    const auto& c = algebra.coefficients(x);
    return algebra.from_coefficients(poly_detail::derivative<Ring>(algebra.base(), std::span<const Scalar>(c)));
}

VerificationReport start(const char* identity, const Derivation& f)
{
    VerificationReport r;
    r.identity = identity;
    r.inputs["ring"] = ring_to_json(f.algebra);
    r.inputs["derivation"] = f.config;
    return r;
}

Matrix<Ring> apply_entrywise(const Derivation& f, const Matrix<Ring>& a)
{
    return entrywise_map(a, f.algebra, [&](const Scalar& x) { return f(x); });
}

} // namespace

Derivation zero_derivation(const Ring& algebra)
{
    return Derivation{algebra, [algebra](const Scalar&) { return algebra.zero(); }, "zero", "zero"};
}

Derivation d_dt(const Ring& algebra)
{
    require_polynomial(algebra, "d/dt");
    return Derivation{algebra, [algebra](const Scalar& x) { return differentiate(algebra, x); }, "d/dt", "ddt"};
}

Derivation scaled_d_dt(const Ring& algebra, const Scalar& g)
{
    require_polynomial(algebra, "g*d/dt");
    const Scalar gc = algebra.canonical(g);
    return Derivation{algebra,
                      [algebra, gc](const Scalar& x) { return algebra.mul(gc, differentiate(algebra, x)); },
                      "(" + algebra.to_string(gc) + ")*d/dt",
                      {{"gddt", element_to_json(algebra, gc)}}};
}

std::vector<Derivation> make_standard_derivations(const Ring& algebra, std::optional<Scalar> g)
{
    std::vector<Derivation> out{zero_derivation(algebra)};
    if (algebra.kind() == Ring::Kind::polynomial) {
        out.push_back(d_dt(algebra));
        out.push_back(scaled_d_dt(algebra, g ? *g : algebra.indeterminate()));
    }
    return out;
}

Derivation derivation_from_json(const Ring& algebra, const json& j)
{
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "zero")
            return zero_derivation(algebra);
        if (s == "ddt")
            return d_dt(algebra);
        throw ParseError("derivation: unknown label '" + s + "' (use zero, ddt or {\"gddt\": g})");
    }
    if (j.is_object() && j.size() == 1 && j.contains("gddt")) {
        require_polynomial(algebra, "gddt");
        return scaled_d_dt(algebra, element_from_json(algebra, j.at("gddt")));
    }
    throw ParseError("derivation: expected \"zero\", \"ddt\" or {\"gddt\": g}");
}

VerificationReport verify_derivation_axioms(const Derivation& f, std::span<const std::array<Scalar, 2>> pairs)
{
    auto r = start("derivation_axioms", f);
    r.inputs["pairs"] = pairs.size();
    const auto& ring = f.algebra;
    PartChecker pc(r);
    pc.element("f(1) = 0", ring, f(ring.one()), ring.zero());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto a = ring.canonical(pairs[i][0]);
        const auto b = ring.canonical(pairs[i][1]);
        const auto fa = f(a), fb = f(b);
        const auto tag = " (pair " + std::to_string(i) + ")";
        pc.element("f(a+b) = f(a)+f(b)" + tag, ring, f(ring.add(a, b)), ring.add(fa, fb));
        pc.element("f(ab) = a f(b) + f(a) b" + tag, ring, f(ring.mul(a, b)),
                   ring.add(ring.mul(a, fb), ring.mul(fa, b)));
        const auto k = ring.from_int(BigInt(static_cast<long>(i % 7) - 3));
        pc.element("f(k a) = k f(a)" + tag, ring, f(ring.mul(k, a)), ring.mul(k, fa));
    }
    return r;
}

VerificationReport verify_leibniz_chain(const Derivation& f, std::span<const RingElement> elems)
{
    auto r = start("leibniz_chain", f);
    const auto& ring = f.algebra;
    r.inputs["elements"] = json::array();
    for (const auto& e : elems) {
        require_same_ring(ring, e.ring, "leibniz_chain");
        r.inputs["elements"].push_back(to_json(e));
    }
    const std::size_t n = elems.size();

    // Ordered form from prefix and suffix products.
    std::vector<Scalar> prefix{ring.one()}, suffix(n + 1, ring.one());
    for (std::size_t i = 0; i < n; ++i)
        prefix.push_back(ring.mul(prefix.back(), elems[i].value));
    for (std::size_t i = n; i-- > 0;)
        suffix[i] = ring.mul(elems[i].value, suffix[i + 1]);
    auto ordered = ring.zero();
    for (std::size_t i = 0; i < n; ++i)
        ordered = ring.add(ordered, ring.mul(ring.mul(prefix[i], f(elems[i].value)), suffix[i + 1]));

    // Commutative form: f(a_k) times the product of the others, formed directly.
    auto commutative = ring.zero();
    for (std::size_t k = 0; k < n; ++k) {
        auto term = f(elems[k].value);
        for (std::size_t i = 0; i < n; ++i)
            if (i != k)
                term = ring.mul(term, elems[i].value);
        commutative = ring.add(commutative, term);
    }

    const auto lhs = f(prefix.back());
    PartChecker pc(r);
    pc.element("ordered product rule", ring, lhs, ordered);
    pc.element("commutative product rule", ring, lhs, commutative);
    return r;
}

VerificationReport verify_derivation_det(const Derivation& f, const Matrix<Ring>& a)
{
    require_same_ring(f.algebra, a.ring(), "derivation_det");
    if (!a.is_square())
        throw ShapeError("derivation_det: expected a square matrix");
    auto r = start("derivation_det", f);
    r.inputs["A"] = matrix_to_json(a);
    PartChecker(r).element("f(det A) = Tr(f(A) adj A)", a.ring(), f(det(a)),
                           trace(apply_entrywise(f, a) * adjugate_cofactor(a)));
    return r;
}

VerificationReport verify_derivation_det_rows(const Derivation& f, const Matrix<Ring>& a)
{
    require_same_ring(f.algebra, a.ring(), "derivation_det_rows");
    if (!a.is_square())
        throw ShapeError("derivation_det_rows: expected a square matrix");
    auto r = start("derivation_det_rows", f);
    r.inputs["A"] = matrix_to_json(a);
    const auto& ring = a.ring();
    auto rhs = ring.zero();
    for (std::size_t k = 1; k <= a.rows(); ++k)
        rhs = ring.add(rhs, det(replace_row(a, k, apply_entrywise(f, row(a, k)))));
    PartChecker(r).element("f(det A) = sum_k det A'_k", ring, f(det(a)), rhs);
    return r;
}

} // namespace exactla
