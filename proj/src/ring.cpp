#include "exactla/ring.hpp"

#include <sstream>

#include "exactla/error.hpp"
#include "exactla/rings.hpp"

namespace exactla {

struct Ring::Node {
    Kind kind;
    std::optional<ModularRing> mod;
    std::optional<Ring> base;
};

namespace {

const BigInt& as_int(const Scalar& a)
{
    if (const auto* p = std::get_if<BigInt>(&a.rep))
        return *p;
    throw RingMismatch("expected an integer value");
}

const BigRational& as_rat(const Scalar& a)
{
    if (const auto* p = std::get_if<BigRational>(&a.rep))
        return *p;
    throw RingMismatch("expected a rational value");
}

const std::vector<Scalar>& as_coeffs(const Scalar& a)
{
    if (const auto* p = std::get_if<std::vector<Scalar>>(&a.rep))
        return *p;
    throw RingMismatch("expected a polynomial value");
}

Scalar wrap(BigInt x) { return Scalar{std::move(x)}; }
Scalar wrap(BigRational x) { return Scalar{std::move(x)}; }
Scalar wrap(std::vector<Scalar> x) { return Scalar{std::move(x)}; }

} // namespace

Ring Ring::integers()
{
    static const Ring z(std::make_shared<const Node>(Node{Kind::integers, std::nullopt, std::nullopt}));
    return z;
}

Ring Ring::modular(const BigInt& m)
{
    return Ring(std::make_shared<const Node>(Node{Kind::modular, ModularRing(m), std::nullopt}));
}

Ring Ring::rationals()
{
    static const Ring q(std::make_shared<const Node>(Node{Kind::rationals, std::nullopt, std::nullopt}));
    return q;
}

Ring Ring::polynomial(const Ring& base)
{
    return Ring(std::make_shared<const Node>(Node{Kind::polynomial, std::nullopt, base}));
}

Ring::Kind Ring::kind() const { return node_->kind; }

const BigInt& Ring::modulus() const
{
    if (node_->kind != Kind::modular)
        throw DomainError("ring " + name() + " has no modulus");
    return node_->mod->modulus();
}

const Ring& Ring::base() const
{
    if (node_->kind != Kind::polynomial)
        throw DomainError("ring " + name() + " is not a polynomial ring");
    return *node_->base;
}

std::string Ring::name() const
{
    switch (node_->kind) {
    case Kind::integers:
        return "Z";
    case Kind::modular:
        return "Z/" + modulus().get_str();
    case Kind::rationals:
        return "Q";
    case Kind::polynomial: {
        std::string b = base().name();
        return b + "[t]";
    }
    }
    return "?";
}

BigInt Ring::characteristic() const
{
    switch (node_->kind) {
    case Kind::modular:
        return modulus();
    case Kind::polynomial:
        return base().characteristic();
    default:
        return 0;
    }
}

bool operator==(const Ring& a, const Ring& b)
{
    if (a.node_ == b.node_)
        return true;
    if (a.node_->kind != b.node_->kind)
        return false;
    switch (a.node_->kind) {
    case Ring::Kind::modular:
        return a.modulus() == b.modulus();
    case Ring::Kind::polynomial:
        return a.base() == b.base();
    default:
        return true;
    }
}

Scalar Ring::zero() const
{
    switch (node_->kind) {
    case Kind::rationals:
        return wrap(BigRational(0));
    case Kind::polynomial:
        return wrap(std::vector<Scalar>{});
    default:
        return wrap(BigInt(0));
    }
}

Scalar Ring::one() const { return from_int(1); }

Scalar Ring::from_int(const BigInt& k) const
{
    switch (node_->kind) {
    case Kind::integers:
        return wrap(k);
    case Kind::modular:
        return wrap(node_->mod->from_int(k));
    case Kind::rationals:
        return wrap(BigRational(k));
    case Kind::polynomial: {
        std::vector<Scalar> c{base().from_int(k)};
        poly_detail::trim(base(), c);
        return wrap(std::move(c));
    }
    }
    return zero();
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const
{
    switch (node_->kind) {
    case Kind::integers:
        return wrap(BigInt(as_int(a) + as_int(b)));
    case Kind::modular:
        return wrap(node_->mod->add(as_int(a), as_int(b)));
    case Kind::rationals:
        return wrap(BigRational(as_rat(a) + as_rat(b)));
    case Kind::polynomial:
        return wrap(poly_detail::add<Ring>(base(), as_coeffs(a), as_coeffs(b)));
    }
    return zero();
}

Scalar Ring::sub(const Scalar& a, const Scalar& b) const
{
    switch (node_->kind) {
    case Kind::integers:
        return wrap(BigInt(as_int(a) - as_int(b)));
    case Kind::modular:
        return wrap(node_->mod->sub(as_int(a), as_int(b)));
    case Kind::rationals:
        return wrap(BigRational(as_rat(a) - as_rat(b)));
    case Kind::polynomial:
        return wrap(poly_detail::sub<Ring>(base(), as_coeffs(a), as_coeffs(b)));
    }
    return zero();
}

Scalar Ring::neg(const Scalar& a) const
{
    switch (node_->kind) {
    case Kind::integers:
        return wrap(BigInt(-as_int(a)));
    case Kind::modular:
        return wrap(node_->mod->neg(as_int(a)));
    case Kind::rationals:
        return wrap(BigRational(-as_rat(a)));
    case Kind::polynomial:
        return wrap(poly_detail::neg<Ring>(base(), as_coeffs(a)));
    }
    return zero();
}

Scalar Ring::mul(const Scalar& a, const Scalar& b) const
{
    switch (node_->kind) {
    case Kind::integers:
        return wrap(BigInt(as_int(a) * as_int(b)));
    case Kind::modular:
        return wrap(node_->mod->mul(as_int(a), as_int(b)));
    case Kind::rationals:
        return wrap(BigRational(as_rat(a) * as_rat(b)));
    case Kind::polynomial:
        return wrap(poly_detail::mul<Ring>(base(), as_coeffs(a), as_coeffs(b)));
    }
    return zero();
}

bool Ring::is_zero(const Scalar& a) const
{
    switch (node_->kind) {
    case Kind::rationals:
        return sgn(as_rat(a)) == 0;
    case Kind::polynomial:
        return as_coeffs(a).empty();
    default:
        return sgn(as_int(a)) == 0;
    }
}

bool Ring::is_q_algebra() const
{
    switch (node_->kind) {
    case Kind::rationals:
        return true;
    case Kind::polynomial:
        return base().is_q_algebra();
    default:
        return false;
    }
}

std::optional<Scalar> Ring::div_int(const Scalar& a, unsigned long d) const
{
    if (d == 0)
        throw DomainError("division by zero");
    switch (node_->kind) {
    case Kind::rationals: {
        auto q = RationalRing{}.div_int(as_rat(a), d);
        return wrap(std::move(*q));
    }
    case Kind::polynomial: {
        auto q = poly_detail::div_int<Ring>(base(), as_coeffs(a), d);
        if (!q)
            return std::nullopt;
        return wrap(std::move(*q));
    }
    default:
        return std::nullopt;
    }
}

Scalar Ring::canonical(Scalar raw) const
{
    switch (node_->kind) {
    case Kind::integers:
        if (!std::holds_alternative<BigInt>(raw.rep))
            throw ParseError("expected an integer for ring " + name());
        return raw;
    case Kind::modular:
        if (!std::holds_alternative<BigInt>(raw.rep))
            throw ParseError("expected an integer residue for ring " + name());
        return wrap(node_->mod->reduce(std::get<BigInt>(raw.rep)));
    case Kind::rationals: {
        if (auto* i = std::get_if<BigInt>(&raw.rep))
            return wrap(BigRational(*i));
        auto* q = std::get_if<BigRational>(&raw.rep);
        if (!q)
            throw ParseError("expected a rational for ring " + name());
        if (sgn(q->get_den()) == 0)
            throw ParseError("zero denominator");
        BigRational c = *q;
        c.canonicalize();
        return wrap(std::move(c));
    }
    case Kind::polynomial: {
        auto* v = std::get_if<std::vector<Scalar>>(&raw.rep);
        if (!v)
            throw ParseError("expected a coefficient list for ring " + name());
        std::vector<Scalar> c;
        c.reserve(v->size());
        for (auto& x : *v)
            c.push_back(base().canonical(std::move(x)));
        poly_detail::trim(base(), c);
        return wrap(std::move(c));
    }
    }
    return raw;
}

const std::vector<Scalar>& Ring::coefficients(const Scalar& a) const
{
    if (node_->kind != Kind::polynomial)
        throw DomainError("ring " + name() + " is not a polynomial ring");
    return as_coeffs(a);
}

Scalar Ring::from_coefficients(std::vector<Scalar> coeffs) const
{
    if (node_->kind != Kind::polynomial)
        throw DomainError("ring " + name() + " is not a polynomial ring");
    poly_detail::trim(base(), coeffs);
    return wrap(std::move(coeffs));
}

Scalar Ring::indeterminate() const
{
    return from_coefficients({base().zero(), base().one()});
}

std::string Ring::to_string(const Scalar& a) const
{
    switch (node_->kind) {
    case Kind::integers:
    case Kind::modular:
        return as_int(a).get_str();
    case Kind::rationals:
        return as_rat(a).get_str();
    case Kind::polynomial: {
        const auto& c = as_coeffs(a);
        if (c.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c.size(); k-- > 0;) {
            if (base().is_zero(c[k]))
                continue;
            if (!first)
                os << " + ";
            first = false;
            os << "(" << base().to_string(c[k]) << ")";
            if (k >= 1)
                os << "*t";
            if (k >= 2)
                os << "^" << k;
        }
        return os.str();
    }
    }
    return "?";
}

Polynomial<Ring> as_polynomial(const Ring& poly_ring, const Scalar& a)
{
    const auto& c = poly_ring.coefficients(a);
    return Polynomial<Ring>(poly_ring.base(), std::vector<Scalar>(c.begin(), c.end()));
}

Scalar from_polynomial(const Ring& poly_ring, const Polynomial<Ring>& f)
{
    require_same_ring(poly_ring.base(), f.ring(), "polynomial conversion");
    return poly_ring.from_coefficients(std::vector<Scalar>(f.coeffs().begin(), f.coeffs().end()));
}

void require_same_ring(const Ring& a, const Ring& b, const char* what)
{
    if (!(a == b))
        throw RingMismatch(std::string(what) + ": ring mismatch (" + a.name() + " vs " + b.name() + ")");
}

RingElement operator+(const RingElement& a, const RingElement& b)
{
    require_same_ring(a.ring, b.ring, "add");
    return {a.ring, a.ring.add(a.value, b.value)};
}

RingElement operator-(const RingElement& a, const RingElement& b)
{
    require_same_ring(a.ring, b.ring, "sub");
    return {a.ring, a.ring.sub(a.value, b.value)};
}

RingElement operator*(const RingElement& a, const RingElement& b)
{
    require_same_ring(a.ring, b.ring, "mul");
    return {a.ring, a.ring.mul(a.value, b.value)};
}

RingElement operator-(const RingElement& a) { return {a.ring, a.ring.neg(a.value)}; }

RingElement int_embed(const Ring& ring, const BigInt& k) { return {ring, ring.from_int(k)}; }

std::optional<RingElement> try_div_int(const RingElement& x, unsigned long k)
{
    if (k == 0)
        throw DomainError("try_div_int: divisor must be positive");
    if (!x.ring.is_q_algebra())
        return std::nullopt;
    auto q = x.ring.div_int(x.value, k);
    if (!q)
        return std::nullopt;
    return RingElement{x.ring, std::move(*q)};
}

} // namespace exactla
