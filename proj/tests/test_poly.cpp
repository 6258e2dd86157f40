#include "doctest.h"
#include "helpers.hpp"

#include "exactla/error.hpp"

using namespace th;

namespace {

// Schoolbook convolution, written independently of the library's product.
Scalar convolution_coeff(const Polynomial<Ring>& f, const Polynomial<Ring>& g, long k)
{
    const Ring& r = f.ring();
    auto s = r.zero();
    for (long i = 0; i <= k; ++i)
        s = r.add(s, r.mul(f.coeff(i), g.coeff(k - i)));
    return s;
}

} // namespace

TEST_CASE("coefficient access")
{
    const auto chi = poly(Z(), {-2, -5, 1});
    CHECK(chi.coeff(1) == el(Z(), -5));
    CHECK(chi.coeff(7) == el(Z(), 0));
    CHECK(chi.coeff(-1) == el(Z(), 0));
    CHECK(chi.degree() == 2);
    CHECK(Polynomial<Ring>(Z()).degree() == -1);
    CHECK(poly(Z(), {3, 0, 0}).degree() == 0);
}

TEST_CASE("products")
{
    CHECK(poly(Z(), {1, 1}) * poly(Z(), {-1, 1}) == poly(Z(), {-1, 0, 1}));
    const auto f = poly(Z(), {3, -1, 4});
    CHECK(f * poly(Z(), {1}) == f);
    CHECK((poly(Zm(8), {0, 2}) * poly(Zm(8), {4})).is_zero());
    CHECK_THROWS_AS(poly(Z(), {1}) * poly(Q(), {1}), RingMismatch);
}

TEST_CASE("derivative")
{
    CHECK(derivative(poly(Z(), {-2, -5, 1})) == poly(Z(), {-5, 2}));
    CHECK(derivative(poly(Z(), {7})).is_zero());
    auto t8 = Polynomial<Ring>::monomial(Zm(8), Zm(8).one(), 8);
    CHECK(derivative(t8).is_zero());
    CHECK(derivative(Polynomial<Ring>::monomial(Z(), Z().one(), 3)) ==
          Polynomial<Ring>::monomial(Z(), el(Z(), 3), 2));
}

TEST_CASE("evaluation at zero")
{
    CHECK(eval_zero(poly(Z(), {-2, -5, 1})) == el(Z(), -2));
    CHECK(eval_zero(Polynomial<Ring>(Z())) == el(Z(), 0));
    CHECK(eval_zero(Polynomial<Ring>::t(Z())) == el(Z(), 0));
    CHECK(evaluate(poly(Z(), {-2, -5, 1}), el(Z(), 3)) == el(Z(), -8));
}

TEST_CASE("matrix substitution")
{
    CHECK(apply_to_matrix(Polynomial<Ring>::monomial(Z(), Z().one(), 2), mat(Z(), {{0, 1}, {0, 0}})).is_zero());
    const auto a = mat(Z(), {{1, 2}, {3, 4}});
    CHECK(apply_to_matrix(poly(Z(), {1}), a) == Matrix<Ring>::identity(Z(), 2));
    CHECK(apply_to_matrix(poly(Z(), {-2, -5, 1}), a).is_zero());
    const auto empty = Matrix<Ring>(Z(), 0, 0);
    CHECK(apply_to_matrix(poly(Z(), {5, 1}), empty) == empty);
    CHECK_THROWS_AS(apply_to_matrix(poly(Z(), {1}), mat(Z(), {{1, 2}})), ShapeError);
    CHECK_THROWS_AS(apply_to_matrix(poly(Q(), {1}), a), RingMismatch);
}

TEST_CASE("product coefficients match the convolution sum")
{
    SplitMix64 rng(11);
    for (const auto& r : test_rings()) {
        CAPTURE(r.name());
        for (int i = 0; i < 40; ++i) {
            const auto f = random_polynomial(rng, r, rng.uniform(5));
            const auto g = random_polynomial(rng, r, rng.uniform(5));
            const auto fg = f * g;
            CHECK(fg.degree() <= std::max<long>(-1, f.degree() + g.degree()));
            for (long k = -1; k <= 9; ++k)
                CHECK(fg.coeff(k) == (k < 0 ? r.zero() : convolution_coeff(f, g, k)));
        }
    }
}

TEST_CASE("derivative obeys the Leibniz rule; eval_zero is a ring map")
{
    SplitMix64 rng(12);
    for (const auto& r : test_rings()) {
        CAPTURE(r.name());
        for (int i = 0; i < 40; ++i) {
            const auto f = random_polynomial(rng, r, rng.uniform(5));
            const auto g = random_polynomial(rng, r, rng.uniform(5));
            CHECK(derivative(f * g) == f * derivative(g) + derivative(f) * g);
            CHECK(eval_zero(f * g) == r.mul(eval_zero(f), eval_zero(g)));
            CHECK(eval_zero(f + g) == r.add(eval_zero(f), eval_zero(g)));
        }
    }
}

TEST_CASE("matrix substitution is multiplicative")
{
    SplitMix64 rng(13);
    for (const auto& r : test_rings()) {
        CAPTURE(r.name());
        for (int i = 0; i < 20; ++i) {
            const auto n = rng.uniform(4);
            const auto a = random_matrix(rng, r, n, n);
            const auto f = random_polynomial(rng, r, rng.uniform(4));
            const auto g = random_polynomial(rng, r, rng.uniform(4));
            CHECK(apply_to_matrix(f * g, a) == apply_to_matrix(f, a) * apply_to_matrix(g, a));
            CHECK(apply_to_matrix(f + g, a) == apply_to_matrix(f, a) + apply_to_matrix(g, a));
        }
    }
}

TEST_CASE("static polynomial ring models the ring concept")
{
    const PolynomialRing<Ring> p(Z());
    const auto t = p.t();
    CHECK(p.mul(t, t) == Polynomial<Ring>::monomial(Z(), Z().one(), 2));
    CHECK(p.is_zero(p.sub(t, t)));
    CHECK(p.from_int(BigInt(3)) == poly(Z(), {3}));
    CHECK_FALSE(p.is_q_algebra());
    CHECK(PolynomialRing<Ring>(Q()).is_q_algebra());
}
