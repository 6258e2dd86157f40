#include "doctest.h"
#include "helpers.hpp"

#include "exactla/error.hpp"

using namespace th;

namespace {

using Idx = std::vector<std::size_t>;

Matrix<Ring> sub(const Matrix<Ring>& a, const Idx& rows, const Idx& cols) { return submatrix(a, rows, cols); }

// Laplace expansion along row p, recursing on minors; a third determinant route.
Scalar laplace(const Matrix<Ring>& a, std::size_t p)
{
    const Ring& r = a.ring();
    const std::size_t n = a.rows();
    if (n == 0)
        return r.one();
    auto s = r.zero();
    for (std::size_t q = 1; q <= n; ++q) {
        const auto m = minor_remove(a, p, q);
        auto term = r.mul(a(p - 1, q - 1), m.rows() == 0 ? r.one() : laplace(m, 1));
        s = (p + q) % 2 == 0 ? r.add(s, term) : r.sub(s, term);
    }
    return s;
}

} // namespace

TEST_CASE("products")
{
    const auto a = mat(Z(), {{1, 2}, {3, 4}});
    CHECK(a * Matrix<Ring>::identity(Z(), 2) == a);
    CHECK(a * a == mat(Z(), {{7, 10}, {15, 22}}));
    CHECK((mat(Zm(8), {{2}}) * mat(Zm(8), {{4}})).is_zero());
    CHECK_THROWS_AS(a * mat(Z(), {{1, 2, 3}}), ShapeError);
    CHECK_THROWS_AS(a * mat(Q(), {{1, 0}, {0, 1}}), RingMismatch);
    CHECK(mat(Z(), {{1, 2, 3}}) * mat(Z(), {{1}, {1}, {1}}) == mat(Z(), {{6}}));
}

TEST_CASE("trace")
{
    CHECK(trace(mat(Z(), {{1, 2}, {3, 4}})) == el(Z(), 5));
    CHECK(Z().is_zero(trace(Matrix<Ring>::zero(Z(), 3, 3))));
    CHECK(Zm(3).is_zero(trace(Matrix<Ring>::identity(Zm(3), 3))));
    CHECK_THROWS_AS(trace(mat(Z(), {{1, 2}})), ShapeError);
}

TEST_CASE("determinants")
{
    const auto a = mat(Z(), {{1, 2}, {3, 4}});
    CHECK(det(a) == el(Z(), -2));
    CHECK(det_leibniz(a) == el(Z(), -2));
    for (std::size_t n = 0; n < 6; ++n)
        CHECK(det(Matrix<Ring>::identity(Z(), n)) == el(Z(), 1));
    CHECK(det(Matrix<Ring>(Z(), 0, 0)) == el(Z(), 1));
    CHECK(det_leibniz(Matrix<Ring>(Z(), 0, 0)) == el(Z(), 1));
    CHECK(Zm(8).is_zero(det(mat(Zm(8), {{2, 0}, {0, 4}}))));
    CHECK(det_leibniz(mat(Z(), {{7}})) == el(Z(), 7));
    CHECK(det_leibniz(mat(Z(), {{0, 1}, {1, 0}})) == el(Z(), -1));
    CHECK_THROWS_AS(det(mat(Z(), {{1, 2}})), ShapeError);
    CHECK_THROWS_AS(det_leibniz(Matrix<Ring>::identity(Z(), 9)), DomainError);
    // The subset DP handles sizes the permutation sum cannot.
    CHECK(det(Matrix<Ring>::identity(Z(), 12)) == el(Z(), 1));
}

TEST_CASE("minors and submatrices")
{
    const auto a = mat(Z(), {{1, 2}, {3, 4}});
    CHECK(minor_remove(a, 1, 1) == mat(Z(), {{4}}));
    CHECK(minor_remove(a, 2, 1) == mat(Z(), {{2}}));
    const auto one = minor_remove(mat(Z(), {{5}}), 1, 1);
    CHECK(one.rows() == 0);
    CHECK(one.cols() == 0);
    CHECK_THROWS_AS(minor_remove(a, 3, 1), IndexError);
    CHECK_THROWS_AS(minor_remove(a, 0, 1), IndexError);

    CHECK(sub(a, {1, 2}, {1, 2}) == a);
    CHECK(sub(a, {2}, {1, 2}) == mat(Z(), {{3, 4}}));
    CHECK(sub(a, {1, 1}, {1}) == mat(Z(), {{1}, {1}}));
    CHECK(sub(a, {2, 1}, {2, 1}) == mat(Z(), {{4, 3}, {2, 1}}));
    CHECK_THROWS_AS(sub(a, {3}, {1}), IndexError);
}

TEST_CASE("cofactor adjugate")
{
    CHECK(adjugate_cofactor(mat(Z(), {{1, 2}, {3, 4}})) == mat(Z(), {{4, -2}, {-3, 1}}));
    CHECK(adjugate_cofactor(Matrix<Ring>::identity(Z(), 4)) == Matrix<Ring>::identity(Z(), 4));
    CHECK(adjugate_cofactor(mat(Z(), {{7}})) == mat(Z(), {{1}}));
    const auto empty = adjugate_cofactor(Matrix<Ring>(Z(), 0, 0));
    CHECK(empty.rows() == 0);
}

TEST_CASE("entrywise maps")
{
    const auto a = mat(Z(), {{1, 2}, {3, 4}});
    CHECK(entrywise_map(a, Z(), [](const Scalar& x) { return x; }) == a);
    const auto tia = t_identity_plus(a);
    CHECK(entrywise_map(tia, Z(), [](const Polynomial<Ring>& f) { return eval_zero(f); }) == a);
    const auto tma = t_identity_plus(-a);
    CHECK(entrywise_map(tma, Z(), [](const Polynomial<Ring>& f) { return derivative(f).coeff(0); }) ==
          Matrix<Ring>::identity(Z(), 2));
    CHECK(entrywise_map(a, Zm(3), [](const Scalar& x) { return Zm(3).canonical(x); }) ==
          mat(Zm(3), {{1, 2}, {0, 1}}));
}

TEST_CASE("blocks, ent and rows")
{
    const auto i1 = Matrix<Ring>::identity(Z(), 1);
    const auto z1 = Matrix<Ring>::zero(Z(), 1, 1);
    CHECK(block2x2(BlockQuad<Ring>{i1, z1, z1, i1}) == Matrix<Ring>::identity(Z(), 2));

    const auto a = mat(Z(), {{1, 2}, {3, 4}});
    const auto b = mat(Z(), {{5, 6}, {7, 8}});
    const auto c = mat(Z(), {{9, 10}, {11, 12}});
    const auto d = mat(Z(), {{13, 14}, {15, 16}});
    CHECK(block2x2(BlockQuad<Ring>{a, b, c, d}) ==
          mat(Z(), {{1, 2, 5, 6}, {3, 4, 7, 8}, {9, 10, 13, 14}, {11, 12, 15, 16}}));
    const auto bordered = block2x2(BlockQuad<Ring>{a, mat(Z(), {{0}, {1}}), mat(Z(), {{0, 1}}), mat(Z(), {{0}})});
    CHECK(bordered == mat(Z(), {{1, 2, 0}, {3, 4, 1}, {0, 1, 0}}));
    CHECK_THROWS_AS(block2x2(BlockQuad<Ring>{a, mat(Z(), {{1}}), c, d}), ShapeError);

    CHECK(ent(mat(Z(), {{7}})) == el(Z(), 7));
    CHECK(ent(mat(Z(), {{1, 0}}) * mat(Z(), {{3}, {5}})) == el(Z(), 3));
    CHECK(ent(Matrix<Ring>::identity(Z(), 1)) == el(Z(), 1));
    CHECK_THROWS_AS(ent(a), ShapeError);

    CHECK(row(a, 2) == mat(Z(), {{3, 4}}));
    CHECK(row(Matrix<Ring>::identity(Z(), 3), 2) == mat(Z(), {{0, 1, 0}}));
    CHECK(row(a * b, 2) == row(a, 2) * b);
    CHECK_THROWS_AS(row(a, 3), IndexError);
    CHECK(replace_row(a, 1, mat(Z(), {{9, 9}})) == mat(Z(), {{9, 9}, {3, 4}}));
}

TEST_CASE("determinant agrees with two independent routes")
{
    SplitMix64 rng(21);
    for (const auto& r : test_rings()) {
        CAPTURE(r.name());
        for (int i = 0; i < 60; ++i) {
            const auto n = static_cast<std::size_t>(rng.uniform(6));
            const auto a = random_matrix(rng, r, n, n);
            const auto d = det(a);
            CHECK(d == det_leibniz(a));
            if (n > 0)
                CHECK(d == laplace(a, 1 + rng.uniform(n)));
        }
    }
}

TEST_CASE("matrix-core properties on random input")
{
    SplitMix64 rng(22);
    for (const auto& r : test_rings()) {
        CAPTURE(r.name());
        for (int i = 0; i < 40; ++i) {
            const auto n = static_cast<std::size_t>(rng.uniform(6));
            const auto m = static_cast<std::size_t>(rng.uniform(4));
            const auto a = random_matrix(rng, r, n, n);
            const auto b = random_matrix(rng, r, n, n);
            const auto adj = adjugate_cofactor(a);
            const auto dI = scale(det(a), Matrix<Ring>::identity(r, n));
            CHECK(a * adj == dI);
            CHECK(adj * a == dI);
            CHECK(det(a * b) == r.mul(det(a), det(b)));

            const auto lambda = random_element(rng, r);
            CHECK(det(scale(lambda, a)) == r.mul(power(r, lambda, n), det(a)));

            // Tr(XY) as a double sum, and Tr(XY) = Tr(YX), for rectangular X, Y.
            const auto x = random_matrix(rng, r, n, m);
            const auto y = random_matrix(rng, r, m, n);
            auto sum = r.zero();
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < m; ++q)
                    sum = r.add(sum, r.mul(x(p, q), y(q, p)));
            CHECK(trace(x * y) == sum);
            CHECK(trace(x * y) == trace(y * x));
        }
    }
}

TEST_CASE("reduction mod 4 commutes with det, minors and adj")
{
    SplitMix64 rng(23);
    const Ring z4 = Zm(4);
    auto f = [&](const Scalar& x) { return z4.canonical(x); };
    for (int i = 0; i < 40; ++i) {
        const auto n = static_cast<std::size_t>(1 + rng.uniform(5));
        const auto a = random_matrix(rng, Z(), n, n);
        const auto fa = entrywise_map(a, z4, f);
        CHECK(f(det(a)) == det(fa));
        CHECK(entrywise_map(adjugate_cofactor(a), z4, f) == adjugate_cofactor(fa));
        const auto u = 1 + rng.uniform(n), v = 1 + rng.uniform(n);
        CHECK(entrywise_map(minor_remove(a, u, v), z4, f) == minor_remove(fa, u, v));
    }
}
