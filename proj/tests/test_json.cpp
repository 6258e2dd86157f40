#include "doctest.h"
#include "helpers.hpp"

#include "exactla/charpoly.hpp"
#include "exactla/error.hpp"
#include "exactla/json_io.hpp"

using namespace th;
using nlohmann::json;

namespace {

// Runs f and returns the message of the exception of type E it throws.
template <class E, class F>
std::string message_of(F&& f)
{
    try {
        f();
    } catch (const E& e) {
        return e.what();
    }
    return "<no exception>";
}

} // namespace

TEST_CASE("ring descriptors")
{
    CHECK(ring_to_json(Z()) == json{{"kind", "int"}});
    CHECK(ring_to_json(Zm(8)) == json{{"kind", "mod"}, {"m", "8"}});
    CHECK(ring_to_json(Pol(Q())) == json{{"kind", "poly"}, {"base", {{"kind", "rat"}}}});

    for (const auto& r : {Z(), Q(), Zm(1), Zm(8), Pol(Z()), Pol(Pol(Zm(3)))})
        CHECK(ring_from_json(ring_to_json(r)) == r);
    CHECK(ring_from_json(json{{"kind", "mod"}, {"m", 8}}) == Zm(8));

    CHECK(parse_ring("int") == Z());
    CHECK(parse_ring("rat") == Q());
    CHECK(parse_ring("mod:8") == Zm(8));
    CHECK(parse_ring("poly:mod:4") == Pol(Zm(4)));
    CHECK(parse_ring("poly:poly:int") == Pol(Pol(Z())));
    CHECK(parse_ring(R"({"kind":"poly","base":{"kind":"int"}})") == Pol(Z()));

    CHECK_THROWS_AS(parse_ring("mod:0"), ParseError);
    CHECK_THROWS_AS(parse_ring("mod:x"), ParseError);
    CHECK_THROWS_AS(parse_ring("field"), ParseError);
    CHECK_THROWS_AS(parse_ring("{bad json"), ParseError);
    CHECK(message_of<ParseError>([] { ring_from_json(json{{"kind", "mod"}}); }).find("ring.m") == 0);
    CHECK(message_of<ParseError>([] { ring_from_json(json{{"kind", "real"}}); }).find("ring.kind") == 0);
}

TEST_CASE("elements")
{
    CHECK(element_to_json(Z(), el(Z(), -12)) == "-12");
    CHECK(element_to_json(Q(), frac(1, 2)) == json{{"num", "1"}, {"den", "2"}});
    CHECK(element_to_json(Pol(Z()), pel(Pol(Z()), {1, 0, 3})) == json{"1", "0", "3"});

    CHECK(element_from_json(Zm(8), "-1") == el(Zm(8), 7));
    CHECK(element_from_json(Zm(8), 10) == el(Zm(8), 2));
    CHECK(element_from_json(Q(), "2/-4") == frac(-1, 2));
    CHECK(element_from_json(Q(), json{{"num", "3"}, {"den", "6"}}) == frac(1, 2));
    CHECK(element_from_json(Pol(Z()), json{1, 2, 0}) == pel(Pol(Z()), {1, 2}));
    CHECK(element_from_json(Z(), "123456789012345678901234567890") ==
          Z().from_int(BigInt("123456789012345678901234567890", 10)));

    CHECK_THROWS_AS(element_from_json(Z(), "1.5"), ParseError);
    CHECK_THROWS_AS(element_from_json(Z(), 1.5), ParseError);
    CHECK_THROWS_AS(element_from_json(Q(), "1/0"), ParseError);
    CHECK_THROWS_AS(element_from_json(Q(), json{{"num", "1"}, {"den", "0"}}), ParseError);
    CHECK_THROWS_AS(element_from_json(Pol(Z()), "3"), ParseError);

    SplitMix64 rng(71);
    for (const auto& r : {Z(), Zm(6), Q(), Pol(Q()), Pol(Pol(Zm(4)))})
        for (int i = 0; i < 50; ++i) {
            const auto x = random_element(rng, r);
            CHECK(element_from_json(r, element_to_json(r, x)) == x);
        }
}

TEST_CASE("matrices")
{
    const auto a = mat(Z(), {{1, 2}, {3, 4}});
    const auto j = matrix_to_json(a);
    CHECK(j.at("rows") == 2);
    CHECK(j.at("cols") == 2);
    CHECK(j.at("entries") == json::parse(R"([["1","2"],["3","4"]])"));
    CHECK(matrix_from_json(j) == a);

    // rows and cols may be omitted; integers may be plain JSON numbers.
    CHECK(matrix_from_json(json::parse(R"({"ring":{"kind":"int"},"entries":[[1,2],[3,4]]})")) == a);
    // An explicit ring overrides the one in the document.
    CHECK(matrix_from_json(j, Zm(3)) == mat(Zm(3), {{1, 2}, {0, 1}}));
    CHECK(matrix_from_json(json::parse(R"({"entries":[[5]]})"), Zm(3)) == mat(Zm(3), {{2}}));

    const auto empty = matrix_from_json(json::parse(R"({"ring":{"kind":"int"},"entries":[]})"));
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 0);
    CHECK(matrix_from_json(matrix_to_json(empty)) == empty);

    CHECK(message_of<ShapeError>([] {
              matrix_from_json(json::parse(R"({"ring":{"kind":"int"},"entries":[[1,2],[3]]})"));
          }).find("entries[1]") == 0);
    CHECK(message_of<ShapeError>([] {
              matrix_from_json(json::parse(R"({"ring":{"kind":"int"},"rows":3,"entries":[[1]]})"));
          }).find("rows") == 0);
    CHECK(message_of<ParseError>([] { matrix_from_json(json::parse(R"({"entries":[[1]]})")); }).find("ring") == 0);
    CHECK(message_of<ParseError>([] {
              matrix_from_json(json::parse(R"({"ring":{"kind":"int"},"entries":[["x"]]})"));
          }).find("entries[0][0]") == 0);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"ring":{"kind":"int"},"entries":5})")), ParseError);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[1,2]")), ParseError);

    SplitMix64 rng(72);
    for (const auto& r : test_rings())
        for (int i = 0; i < 20; ++i) {
            const auto m = random_matrix(rng, r, rng.uniform(4), rng.uniform(4) + 1);
            CHECK(matrix_from_json(json::parse(matrix_to_json(m).dump())) == m);
        }
}

TEST_CASE("polynomials and characteristic-polynomial data")
{
    const auto f = poly(Z(), {-2, -5, 1});
    CHECK(polynomial_to_json(f) == json{{"coeffs", {"-2", "-5", "1"}}});
    CHECK(polynomial_from_json(Z(), polynomial_to_json(f)) == f);
    CHECK(polynomial_from_json(Z(), json{{"coeffs", json::array()}}).is_zero());
    CHECK_THROWS_AS(polynomial_from_json(Z(), json{1, 2}), ParseError);

    const auto cp = charpoly_direct(mat(Z(), {{1, 2}, {3, 4}}));
    const auto j = charpoly_to_json(cp);
    CHECK(j.at("c") == json{"1", "-5", "-2"});
    CHECK(j.at("chi") == json{{"coeffs", {"-2", "-5", "1"}}});
    CHECK(j.at("D").size() == 2);
    CHECK(charpoly_from_json(Z(), j) == cp);

    SplitMix64 rng(73);
    for (const auto& r : test_rings())
        for (int i = 0; i < 10; ++i) {
            const auto c = charpoly_direct(random_matrix(rng, r, i % 4, i % 4));
            CHECK(charpoly_from_json(r, json::parse(charpoly_to_json(c).dump())) == c);
        }

    auto bad = j;
    bad["D"].erase(0);
    CHECK(message_of<ShapeError>([&] { charpoly_from_json(Z(), bad); }).find("D") == 0);
}

TEST_CASE("matrices over R[t] in both forms")
{
    SplitMix64 rng(74);
    const auto a = random_matrix(rng, Zm(6), 3, 3);
    const auto m = t_identity_plus(-a);
    const auto d = to_descriptor_form(m);
    CHECK(d.ring() == Pol(Zm(6)));
    CHECK(to_polynomial_form(d) == m);
    CHECK(matrix_to_json(m) == matrix_to_json(d));
}
