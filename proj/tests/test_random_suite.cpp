#include "doctest.h"
#include "helpers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "exactla/error.hpp"
#include "exactla/json_io.hpp"
#include "exactla/suite.hpp"

using namespace th;

TEST_CASE("SplitMix64 reference outputs")
{
    SplitMix64 a(0);
    CHECK(a.next() == 0xE220A8397B1DCDAFull);
    CHECK(a.next() == 0x6E789E6AA1B965F4ull);
    CHECK(a.next() == 0x06C45D188009454Full);

    SplitMix64 b(1234567);
    CHECK(b.next() == 6457827717110365317ull);
    CHECK(b.next() == 3203168211198807973ull);
    CHECK(b.next() == 9817491932198370423ull);
}

TEST_CASE("streams are deterministic and distinct")
{
    auto s1 = SplitMix64::stream(42, 3);
    auto s2 = SplitMix64::stream(42, 3);
    auto s3 = SplitMix64::stream(42, 4);
    auto s4 = SplitMix64::stream(43, 3);
    const auto x = s1.next();
    CHECK(x == s2.next());
    CHECK(x != s3.next());
    CHECK(x != s4.next());
}

TEST_CASE("uniform draws stay in range and hit every value")
{
    SplitMix64 rng(61);
    for (std::uint64_t bound : {1ull, 2ull, 3ull, 7ull, 10ull}) {
        std::set<std::uint64_t> seen;
        for (int i = 0; i < 500; ++i) {
            const auto v = rng.uniform(bound);
            REQUIRE(v < bound);
            seen.insert(v);
        }
        CHECK(seen.size() == bound);
    }
    std::set<std::int64_t> ints;
    for (int i = 0; i < 2000; ++i) {
        const auto v = rng.uniform_int(-9, 9);
        REQUIRE(v >= -9);
        REQUIRE(v <= 9);
        ints.insert(v);
    }
    CHECK(ints.size() == 19);
    const BigInt big("100000000000000000000000000000", 10);
    for (int i = 0; i < 100; ++i) {
        const auto v = rng.uniform_big(big);
        REQUIRE(v >= 0);
        REQUIRE(v < big);
    }
    // Rough uniformity: each of 6 values within 20% of its expectation.
    std::map<std::uint64_t, int> counts;
    for (int i = 0; i < 60000; ++i)
        ++counts[rng.uniform(6)];
    for (const auto& [v, c] : counts)
        CHECK(std::abs(c - 10000) < 2000);
}

TEST_CASE("entry distributions")
{
    SplitMix64 rng(62);
    std::set<std::string> zs, rs;
    for (int i = 0; i < 3000; ++i) {
        const auto z = random_element(rng, Z());
        const auto v = std::get<BigInt>(z.rep);
        REQUIRE(abs(v) <= 9);
        zs.insert(v.get_str());

        const auto q = std::get<BigRational>(random_element(rng, Q()).rep);
        REQUIRE(q != 0);
        REQUIRE(abs(q.get_num()) <= 5);
        REQUIRE(q.get_den() <= 5);
        rs.insert(q.get_str());
    }
    CHECK(zs.size() == 19);
    CHECK(rs.count("-5"));
    CHECK(rs.count("1/5"));
    CHECK(rs.count("4/3"));

    std::set<std::string> m8;
    for (int i = 0; i < 400; ++i)
        m8.insert(std::get<BigInt>(random_element(rng, Zm(8)).rep).get_str());
    CHECK(m8.size() == 8);

    for (int i = 0; i < 200; ++i) {
        const auto p = random_element(rng, Pol(Z()), {9, 5, 3});
        CHECK(Pol(Z()).coefficients(p).size() <= 4);
        const auto f = random_polynomial(rng, Zm(4), 2);
        CHECK(f.degree() <= 2);
    }
}

TEST_CASE("structured generators")
{
    SplitMix64 rng(63);
    for (const auto& r : test_rings()) {
        CAPTURE(r.name());
        for (int i = 0; i < 30; ++i) {
            const auto n = static_cast<std::size_t>(1 + rng.uniform(5));
            CHECK(r.is_zero(det(random_singular(rng, r, n))));

            const auto u = random_strictly_upper(rng, r, n);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q <= p; ++q)
                    CHECK(r.is_zero(u(p, q)));
            CHECK(matrix_power(u, n).is_zero());

            const auto [w, winv] = random_unimodular(rng, r, n, 6);
            CHECK(w * winv == Matrix<Ring>::identity(r, n));

            const auto nil = random_nilpotent(rng, r, n);
            const auto k = nilpotency_index(nil, 64);
            REQUIRE(k.has_value());
            CHECK(matrix_power(nil, *k + 1).is_zero());
            if (*k > 0)
                CHECK_FALSE(matrix_power(nil, *k).is_zero());

            const auto a = random_matrix(rng, r, n, n);
            const auto c = random_commuting_partner(rng, a);
            CHECK(a * c == c * a);
        }
    }
    CHECK_FALSE(nilpotency_index(Matrix<Ring>::identity(Z(), 2), 10).has_value());
    CHECK(nilpotency_index(Matrix<Ring>::zero(Z(), 2, 2), 10) == 0u);

    // Over Z/8 some constructed nilpotents have nonzero trace.
    bool nonzero_trace = false;
    for (int i = 0; i < 200 && !nonzero_trace; ++i)
        nonzero_trace = !Zm(8).is_zero(trace(random_nilpotent(rng, Zm(8), 2)));
    CHECK(nonzero_trace);
}

TEST_CASE("suite selection")
{
    CHECK(all_identities().size() == 35);
    CHECK(parse_suite("all") == all_identities());
    CHECK(parse_suite("core").size() == 18);
    CHECK(parse_suite("block").size() == 6);
    CHECK(parse_suite("nilpotent") == std::vector<std::string>{"nilpotency", "nilpotency_converse", "almkvist"});
    CHECK(parse_suite("trace").size() == 4);
    CHECK(parse_suite("derivation").size() == 4);
    CHECK(parse_suite("frobenius,cayley_hamilton,cayley_hamilton") ==
          std::vector<std::string>{"cayley_hamilton", "frobenius"});
    CHECK(parse_suite("core,all").size() == 35);
    CHECK_THROWS_AS(parse_suite("cayley"), ParseError);
    CHECK(parse_suite("").empty());
    CHECK(parse_suite("core,") == parse_suite("core"));
    CHECK(has_block_identity(parse_suite("block")));
    CHECK_FALSE(has_block_identity(parse_suite("core,nilpotent")));
}

TEST_CASE("run_suite on a fixed matrix")
{
    const auto a = mat(Z(), {{1, 2}, {3, 4}});
    const auto reps = run_suite(a, all_identities(), 7);
    REQUIRE(reps.size() == 35);
    std::set<std::string> not_met;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        CHECK(reps[i].identity == all_identities()[i]);
        CHECK(reps[i].outcome != Outcome::failed);
        if (!reps[i].hypothesis_met())
            not_met.insert(reps[i].identity);
    }
    CHECK(not_met == std::set<std::string>{"charpoly_newton", "nilpotency", "nilpotency_converse", "almkvist",
                                           "frobenius"});
    CHECK(run_suite(a, {}, 7).empty());

    // Same seed, same reports.
    const auto again = run_suite(a, all_identities(), 7);
    for (std::size_t i = 0; i < reps.size(); ++i)
        CHECK(to_json(reps[i]) == to_json(again[i]));

    SuiteOptions opts;
    opts.p = 4;
    CHECK_THROWS_AS(run_suite(a, {"frobenius"}, 7, opts), DomainError);
    opts.p = 2;
    CHECK(run_suite(mat(Zm(2), {{1, 1}, {0, 1}}), {"frobenius"}, 7, opts)[0].passed());

    SuiteOptions k2;
    k2.k = 2;
    CHECK(run_suite(mat(Zm(8), {{2}}), {"almkvist"}, 7, k2)[0].passed());
    CHECK(run_suite(mat(Zm(8), {{2}}), {"almkvist"}, 7)[0].passed());
    CHECK(run_suite(mat(Zm(8), {{2}}), {"nilpotency"}, 7)[0].outcome == Outcome::hypothesis_not_met);

    SuiteOptions dd;
    dd.derivation = "ddt";
    for (const auto& rep : run_suite(a, parse_suite("derivation"), 7, dd))
        CHECK(rep.passed());
}

TEST_CASE("fuzz is deterministic and guarded")
{
    FuzzConfig cfg;
    cfg.ring = Zm(8);
    cfg.size = 4;
    cfg.count = 20;
    cfg.seed = 42;
    cfg.ids = parse_suite("core");
    const auto first = run_fuzz(cfg);
    const auto second = run_fuzz(cfg);
    REQUIRE(first.size() == 20 * cfg.ids.size());
    for (std::size_t i = 0; i < first.size(); ++i)
        CHECK(to_json(first[i]) == to_json(second[i]));
    CHECK(first[0].inputs.at("seed") == "42");
    CHECK(first.back().inputs.at("case") == 19);

    cfg.seed = 43;
    const auto third = run_fuzz(cfg);
    bool differs = false;
    for (std::size_t i = 0; i < first.size(); ++i)
        differs = differs || to_json(first[i]) != to_json(third[i]);
    CHECK(differs);

    cfg.count = 0;
    CHECK(run_fuzz(cfg).empty());

    cfg.count = 1;
    cfg.size = 9;
    CHECK_THROWS_AS(run_fuzz(cfg), DomainError);
    cfg.size = 7;
    cfg.ids = parse_suite("block");
    CHECK_THROWS_AS(run_fuzz(cfg), DomainError);
    cfg.size = 6;
    CHECK_NOTHROW(run_fuzz(cfg));
}

TEST_CASE("every identity passes or is gated on fuzzed inputs over the test rings")
{
    for (const auto& r : {Z(), Zm(6), Zm(8), Q(), Pol(Zm(4)), Zm(2), Zm(1)}) {
        CAPTURE(r.name());
        FuzzConfig cfg;
        cfg.ring = r;
        cfg.size = 3;
        cfg.count = 12;
        cfg.seed = 99;
        cfg.ids = all_identities();
        std::size_t met = 0;
        for (const auto& rep : run_fuzz(cfg)) {
            CHECK_MESSAGE(rep.outcome != Outcome::failed, rep.identity << " " << to_json(rep).dump());
            met += rep.hypothesis_met();
        }
        CHECK(met > 0);
    }
}
