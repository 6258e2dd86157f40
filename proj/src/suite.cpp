#include "exactla/suite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "exactla/derivation.hpp"
#include "exactla/error.hpp"
#include "exactla/json_io.hpp"
#include "exactla/random.hpp"
#include "exactla/verifier.hpp"

namespace exactla {

using nlohmann::json;

namespace {

const std::map<std::string, std::vector<std::string>>& groups()
{
    static const std::map<std::string, std::vector<std::string>> g = {
        {"core",
         {"det_oracle", "adj_inverse", "adj_charpoly", "adj_product", "adj_of_adj", "adj_scalar", "adj_trace",
          "trace_c1", "trace_d", "ch_d", "d_expansion", "cayley_hamilton", "trace_cayley_hamilton",
          "charpoly_newton", "ddet", "degree_bound", "functor_det", "jacobi"}},
        {"block", {"commute_swap", "block_commute", "rank1_block", "bordered", "block01", "matrix_det_lemma"}},
        {"nilpotent", {"nilpotency", "nilpotency_converse", "almkvist"}},
        {"trace", {"trace_multinomial", "row_replacement", "multinomial_rec", "frobenius"}},
        {"derivation", {"derivation_axioms", "derivation_det", "derivation_det_rows", "leibniz_chain"}},
    };
    return g;
}

constexpr std::size_t leibniz_oracle_limit = 8;

// Everything one identity check needs besides its own matrix.
struct Context {
    SplitMix64 rng;
    std::size_t variant; // picks the derivation and similar per-case choices
    const SuiteOptions& opts;
    EntryDistribution dist;
};

Matrix<Ring> square(Context& ctx, const Ring& ring, std::size_t n) { return random_matrix(ctx.rng, ring, n, n, ctx.dist); }

VerificationReport not_applicable(const char* identity, const Matrix<Ring>& a, const std::string& reason)
{
    VerificationReport r;
    r.identity = identity;
    r.inputs["ring"] = ring_to_json(a.ring());
    r.inputs["A"] = matrix_to_json(a);
    verifier_detail::hypothesis_not_met(r, reason);
    return r;
}

Derivation pick_derivation(const Context& ctx, const Ring& algebra)
{
    if (ctx.opts.derivation)
        return derivation_from_json(algebra, *ctx.opts.derivation);
    auto all = make_standard_derivations(algebra);
    return all[ctx.variant % all.size()];
}

// Derivation checks act on polynomial matrices; constant matrices are
// replaced by tI - A over base[t].
Matrix<Ring> polynomial_matrix(const Matrix<Ring>& a)
{
    if (a.ring().kind() == Ring::Kind::polynomial)
        return a;
    return to_descriptor_form(t_identity_plus(-a));
}

std::uint64_t default_prime(const Ring& ring)
{
    const BigInt ch = ring.characteristic();
    if (ch > 0 && ch.fits_ulong_p() && is_prime(ch.get_ui()))
        return ch.get_ui();
    return 2;
}

VerificationReport check(const std::string& id, const Matrix<Ring>& a, Context& ctx)
{
    const auto& ring = a.ring();
    const std::size_t n = a.rows();
    const auto& dist = ctx.dist;
    auto& rng = ctx.rng;
    if (!a.is_square())
        throw ShapeError(id + ": expected a square matrix, got " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));

    if (id == "det_oracle") {
        if (n > leibniz_oracle_limit)
            return not_applicable("det_oracle", a, "permutation oracle limited to n <= 8");
        return verify_det_oracle(a);
    }
    if (id == "adj_inverse")
        return verify_adj_inverse(a);
    if (id == "adj_charpoly")
        return verify_adj_charpoly(a);
    if (id == "adj_product")
        return verify_adj_product(a, square(ctx, ring, n));
    if (id == "adj_of_adj")
        return verify_adj_of_adj(a);
    if (id == "adj_scalar") {
        if (n == 0)
            return not_applicable("adj_scalar", a, "n >= 1 required");
        return verify_adj_scalar(a, random_element(rng, ring, dist));
    }
    if (id == "adj_trace")
        return verify_adj_trace(a);
    if (id == "trace_c1")
        return verify_trace_c1(a);
    if (id == "trace_d")
        return verify_trace_d(a);
    if (id == "ch_d")
        return verify_ch_d(a);
    if (id == "d_expansion")
        return verify_d_expansion(a);
    if (id == "cayley_hamilton")
        return verify_cayley_hamilton(a);
    if (id == "trace_cayley_hamilton")
        return verify_trace_cayley_hamilton(a, 2 * n + 1);
    if (id == "charpoly_newton")
        return verify_charpoly_newton(a);
    if (id == "ddet")
        return verify_ddet(a);
    if (id == "degree_bound")
        return verify_degree_bound(a, square(ctx, ring, n));
    if (id == "functor_det")
        return verify_functor_det(a, square(ctx, ring, n));
    if (id == "jacobi")
        return verify_jacobi_exhaustive(a);

    if (id == "commute_swap") {
        auto b = random_commuting_partner(rng, a, dist);
        return verify_commute_swap(a, b, square(ctx, ring, n));
    }
    if (id == "block_commute") {
        auto c = random_commuting_partner(rng, a, dist);
        auto b = square(ctx, ring, n);
        return verify_block_commute(a, b, c, square(ctx, ring, n));
    }
    if (id == "rank1_block") {
        const auto m = static_cast<std::size_t>(1 + rng.uniform(std::max<std::size_t>(n, 1)));
        auto d = square(ctx, ring, m);
        auto p = random_matrix(rng, ring, n, 1, dist);
        auto q = random_matrix(rng, ring, m, 1, dist);
        auto v = random_matrix(rng, ring, 1, m, dist);
        auto u = random_matrix(rng, ring, 1, n, dist);
        return verify_rank1_block(a, d, p, q, v, u);
    }
    if (id == "bordered") {
        auto u = random_matrix(rng, ring, n, 1, dist);
        auto v = random_matrix(rng, ring, 1, n, dist);
        return verify_bordered(a, u, v, random_element(rng, ring, dist));
    }
    if (id == "block01") {
        if (n == 0)
            return not_applicable("block01", a, "n >= 1 required");
        const auto m = static_cast<std::size_t>(1 + rng.uniform(n));
        return verify_block01(a, square(ctx, ring, m));
    }
    if (id == "matrix_det_lemma") {
        auto u = random_matrix(rng, ring, n, 1, dist);
        auto v = random_matrix(rng, ring, 1, n, dist);
        return verify_matrix_det_lemma(a, u, v);
    }

    if (id == "nilpotency")
        return verify_nilpotency_criterion(a);
    if (id == "nilpotency_converse")
        return verify_nilpotency_converse(a, ctx.opts.imax.value_or(2 * n + 1));
    if (id == "almkvist") {
        if (ctx.opts.k)
            return verify_almkvist(a, *ctx.opts.k);
        const auto top = static_cast<std::uint32_t>(n);
        const auto kmin = nilpotency_index(a, 2 * top + 4);
        if (!kmin)
            return verify_almkvist(a, top);
        const auto hi = std::max(top, *kmin);
        return verify_almkvist(a, *kmin + static_cast<std::uint32_t>(rng.uniform(hi - *kmin + 1)));
    }

    if (id == "trace_multinomial")
        return verify_trace_multinomial(a, static_cast<std::uint32_t>(rng.uniform(5)));
    if (id == "row_replacement")
        return verify_row_replacement(a, square(ctx, ring, n));
    if (id == "multinomial_rec") {
        MultiIndex parts;
        const auto len = 1 + rng.uniform(4);
        for (std::uint64_t i = 0; i < len; ++i)
            parts.parts.push_back(static_cast<std::uint32_t>(rng.uniform(3)));
        if (parts.total() == 0)
            parts.parts[0] = 1;
        return verify_multinomial_recurrence(parts);
    }
    if (id == "frobenius")
        return verify_frobenius_trace(a, ctx.opts.p.value_or(default_prime(ring)));

    if (id == "derivation_axioms" || id == "derivation_det" || id == "derivation_det_rows" ||
        id == "leibniz_chain") {
        const auto pm = polynomial_matrix(a);
        const auto f = pick_derivation(ctx, pm.ring());
        if (id == "derivation_det")
            return verify_derivation_det(f, pm);
        if (id == "derivation_det_rows")
            return verify_derivation_det_rows(f, pm);
        EntryDistribution d2 = dist;
        d2.poly_degree = 2;
        if (id == "derivation_axioms") {
            std::vector<std::array<Scalar, 2>> pairs;
            for (int i = 0; i < 20; ++i)
                pairs.push_back({random_element(rng, pm.ring(), d2), random_element(rng, pm.ring(), d2)});
            return verify_derivation_axioms(f, pairs);
        }
        std::vector<RingElement> elems;
        for (std::size_t i = 0; i < std::min<std::size_t>(pm.entries().size(), 5); ++i)
            elems.push_back(RingElement{pm.ring(), pm.entries()[i]});
        return verify_leibniz_chain(f, elems);
    }
    throw ParseError("suite: unknown identity '" + id + "'");
}

// Fresh input for identity id in a fuzz case.
Matrix<Ring> fuzz_input(const std::string& id, Context& ctx, const Ring& ring, std::size_t n, std::size_t case_index)
{
    if (id == "nilpotency" || id == "nilpotency_converse") {
        auto a = random_strictly_upper(ctx.rng, ring, n, ctx.dist);
        if (case_index % 2 == 0)
            return a;
        auto [u, inv] = random_unimodular(ctx.rng, ring, n, 2 * n, ctx.dist);
        return u * a * inv;
    }
    if (id == "almkvist")
        return random_nilpotent(ctx.rng, ring, n, ctx.dist);
    if (id.starts_with("derivation") || id == "leibniz_chain") {
        // Polynomial entries of degree up to 2.
        const Ring algebra = ring.kind() == Ring::Kind::polynomial ? ring : Ring::polynomial(ring);
        EntryDistribution d2 = ctx.dist;
        d2.poly_degree = 2;
        return random_matrix(ctx.rng, algebra, n, n, d2);
    }
    if (case_index % 5 == 4 && n >= 1)
        return random_singular(ctx.rng, ring, n, ctx.dist);
    return random_matrix(ctx.rng, ring, n, n, ctx.dist);
}

std::size_t identity_key(const std::string& id)
{
    const auto& all = all_identities();
    return static_cast<std::size_t>(std::find(all.begin(), all.end(), id) - all.begin());
}

} // namespace

const std::vector<std::string>& all_identities()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const char* g : {"core", "block", "nilpotent", "trace", "derivation"})
            for (const auto& id : groups().at(g))
                out.push_back(id);
        return out;
    }();
    return ids;
}

std::vector<std::string> parse_suite(std::string_view text)
{
    std::set<std::string> chosen;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string name(text.substr(start, end - start));
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        if (name == "all") {
            for (const auto& id : all_identities())
                chosen.insert(id);
        } else if (auto g = groups().find(name); g != groups().end()) {
            chosen.insert(g->second.begin(), g->second.end());
        } else if (std::find(all_identities().begin(), all_identities().end(), name) != all_identities().end()) {
            chosen.insert(name);
        } else if (!name.empty()) {
            throw ParseError("suite: unknown identity or group '" + name + "'");
        }
        start = end + 1;
    }
    std::vector<std::string> out;
    for (const auto& id : all_identities())
        if (chosen.count(id))
            out.push_back(id);
    return out;
}

bool has_block_identity(const std::vector<std::string>& ids)
{
    return std::any_of(ids.begin(), ids.end(), [](const std::string& id) {
        return id == "block_commute" || id == "rank1_block" || id == "block01";
    });
}

std::vector<VerificationReport> run_suite(const Matrix<Ring>& a, const std::vector<std::string>& ids,
                                          std::uint64_t seed, const SuiteOptions& opts)
{
    std::vector<VerificationReport> out;
    for (const auto& id : ids) {
        Context ctx{SplitMix64::stream(seed, identity_key(id)), static_cast<std::size_t>(seed % 3), opts, {}};
        out.push_back(check(id, a, ctx));
    }
    return out;
}

std::vector<VerificationReport> run_fuzz(const FuzzConfig& cfg)
{
    if (cfg.size > leibniz_oracle_limit)
        throw DomainError("size: at most 8 (the permutation oracle's limit)");
    if (has_block_identity(cfg.ids) && cfg.size > 6)
        throw DomainError("size: at most 6 when block identities are selected");
    std::vector<VerificationReport> out;
    for (std::size_t i = 0; i < cfg.count; ++i) {
        const std::uint64_t case_seed = SplitMix64::stream(cfg.seed, i).next();
        const auto n = static_cast<std::size_t>(SplitMix64::stream(case_seed, 0).uniform(cfg.size + 1));
        for (const auto& id : cfg.ids) {
            Context ctx{SplitMix64::stream(case_seed, 1 + identity_key(id)), i, cfg.opts, {}};
            auto a = fuzz_input(id, ctx, cfg.ring, n, i);
            auto r = check(id, a, ctx);
            r.inputs["seed"] = std::to_string(cfg.seed);
            r.inputs["case"] = i;
            out.push_back(std::move(r));
        }
    }
    return out;
}

} // namespace exactla
