#include "exactla/verifier.hpp"

#include <algorithm>
#include <numeric>

#include "exactla/charpoly.hpp"
#include "exactla/error.hpp"
#include "exactla/json_io.hpp"

namespace exactla {

using nlohmann::json;

namespace {

thread_local std::string g_fault_identity;

using PolyRing = PolynomialRing<Ring>;

void require_square(const Matrix<Ring>& a, const char* what)
{
    if (!a.is_square())
        throw ShapeError(std::string(what) + ": expected a square matrix, got " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
}

void require_shape(const Matrix<Ring>& a, std::size_t rows, std::size_t cols, const char* what)
{
    if (a.rows() != rows || a.cols() != cols)
        throw ShapeError(std::string(what) + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                         ", got " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

void require_same(const Matrix<Ring>& a, const Matrix<Ring>& b, const char* what)
{
    require_same_ring(a.ring(), b.ring(), what);
}

VerificationReport start(const char* identity, const Matrix<Ring>& a)
{
    VerificationReport r;
    r.identity = identity;
    r.inputs["ring"] = ring_to_json(a.ring());
    r.inputs["A"] = matrix_to_json(a);
    return r;
}

BigInt factorial(unsigned long k)
{
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

Scalar pow_int(const Ring& ring, const Scalar& x, std::uint64_t e) { return power(ring, x, e); }

Scalar scalar_of(const Ring& ring, const BigInt& k) { return ring.from_int(k); }

std::string subset_str(const SubsetSelector& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.word().size(); ++i)
        out += (i ? "," : "") + std::to_string(s.word()[i]);
    return out + "}";
}

} // namespace

// ---------------------------------------------------------------------------
// Plumbing

namespace testing {

ScopedFault::ScopedFault(std::string identity) : previous_(g_fault_identity)
{
    g_fault_identity = std::move(identity);
}

ScopedFault::~ScopedFault() { g_fault_identity = previous_; }

} // namespace testing

namespace verifier_detail {

PartChecker::PartChecker(VerificationReport& report)
    : report_(report), corrupt_(!g_fault_identity.empty() && g_fault_identity == report.identity)
{
}

void PartChecker::record(const std::string& part, bool ok, json residual)
{
    if (first_) {
        report_.residual = residual;
        first_ = false;
    }
    if (!ok && report_.outcome != Outcome::failed) {
        report_.outcome = Outcome::failed;
        report_.residual = std::move(residual);
        report_.note = part + ": sides differ";
    }
}

bool PartChecker::element(const std::string& part, const Ring& ring, const Scalar& lhs, Scalar rhs)
{
    if (corrupt_)
        rhs = ring.add(rhs, ring.one());
    bool ok = ring.equal(lhs, rhs);
    record(part, ok, element_to_json(ring, ring.sub(lhs, rhs)));
    return ok;
}

bool PartChecker::matrix(const std::string& part, const Matrix<Ring>& lhs, Matrix<Ring> rhs)
{
    if (corrupt_ && rhs.rows() > 0 && rhs.cols() > 0)
        rhs(0, 0) = rhs.ring().add(rhs(0, 0), rhs.ring().one());
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        throw ShapeError(part + ": sides have different shapes");
    bool ok = lhs == rhs;
    record(part, ok, matrix_to_json(lhs - rhs));
    return ok;
}

void hypothesis_not_met(VerificationReport& report, const std::string& reason)
{
    report.outcome = Outcome::hypothesis_not_met;
    report.residual = nullptr;
    report.note = "hypothesis not met: " + reason;
}

} // namespace verifier_detail

using verifier_detail::hypothesis_not_met;
using verifier_detail::PartChecker;

// ---------------------------------------------------------------------------
// Subsets and multi-indices

SubsetSelector::SubsetSelector(std::size_t n, std::vector<std::size_t> members) : n_(n), members_(std::move(members))
{
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] < 1 || members_[i] > n_)
            throw DomainError("subset member " + std::to_string(members_[i]) + " outside 1.." + std::to_string(n_));
        if (i > 0 && members_[i - 1] >= members_[i])
            throw DomainError("subset members must be strictly increasing");
    }
}

std::size_t SubsetSelector::sum() const { return std::accumulate(members_.begin(), members_.end(), std::size_t{0}); }

SubsetSelector SubsetSelector::complement() const
{
    std::vector<std::size_t> rest;
    for (std::size_t i = 1, k = 0; i <= n_; ++i) {
        if (k < members_.size() && members_[k] == i)
            ++k;
        else
            rest.push_back(i);
    }
    return SubsetSelector(n_, std::move(rest));
}

std::vector<SubsetSelector> SubsetSelector::all_of_size(std::size_t n, std::size_t k)
{
    std::vector<SubsetSelector> out;
    if (k > n)
        return out;
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), std::size_t{1});
    while (true) {
        out.emplace_back(n, cur);
        // Advance to the next k-subset in lexicographic order.
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i)
            --i;
        if (i == 0)
            break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::uint64_t MultiIndex::total() const
{
    return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

std::vector<MultiIndex> MultiIndex::compositions(std::uint32_t total, std::size_t n, std::size_t max_terms)
{
    if (n == 0)
        return total == 0 ? std::vector<MultiIndex>{MultiIndex{}} : std::vector<MultiIndex>{};
    // C(total + n - 1, n - 1) tuples.
    BigInt count;
    mpz_bin_uiui(count.get_mpz_t(), total + n - 1, n - 1);
    if (count > max_terms)
        throw DomainError("compositions: " + count.get_str() + " terms exceed the limit of " +
                          std::to_string(max_terms));
    std::vector<MultiIndex> out;
    std::vector<std::uint32_t> cur(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
        if (pos + 1 == n) {
            cur[pos] = left;
            out.push_back(MultiIndex{cur});
            return;
        }
        for (std::uint32_t v = left + 1; v-- > 0;) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

BigInt multinomial(std::uint64_t m, const MultiIndex& parts)
{
    if (parts.total() != m)
        throw DomainError("multinomial: parts sum to " + std::to_string(parts.total()) + ", expected " +
                          std::to_string(m));
    BigInt result = factorial(static_cast<unsigned long>(m));
    for (auto i : parts.parts)
        result /= factorial(i);
    return result;
}

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Determinant, adjugate and characteristic polynomial

VerificationReport verify_det_oracle(const Matrix<Ring>& a)
{
    require_square(a, "det_oracle");
    auto r = start("det_oracle", a);
    PartChecker(r).element("det = det_leibniz", a.ring(), det(a), det_leibniz(a));
    return r;
}

VerificationReport verify_adj_inverse(const Matrix<Ring>& a)
{
    require_square(a, "adj_inverse");
    auto r = start("adj_inverse", a);
    const auto adj = adjugate_cofactor(a);
    const auto d = scale(det(a), Matrix<Ring>::identity(a.ring(), a.rows()));
    PartChecker pc(r);
    pc.matrix("A adj A = det A I", a * adj, d);
    pc.matrix("adj A A = det A I", adj * a, d);
    return r;
}

VerificationReport verify_adj_charpoly(const Matrix<Ring>& a)
{
    require_square(a, "adj_charpoly");
    auto r = start("adj_charpoly", a);
    PartChecker(r).matrix("cofactor adj = charpoly adj", adjugate_cofactor(a), adjugate_via_charpoly(a));
    return r;
}

VerificationReport verify_adj_product(const Matrix<Ring>& a, const Matrix<Ring>& b)
{
    require_square(a, "adj_product");
    require_same(a, b, "adj_product");
    require_shape(b, a.rows(), a.cols(), "adj_product B");
    auto r = start("adj_product", a);
    r.inputs["B"] = matrix_to_json(b);
    PartChecker(r).matrix("adj(AB) = adj B adj A", adjugate_cofactor(a * b), adjugate_cofactor(b) * adjugate_cofactor(a));
    return r;
}

VerificationReport verify_adj_of_adj(const Matrix<Ring>& a)
{
    require_square(a, "adj_of_adj");
    auto r = start("adj_of_adj", a);
    const std::size_t n = a.rows();
    if (n == 0) {
        hypothesis_not_met(r, "n >= 1 required");
        return r;
    }
    const auto& ring = a.ring();
    const auto adj = adjugate_cofactor(a);
    const auto d = det(a);
    PartChecker pc(r);
    pc.element("det(adj A) = (det A)^(n-1)", ring, det(adj), pow_int(ring, d, n - 1));
    if (n >= 2)
        pc.matrix("adj(adj A) = (det A)^(n-2) A", adjugate_cofactor(adj), scale(pow_int(ring, d, n - 2), a));
    return r;
}

VerificationReport verify_adj_scalar(const Matrix<Ring>& a, const Scalar& lambda)
{
    require_square(a, "adj_scalar");
    if (a.rows() == 0)
        throw DomainError("adj_scalar: n must be positive");
    auto r = start("adj_scalar", a);
    r.inputs["lambda"] = element_to_json(a.ring(), lambda);
    PartChecker(r).matrix("adj(lambda A) = lambda^(n-1) adj A", adjugate_cofactor(scale(lambda, a)),
                          scale(pow_int(a.ring(), lambda, a.rows() - 1), adjugate_cofactor(a)));
    return r;
}

VerificationReport verify_adj_trace(const Matrix<Ring>& a)
{
    require_square(a, "adj_trace");
    auto r = start("adj_trace", a);
    const auto cp = charpoly_direct(a);
    const long n = static_cast<long>(a.rows());
    const auto& ring = a.ring();
    PartChecker(r).element("Tr(adj A) = (-1)^(n-1) c_(n-1)", ring, trace(adjugate_cofactor(a)),
                           ring.mul(sign_power(ring, n - 1), cp.coefficient(n - 1)));
    return r;
}

VerificationReport verify_trace_c1(const Matrix<Ring>& a)
{
    require_square(a, "trace_c1");
    auto r = start("trace_c1", a);
    const long n = static_cast<long>(a.rows());
    const auto cp = charpoly_direct(a);
    PartChecker(r).element("[t^(n-1)] chi_A = -Tr A", a.ring(), cp.chi.coeff(n - 1), a.ring().neg(trace(a)));
    return r;
}

VerificationReport verify_trace_d(const Matrix<Ring>& a)
{
    require_square(a, "trace_d");
    auto r = start("trace_d", a);
    const auto& ring = a.ring();
    const long n = static_cast<long>(a.rows());
    const auto cp = charpoly_direct(a);
    const auto d = adjugate_expansion(a);
    auto d_at = [&](long k) {
        return (k < 0 || k >= n) ? Matrix<Ring>::zero(ring, a.rows(), a.rows()) : d[static_cast<std::size_t>(k)];
    };
    PartChecker pc(r);
    for (long k = -1; k <= n; ++k)
        pc.element("Tr(D_" + std::to_string(k) + ")", ring, trace(d_at(k)),
                   ring.mul(ring.from_int(k + 1), cp.coefficient(n - (k + 1))));
    return r;
}

VerificationReport verify_ch_d(const Matrix<Ring>& a)
{
    require_square(a, "ch_d");
    auto r = start("ch_d", a);
    const auto& ring = a.ring();
    const std::size_t un = a.rows();
    const long n = static_cast<long>(un);
    const auto cp = charpoly_direct(a);
    const auto d = adjugate_expansion(a);
    auto d_at = [&](long k) {
        return (k < 0 || k >= n) ? Matrix<Ring>::zero(ring, un, un) : d[static_cast<std::size_t>(k)];
    };
    const auto id = Matrix<Ring>::identity(ring, un);
    PartChecker pc(r);

    std::vector<Scalar> coeffs;
    for (long k = 0; k <= n; ++k)
        coeffs.push_back(cp.coefficient(n - k));
    const Ring pr = Ring::polynomial(ring);
    pc.element("chi_A = sum c_(n-k) t^k", pr, from_polynomial(pr, cp.chi), pr.from_coefficients(coeffs));

    for (long k = -1; k <= n + 1; ++k)
        pc.matrix("c_(n-k) I = D_(k-1) - A D_k, k=" + std::to_string(k), scale(cp.coefficient(n - k), id),
                  d_at(k - 1) - a * d_at(k));

    auto power = Matrix<Ring>::identity(ring, un);
    std::vector<Matrix<Ring>> powers;
    for (long k = 0; k <= n; ++k) {
        powers.push_back(power);
        power = power * a;
    }
    for (long k = 0; k <= n; ++k) {
        Matrix<Ring> sum(ring, un, un);
        for (long i = 0; i <= k; ++i)
            sum = sum + scale(cp.coefficient(k - i), powers[static_cast<std::size_t>(i)]);
        pc.matrix("sum c_(k-i) A^i = D_(n-1-k), k=" + std::to_string(k), sum, d_at(n - 1 - k));
    }
    return r;
}

VerificationReport verify_d_expansion(const Matrix<Ring>& a)
{
    require_square(a, "d_expansion");
    auto r = start("d_expansion", a);
    const auto cp = charpoly_direct(a);
    const auto d = adjugate_expansion(a);
    PartChecker pc(r);
    if (d.empty())
        pc.element("no D matrices for n = 0", a.ring(), a.ring().zero(), a.ring().zero());
    for (std::size_t k = 0; k < d.size(); ++k)
        pc.matrix("D_" + std::to_string(k) + " recursion = adj(tI - A) coefficient", cp.d[k], d[k]);
    return r;
}

VerificationReport verify_cayley_hamilton(const Matrix<Ring>& a)
{
    require_square(a, "cayley_hamilton");
    auto r = start("cayley_hamilton", a);
    PartChecker(r).matrix("chi_A(A) = 0", cayley_hamilton_residual(a), Matrix<Ring>::zero(a.ring(), a.rows(), a.rows()));
    return r;
}

VerificationReport verify_trace_cayley_hamilton(const Matrix<Ring>& a, std::size_t k_max)
{
    require_square(a, "trace_cayley_hamilton");
    auto r = start("trace_cayley_hamilton", a);
    r.inputs["k_max"] = k_max;
    const auto& ring = a.ring();
    const auto cp = charpoly_direct(a);
    // Power traces once, then each residual is a short sum.
    std::vector<Scalar> traces{ring.zero()};
    auto p = Matrix<Ring>::identity(ring, a.rows());
    for (std::size_t i = 1; i <= k_max; ++i) {
        p = p * a;
        traces.push_back(trace(p));
    }
    PartChecker pc(r);
    for (std::size_t k = 0; k <= k_max; ++k) {
        const long lk = static_cast<long>(k);
        auto s = ring.mul(ring.from_int(BigInt(static_cast<unsigned long>(k))), cp.coefficient(lk));
        for (std::size_t i = 1; i <= k; ++i)
            s = ring.add(s, ring.mul(traces[i], cp.coefficient(lk - static_cast<long>(i))));
        pc.element("k c_k + sum Tr(A^i) c_(k-i) = 0, k=" + std::to_string(k), ring, s, ring.zero());
    }
    return r;
}

VerificationReport verify_charpoly_newton(const Matrix<Ring>& a)
{
    require_square(a, "charpoly_newton");
    auto r = start("charpoly_newton", a);
    if (!a.ring().is_q_algebra()) {
        hypothesis_not_met(r, "ring " + a.ring().name() + " is not a Q-algebra");
        return r;
    }
    const auto direct = charpoly_direct(a);
    const auto newton = charpoly_newton(a);
    const Ring pr = Ring::polynomial(a.ring());
    PartChecker pc(r);
    pc.element("chi", pr, from_polynomial(pr, direct.chi), from_polynomial(pr, newton.chi));
    for (std::size_t j = 0; j < direct.c.size(); ++j)
        pc.element("c_" + std::to_string(j), a.ring(), direct.c[j], newton.c[j]);
    for (std::size_t k = 0; k < direct.d.size(); ++k)
        pc.matrix("D_" + std::to_string(k), direct.d[k], newton.d[k]);
    return r;
}

VerificationReport verify_ddet(const Matrix<Ring>& a)
{
    require_square(a, "ddet");
    auto r = start("ddet", a);
    const auto m = t_identity_plus(-a);
    const auto chi = det(m);
    const Ring pr = Ring::polynomial(a.ring());
    PartChecker(r).element("d/dt chi_A = Tr(adj(tI - A))", pr, from_polynomial(pr, derivative(chi)),
                           from_polynomial(pr, trace(adjugate_cofactor(m))));
    return r;
}

VerificationReport verify_degree_bound(const Matrix<Ring>& a, const Matrix<Ring>& b)
{
    require_square(a, "degree_bound");
    require_same(a, b, "degree_bound");
    require_shape(b, a.rows(), a.cols(), "degree_bound B");
    auto r = start("degree_bound", a);
    r.inputs["B"] = matrix_to_json(b);
    const PolyRing p(a.ring());
    const auto t = p.t();
    const auto m = as_constant_polys(b) + entrywise_map(a, p, [&](const Scalar& x) { return t.scaled(x); });
    const auto d = det(m);
    const long n = static_cast<long>(a.rows());
    std::vector<Scalar> high;
    for (long k = n + 1; k <= d.degree(); ++k)
        high.push_back(d.coeff(k));
    const Ring pr = Ring::polynomial(a.ring());
    PartChecker pc(r);
    pc.element("coefficients above t^n vanish", pr, pr.from_coefficients(high), pr.zero());
    pc.element("[t^0] det(tA + B) = det B", a.ring(), d.coeff(0), det(b));
    pc.element("[t^n] det(tA + B) = det A", a.ring(), d.coeff(n), det(a));
    return r;
}

VerificationReport verify_functor_det(const Matrix<Ring>& a, const Matrix<Ring>& b)
{
    require_square(a, "functor_det");
    require_same(a, b, "functor_det");
    require_shape(b, a.rows(), a.cols(), "functor_det B");
    auto r = start("functor_det", a);
    r.inputs["B"] = matrix_to_json(b);
    const PolyRing p(a.ring());
    const auto t = p.t();
    const auto m = as_constant_polys(a) + entrywise_map(b, p, [&](const Scalar& x) { return t.scaled(x); });
    const auto& ring = a.ring();
    auto eps = [&](const Matrix<PolyRing>& x) {
        return entrywise_map(x, ring, [](const Polynomial<Ring>& f) { return eval_zero(f); });
    };
    const auto em = eps(m);
    PartChecker pc(r);
    pc.matrix("eval_0(tB + A) = A", em, a);
    pc.element("eval_0(det M) = det(eval_0 M)", ring, eval_zero(det(m)), det(em));
    for (std::size_t u = 1; u <= a.rows(); ++u)
        for (std::size_t v = 1; v <= a.rows(); ++v)
            pc.matrix("minor " + std::to_string(u) + "," + std::to_string(v), eps(minor_remove(m, u, v)),
                      minor_remove(em, u, v));
    pc.matrix("eval_0(adj M) = adj(eval_0 M)", eps(adjugate_cofactor(m)), adjugate_cofactor(em));
    return r;
}

// ---------------------------------------------------------------------------
// Jacobi

namespace {

void jacobi_part(PartChecker& pc, const Matrix<Ring>& a, const Matrix<Ring>& adj, const Scalar& d,
                 const SubsetSelector& p, const SubsetSelector& q)
{
    const auto& ring = a.ring();
    const auto pc_ = p.complement();
    const auto qc = q.complement();
    auto lhs = det(submatrix(adj, std::span<const std::size_t>(p.word()), std::span<const std::size_t>(q.word())));
    auto rhs = ring.mul(ring.mul(sign_power(ring, static_cast<long long>(p.sum() + q.sum())),
                                 pow_int(ring, d, q.size() - 1)),
                        det(submatrix(a, std::span<const std::size_t>(qc.word()), std::span<const std::size_t>(pc_.word()))));
    pc.element("P=" + subset_str(p) + " Q=" + subset_str(q), ring, lhs, rhs);
}

void require_jacobi_args(const Matrix<Ring>& a, const SubsetSelector& p, const SubsetSelector& q)
{
    if (p.ambient() != a.rows() || q.ambient() != a.rows())
        throw ShapeError("jacobi: subsets must live in 1..n with n the matrix size");
    if (p.size() != q.size())
        throw DomainError("jacobi: |P| and |Q| differ");
    if (p.size() == 0)
        throw DomainError("jacobi: P and Q must be nonempty");
}

} // namespace

VerificationReport verify_jacobi(const Matrix<Ring>& a, const SubsetSelector& p, const SubsetSelector& q)
{
    require_square(a, "jacobi");
    require_jacobi_args(a, p, q);
    auto r = start("jacobi", a);
    r.inputs["P"] = p.word();
    r.inputs["Q"] = q.word();
    PartChecker pc(r);
    jacobi_part(pc, a, adjugate_cofactor(a), det(a), p, q);
    return r;
}

VerificationReport verify_jacobi_exhaustive(const Matrix<Ring>& a)
{
    require_square(a, "jacobi");
    auto r = start("jacobi", a);
    const std::size_t n = a.rows();
    if (n == 0) {
        hypothesis_not_met(r, "no nonempty subsets of an empty index set");
        return r;
    }
    const auto adj = adjugate_cofactor(a);
    const auto d = det(a);
    PartChecker pc(r);
    std::size_t pairs = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        const auto subsets = SubsetSelector::all_of_size(n, k);
        for (const auto& p : subsets)
            for (const auto& q : subsets) {
                jacobi_part(pc, a, adj, d, p, q);
                ++pairs;
            }
    }
    r.inputs["pairs"] = pairs;
    return r;
}

// ---------------------------------------------------------------------------
// Commuting matrices and blocks

VerificationReport verify_commute_swap(const Matrix<Ring>& a, const Matrix<Ring>& b, const Matrix<Ring>& s)
{
    require_square(a, "commute_swap");
    require_same(a, b, "commute_swap");
    require_same(a, s, "commute_swap");
    require_shape(b, a.rows(), a.rows(), "commute_swap B");
    require_shape(s, a.rows(), a.rows(), "commute_swap S");
    auto r = start("commute_swap", a);
    r.inputs["B"] = matrix_to_json(b);
    r.inputs["S"] = matrix_to_json(s);
    if (!(a * b == b * a)) {
        hypothesis_not_met(r, "AB != BA");
        return r;
    }
    PartChecker(r).element("det(AS + B) = det(SA + B)", a.ring(), det(a * s + b), det(s * a + b));
    return r;
}

VerificationReport verify_block_commute(const Matrix<Ring>& a, const Matrix<Ring>& b, const Matrix<Ring>& c,
                                        const Matrix<Ring>& d)
{
    require_square(a, "block_commute");
    for (const auto* m : {&b, &c, &d}) {
        require_same(a, *m, "block_commute");
        require_shape(*m, a.rows(), a.rows(), "block_commute");
    }
    auto r = start("block_commute", a);
    r.inputs["B"] = matrix_to_json(b);
    r.inputs["C"] = matrix_to_json(c);
    r.inputs["D"] = matrix_to_json(d);
    if (!(a * c == c * a)) {
        hypothesis_not_met(r, "AC != CA");
        return r;
    }
    PartChecker(r).element("det((A,B),(C,D)) = det(AD - CB)", a.ring(), det(block2x2(BlockQuad<Ring>{a, b, c, d})),
                           det(a * d - c * b));
    return r;
}

VerificationReport verify_rank1_block(const Matrix<Ring>& a, const Matrix<Ring>& d, const Matrix<Ring>& p,
                                      const Matrix<Ring>& q, const Matrix<Ring>& v, const Matrix<Ring>& u)
{
    require_square(a, "rank1_block A");
    require_square(d, "rank1_block D");
    const std::size_t n = a.rows(), m = d.rows();
    require_shape(p, n, 1, "rank1_block p");
    require_shape(q, m, 1, "rank1_block q");
    require_shape(v, 1, m, "rank1_block v");
    require_shape(u, 1, n, "rank1_block u");
    for (const auto* x : {&d, &p, &q, &v, &u})
        require_same(a, *x, "rank1_block");
    auto r = start("rank1_block", a);
    r.inputs["D"] = matrix_to_json(d);
    r.inputs["p"] = matrix_to_json(p);
    r.inputs["q"] = matrix_to_json(q);
    r.inputs["v"] = matrix_to_json(v);
    r.inputs["u"] = matrix_to_json(u);
    const auto& ring = a.ring();
    const auto lhs = det(block2x2(BlockQuad<Ring>{a, p * v, q * u, d}));
    const auto rhs = ring.sub(ring.mul(det(a), det(d)),
                              ring.mul(ent(u * adjugate_cofactor(a) * p), ent(v * adjugate_cofactor(d) * q)));
    PartChecker(r).element("det((A,pv),(qu,D)) = det A det D - ent(u adj A p) ent(v adj D q)", ring, lhs, rhs);
    return r;
}

VerificationReport verify_bordered(const Matrix<Ring>& a, const Matrix<Ring>& u, const Matrix<Ring>& v,
                                   const Scalar& h)
{
    require_square(a, "bordered");
    const std::size_t n = a.rows();
    require_shape(u, n, 1, "bordered u");
    require_shape(v, 1, n, "bordered v");
    require_same(a, u, "bordered");
    require_same(a, v, "bordered");
    auto r = start("bordered", a);
    r.inputs["u"] = matrix_to_json(u);
    r.inputs["v"] = matrix_to_json(v);
    r.inputs["h"] = element_to_json(a.ring(), h);
    const auto& ring = a.ring();
    Matrix<Ring> hm(ring, 1, 1, {h});
    const auto lhs = det(block2x2(BlockQuad<Ring>{a, u, v, hm}));
    const auto rhs = ring.sub(ring.mul(h, det(a)), ent(v * adjugate_cofactor(a) * u));
    PartChecker(r).element("det((A,u),(v,h)) = h det A - ent(v adj A u)", ring, lhs, rhs);
    return r;
}

VerificationReport verify_block01(const Matrix<Ring>& a, const Matrix<Ring>& d)
{
    require_square(a, "block01 A");
    require_square(d, "block01 D");
    require_same(a, d, "block01");
    const std::size_t n = a.rows(), m = d.rows();
    if (n == 0 || m == 0)
        throw DomainError("block01: n and m must be positive");
    auto r = start("block01", a);
    r.inputs["D"] = matrix_to_json(d);
    const auto& ring = a.ring();
    Matrix<Ring> b(ring, n, m), c(ring, m, n);
    b(n - 1, 0) = ring.one();
    c(0, n - 1) = ring.one();
    const auto lhs = det(block2x2(BlockQuad<Ring>{a, b, c, d}));
    const auto rhs =
        ring.sub(ring.mul(det(a), det(d)), ring.mul(det(minor_remove(a, n, n)), det(minor_remove(d, 1, 1))));
    PartChecker(r).element("det((A,E_n1),(E_1n,D)) = det A det D - det A~n~n det D~1~1", ring, lhs, rhs);
    return r;
}

VerificationReport verify_matrix_det_lemma(const Matrix<Ring>& a, const Matrix<Ring>& u, const Matrix<Ring>& v)
{
    require_square(a, "matrix_det_lemma");
    const std::size_t n = a.rows();
    require_shape(u, n, 1, "matrix_det_lemma u");
    require_shape(v, 1, n, "matrix_det_lemma v");
    require_same(a, u, "matrix_det_lemma");
    require_same(a, v, "matrix_det_lemma");
    auto r = start("matrix_det_lemma", a);
    r.inputs["u"] = matrix_to_json(u);
    r.inputs["v"] = matrix_to_json(v);
    const auto& ring = a.ring();
    PartChecker(r).element("det(A + uv) = det A + ent(v adj A u)", ring, det(a + u * v),
                           ring.add(det(a), ent(v * adjugate_cofactor(a) * u)));
    return r;
}

// ---------------------------------------------------------------------------
// Nilpotency and traces of powers

VerificationReport verify_nilpotency_criterion(const Matrix<Ring>& a)
{
    require_square(a, "nilpotency");
    auto r = start("nilpotency", a);
    const auto& ring = a.ring();
    const std::size_t n = a.rows();
    auto p = Matrix<Ring>::identity(ring, n);
    for (std::size_t i = 1; i <= n; ++i) {
        p = p * a;
        if (!ring.is_zero(trace(p))) {
            hypothesis_not_met(r, "Tr(A^" + std::to_string(i) + ") != 0");
            return r;
        }
    }
    // p == A^n here.
    const auto nfact = scalar_of(ring, factorial(static_cast<unsigned long>(n)));
    const Ring pr = Ring::polynomial(ring);
    const auto chi = charpoly_direct(a).chi;
    const auto tn = Polynomial<Ring>::monomial(ring, ring.one(), n);
    const auto zero = Matrix<Ring>::zero(ring, n, n);
    r.inputs["q_algebra"] = ring.is_q_algebra();
    PartChecker pc(r);
    pc.matrix("(a) n! A^n = 0", scale(nfact, p), zero);
    pc.element("(c) n! chi_A = n! t^n", pr, from_polynomial(pr, chi.scaled(nfact)), from_polynomial(pr, tn.scaled(nfact)));
    if (ring.is_q_algebra()) {
        pc.matrix("(b) A^n = 0", p, zero);
        pc.element("(d) chi_A = t^n", pr, from_polynomial(pr, chi), from_polynomial(pr, tn));
    }
    return r;
}

VerificationReport verify_nilpotency_converse(const Matrix<Ring>& a, std::size_t imax)
{
    require_square(a, "nilpotency_converse");
    auto r = start("nilpotency_converse", a);
    r.inputs["imax"] = imax;
    const auto& ring = a.ring();
    const std::size_t n = a.rows();
    if (!(charpoly_direct(a).chi == Polynomial<Ring>::monomial(ring, ring.one(), n))) {
        hypothesis_not_met(r, "chi_A != t^n");
        return r;
    }
    PartChecker pc(r);
    auto p = Matrix<Ring>::identity(ring, n);
    if (imax == 0)
        pc.element("nothing to check for imax = 0", ring, ring.zero(), ring.zero());
    for (std::size_t i = 1; i <= imax; ++i) {
        p = p * a;
        pc.element("Tr(A^" + std::to_string(i) + ") = 0", ring, trace(p), ring.zero());
    }
    return r;
}

VerificationReport verify_almkvist(const Matrix<Ring>& a, std::uint32_t k)
{
    require_square(a, "almkvist");
    auto r = start("almkvist", a);
    r.inputs["k"] = k;
    const auto& ring = a.ring();
    const std::size_t n = a.rows();
    if (!matrix_power(a, std::uint64_t{k} + 1).is_zero()) {
        hypothesis_not_met(r, "A^(k+1) != 0");
        return r;
    }
    const auto tr = trace(a);
    const std::uint64_t nk = std::uint64_t{n} * k;
    BigInt coef = factorial(static_cast<unsigned long>(nk));
    BigInt kf = factorial(k);
    for (std::size_t i = 0; i < n; ++i)
        coef /= kf;
    PartChecker pc(r);
    pc.element("(Tr A)^(nk+1) = 0", ring, pow_int(ring, tr, nk + 1), ring.zero());
    pc.element("(Tr A)^(nk) = (nk)!/(k!)^n (det A)^k", ring, pow_int(ring, tr, nk),
               ring.mul(scalar_of(ring, coef), pow_int(ring, det(a), k)));
    return r;
}

VerificationReport verify_trace_multinomial(const Matrix<Ring>& a, std::uint32_t m)
{
    require_square(a, "trace_multinomial");
    const std::size_t n = a.rows();
    const auto tuples = MultiIndex::compositions(m, n);
    auto r = start("trace_multinomial", a);
    r.inputs["m"] = m;
    const auto& ring = a.ring();
    std::vector<Matrix<Ring>> powers{Matrix<Ring>::identity(ring, n)};
    for (std::uint32_t i = 1; i <= m; ++i)
        powers.push_back(powers.back() * a);
    auto rhs = ring.zero();
    for (const auto& t : tuples) {
        Matrix<Ring> mm(ring, n, n);
        for (std::size_t j = 1; j <= n; ++j)
            mm = replace_row(std::move(mm), j, row(powers[t.parts[j - 1]], j));
        rhs = ring.add(rhs, ring.mul(scalar_of(ring, multinomial(m, t)), det(mm)));
    }
    r.inputs["terms"] = tuples.size();
    PartChecker(r).element("(Tr A)^m = sum multinomial det(M)", ring, pow_int(ring, trace(a), m), rhs);
    return r;
}

VerificationReport verify_row_replacement(const Matrix<Ring>& a, const Matrix<Ring>& b)
{
    require_square(a, "row_replacement");
    require_same(a, b, "row_replacement");
    require_shape(b, a.rows(), a.rows(), "row_replacement B");
    auto r = start("row_replacement", a);
    r.inputs["B"] = matrix_to_json(b);
    const auto& ring = a.ring();
    const auto ba = b * a;
    auto lhs = ring.zero();
    for (std::size_t j = 1; j <= a.rows(); ++j)
        lhs = ring.add(lhs, det(replace_row(b, j, row(ba, j))));
    PartChecker(r).element("sum_j det(B'_j) = Tr A det B", ring, lhs, ring.mul(trace(a), det(b)));
    return r;
}

VerificationReport verify_multinomial_recurrence(const MultiIndex& parts)
{
    const std::uint64_t m = parts.total();
    if (m == 0)
        throw DomainError("multinomial recurrence needs a positive total");
    VerificationReport r;
    r.identity = "multinomial_rec";
    r.inputs["parts"] = parts.parts;
    const Ring z = Ring::integers();
    BigInt sum = 0;
    for (std::size_t j = 0; j < parts.parts.size(); ++j) {
        if (parts.parts[j] == 0)
            continue;
        auto dec = parts;
        --dec.parts[j];
        sum += multinomial(m - 1, dec);
    }
    PartChecker(r).element("multinomial recurrence", z, z.from_int(multinomial(m, parts)), z.from_int(sum));
    return r;
}

VerificationReport verify_frobenius_trace(const Matrix<Ring>& a, std::uint64_t p)
{
    require_square(a, "frobenius");
    if (!is_prime(p))
        throw DomainError("frobenius: p = " + std::to_string(p) + " is not prime");
    auto r = start("frobenius", a);
    r.inputs["p"] = p;
    const auto& ring = a.ring();
    if (!ring.is_zero(ring.from_int(BigInt(static_cast<unsigned long>(p))))) {
        hypothesis_not_met(r, std::to_string(p) + " != 0 in " + ring.name());
        return r;
    }
    PartChecker(r).element("Tr(A^p) = (Tr A)^p", ring, trace(matrix_power(a, p)), pow_int(ring, trace(a), p));
    return r;
}

} // namespace exactla
