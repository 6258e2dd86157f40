#pragma once

/**
 * @file verifier.hpp
 * @brief Mechanical checks of determinant, adjugate and trace identities.
 *
 * Every verify_* function evaluates both sides of one identity exactly and
 * returns a VerificationReport. When an identity carries a hypothesis
 * (commuting matrices, nilpotency, p = 0 in the ring, ...) the hypothesis
 * is checked first; if it fails the report says so and the identity is not
 * evaluated. Shape and ring errors are thrown, never reported.
 *
 * The checks themselves are theorems, so a failed report means a bug in
 * the arithmetic underneath.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "report.hpp"
#include "ring.hpp"

namespace exactla {

/// A subset of {1, ..., n}, stored in increasing order.
class SubsetSelector {
public:
    /// Throws DomainError unless members are strictly increasing and within 1..n.
    SubsetSelector(std::size_t n, std::vector<std::size_t> members);

    std::size_t ambient() const { return n_; }
    std::size_t size() const { return members_.size(); }
    /// The members in increasing order (the word of the subset).
    const std::vector<std::size_t>& word() const { return members_; }
    /// Sum of the members.
    std::size_t sum() const;
    /// {1, ..., n} minus this subset.
    SubsetSelector complement() const;

    /// All subsets of {1..n} with exactly k elements, in lexicographic order.
    static std::vector<SubsetSelector> all_of_size(std::size_t n, std::size_t k);

private:
    std::size_t n_;
    std::vector<std::size_t> members_;
};

/// A tuple (i_1, ..., i_n) of nonnegative integers.
struct MultiIndex {
    std::vector<std::uint32_t> parts;

    std::uint64_t total() const;

    /// Every n-tuple with the given total, largest first part first. Throws
    /// DomainError when there would be more than max_terms of them.
    static std::vector<MultiIndex> compositions(std::uint32_t total, std::size_t n,
                                                std::size_t max_terms = 100000);
};

/// m! / (i_1! ... i_n!). Throws DomainError unless the parts sum to m.
BigInt multinomial(std::uint64_t m, const MultiIndex& parts);

// Core determinant / adjugate / characteristic polynomial identities.
VerificationReport verify_det_oracle(const Matrix<Ring>& a);
VerificationReport verify_adj_inverse(const Matrix<Ring>& a);
VerificationReport verify_adj_charpoly(const Matrix<Ring>& a);
VerificationReport verify_adj_product(const Matrix<Ring>& a, const Matrix<Ring>& b);
VerificationReport verify_adj_of_adj(const Matrix<Ring>& a);
VerificationReport verify_adj_scalar(const Matrix<Ring>& a, const Scalar& lambda);
VerificationReport verify_adj_trace(const Matrix<Ring>& a);
VerificationReport verify_trace_c1(const Matrix<Ring>& a);
VerificationReport verify_trace_d(const Matrix<Ring>& a);
VerificationReport verify_ch_d(const Matrix<Ring>& a);
VerificationReport verify_d_expansion(const Matrix<Ring>& a);
VerificationReport verify_cayley_hamilton(const Matrix<Ring>& a);
/// Trace Cayley-Hamilton residual for every k in 0..k_max.
VerificationReport verify_trace_cayley_hamilton(const Matrix<Ring>& a, std::size_t k_max);
/// Direct and power-trace characteristic polynomials agree. Hypothesis: Q-algebra.
VerificationReport verify_charpoly_newton(const Matrix<Ring>& a);
/// d/dt chi_A = Tr(adj(tI - A)).
VerificationReport verify_ddet(const Matrix<Ring>& a);
/// det(tA + B) has degree <= n, constant term det B and t^n coefficient det A.
VerificationReport verify_degree_bound(const Matrix<Ring>& a, const Matrix<Ring>& b);
/// Evaluation at t = 0 commutes with det, minors and adj on M = tB + A.
VerificationReport verify_functor_det(const Matrix<Ring>& a, const Matrix<Ring>& b);

// Minors of the adjugate.
VerificationReport verify_jacobi(const Matrix<Ring>& a, const SubsetSelector& p, const SubsetSelector& q);
/// verify_jacobi over every pair with |P| = |Q| >= 1; one combined report.
VerificationReport verify_jacobi_exhaustive(const Matrix<Ring>& a);

// Commuting matrices and block determinants.
VerificationReport verify_commute_swap(const Matrix<Ring>& a, const Matrix<Ring>& b, const Matrix<Ring>& s);
VerificationReport verify_block_commute(const Matrix<Ring>& a, const Matrix<Ring>& b, const Matrix<Ring>& c,
                                        const Matrix<Ring>& d);
/// det((A, pv), (qu, D)) = det A det D - ent(u adj(A) p) ent(v adj(D) q).
VerificationReport verify_rank1_block(const Matrix<Ring>& a, const Matrix<Ring>& d, const Matrix<Ring>& p,
                                      const Matrix<Ring>& q, const Matrix<Ring>& v, const Matrix<Ring>& u);
/// det((A, u), (v, h)) = h det A - ent(v adj(A) u), u a column and v a row.
VerificationReport verify_bordered(const Matrix<Ring>& a, const Matrix<Ring>& u, const Matrix<Ring>& v,
                                   const Scalar& h);
/// Blocks B = E_{n,1}, C = E_{1,n}: det = det A det D - det(A without row/col n) det(D without row/col 1).
VerificationReport verify_block01(const Matrix<Ring>& a, const Matrix<Ring>& d);
/// det(A + uv) = det A + ent(v adj(A) u).
VerificationReport verify_matrix_det_lemma(const Matrix<Ring>& a, const Matrix<Ring>& u, const Matrix<Ring>& v);

// Nilpotency and trace powers.
VerificationReport verify_nilpotency_criterion(const Matrix<Ring>& a);
VerificationReport verify_nilpotency_converse(const Matrix<Ring>& a, std::size_t imax);
VerificationReport verify_almkvist(const Matrix<Ring>& a, std::uint32_t k);
VerificationReport verify_trace_multinomial(const Matrix<Ring>& a, std::uint32_t m);
VerificationReport verify_row_replacement(const Matrix<Ring>& a, const Matrix<Ring>& b);
/// The multinomial recurrence for one tuple with total m > 0.
VerificationReport verify_multinomial_recurrence(const MultiIndex& parts);
/// Tr(A^p) = (Tr A)^p. Throws DomainError unless p is prime; hypothesis: p = 0 in the ring.
VerificationReport verify_frobenius_trace(const Matrix<Ring>& a, std::uint64_t p);

bool is_prime(std::uint64_t p);

namespace testing {

/// While alive, every check of the named identity on this thread compares
/// against a right-hand side shifted by one, so it must fail. Used to test
/// the failure path end to end.
class ScopedFault {
public:
    explicit ScopedFault(std::string identity);
    ~ScopedFault();
    ScopedFault(const ScopedFault&) = delete;
    ScopedFault& operator=(const ScopedFault&) = delete;

private:
    std::string previous_;
};

} // namespace testing

namespace verifier_detail {

/// Accumulates the parts of one identity into a report.
class PartChecker {
public:
    explicit PartChecker(VerificationReport& report);

    bool element(const std::string& part, const Ring& ring, const Scalar& lhs, Scalar rhs);
    bool matrix(const std::string& part, const Matrix<Ring>& lhs, Matrix<Ring> rhs);

private:
    void record(const std::string& part, bool ok, nlohmann::json residual);

    VerificationReport& report_;
    bool first_ = true;
    bool corrupt_ = false;
};

void hypothesis_not_met(VerificationReport& report, const std::string& reason);

} // namespace verifier_detail

} // namespace exactla
