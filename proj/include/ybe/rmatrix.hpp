#pragma once

// Monomial R-matrices of weighted solutions, their decoding, and the
// concrete matrices used as worked examples.
//
// The matrix of (S, D) has column (i,j), row r(i,j) and entry d_(i,j), with
// pairs ordered lexicographically: (i, j) -> i * n + j.

#include <optional>
#include <string>
#include <vector>

#include "ybe/matrix.hpp"
#include "ybe/solution.hpp"
#include "ybe/weights.hpp"

namespace ybe {

struct MonomialPattern {
    int n = 0;                 // base dimension; the matrix is n² × n²
    std::vector<int> perm;     // perm[column] = row of its nonzero entry
    std::vector<cplx> values;  // values[column]
};

struct MonomialDecode {
    std::optional<MonomialPattern> pattern;
    int offending_column = -1;  // set when not monomial
    std::string reason;
};

CMatrix monomial_from_bvst(const SetSolution& s, const WeightSystem& d);
/// Unit weights.
CMatrix solution_matrix(const SetSolution& s);

/// One nonzero per column and per row; n is inferred from the dimension.
MonomialDecode decode_monomial(const CMatrix& a);
SetSolution pattern_solution(const MonomialPattern& p);
WeightSystem pattern_weights(const MonomialPattern& p);

struct InvolutiveMatrixReport {
    bool permutation = false;
    bool symmetric = false;
    bool squares_to_identity = false;
    bool block_condition = false;  // each n×n block holds exactly one 1
    std::optional<SetSolution> solution;
    bool braid_ok = false;  // decoded table satisfies the braid relation

    bool all() const { return permutation && symmetric && squares_to_identity && block_condition; }
};

/// Throws MatrixError on entries other than 0 and 1, or a wrong dimension.
InvolutiveMatrixReport classify_involutive_matrix(const CMatrix& a, int n);

/// Entrywise product of two R-matrices that share a permutation support.
CMatrix hadamard_rmatrix(const CMatrix& a, const CMatrix& b, double tol = kDefaultTol);

/// z ↦ (conj ? z̄ : z)^power on nonzero entries; zeros stay zero.
struct MultiplicativeMap {
    int power = 1;
    bool conjugate = false;

    cplx operator()(cplx z) const;
    /// (*this) ∘ inner
    MultiplicativeMap after(const MultiplicativeMap& inner) const;
    /// Comma-separated steps applied left to right: "pow:K", "conj", "id".
    static MultiplicativeMap parse(const std::string& spec);
    std::string str() const;
};

/// Throws MatrixError unless A is monomial with permutation support.
CMatrix apply_multiplicative_map(const CMatrix& a, const MultiplicativeMap& g);

// ---- worked examples --------------------------------------------------------

/// Weighted transposition: column (i,j) carries d_{j·n+i} in row (j,i).
CMatrix a_of_d(int n, const std::vector<cplx>& d);
/// Permutation matrix of the flip r(i,j) = (j,i).
CMatrix flip_permutation(int n);
/// (I − (2/n²)E)·P with P the flip permutation.
CMatrix householder_a1(int n);
/// P(i, j) = ω^{(n−j)·i}, ω = e^{2πi/n}.
CMatrix vandermonde_p(int n);
/// αB + βE with B the unit-weight matrix of cyclic_solution(n).
CMatrix alpha_b_beta_e(int n, cplx alpha, cplx beta);
CMatrix idempotent_c();
CMatrix counterexample_x();

enum class ExampleKind { a_of_d, householder_a1, vandermonde_p, alpha_b_beta_e, idempotent_c, counterexample_x };
ExampleKind parse_example_kind(const std::string& name);

struct ExampleParams {
    int n = 3;
    std::vector<cplx> d;  // a_of_d; defaults to n², n²−1, …, 1
    cplx alpha{1.0, 0.0};
    cplx beta{-2.0 / 9.0, 0.0};
};
CMatrix build_example(ExampleKind kind, const ExampleParams& params = {});

/// Named matrices: A1, A2, Ad, P, C, X, XoX, Cpinv.
CMatrix named_example(const std::string& name);
std::vector<std::string> named_examples();

}  // namespace ybe
