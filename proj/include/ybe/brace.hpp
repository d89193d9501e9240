#pragma once

// Finite rings and left braces stored as explicit operation tables.
//
// Elements are dense indices 0..order-1. Index 0 is the additive identity
// and, for braces, also the identity of the circle group.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybe {

using Elem = int;

class AlgebraError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Square operation table, row-major: at(a, b) = a op b.
class Table {
  public:
    Table() = default;
    explicit Table(int order) : order_(order), data_(static_cast<size_t>(order) * order, 0) {}
    Table(int order, std::vector<Elem> data);

    static Table from_rows(const std::vector<std::vector<Elem>>& rows);

    int order() const { return order_; }
    Elem operator()(Elem a, Elem b) const { return data_[static_cast<size_t>(a) * order_ + b]; }
    Elem& operator()(Elem a, Elem b) { return data_[static_cast<size_t>(a) * order_ + b]; }
    const std::vector<Elem>& data() const { return data_; }
    std::vector<std::vector<Elem>> rows() const;

    bool operator==(const Table&) const = default;

  private:
    int order_ = 0;
    std::vector<Elem> data_;
};

/// Associative ring (not necessarily unital or commutative) on 0..order-1.
struct FiniteRing {
    Table add;
    Table mul;

    int order() const { return add.order(); }
};

/// Left brace: (A,+) abelian, (A,circ) a group, a∘(b+c)+a = a∘b + a∘c.
///
/// Construction does not validate; use verify_brace. Additive negation and
/// circle inverses are precomputed by table scan.
class FiniteBrace {
  public:
    FiniteBrace() = default;
    FiniteBrace(Table add, Table circ);

    int order() const { return add_.order(); }
    const Table& add_table() const { return add_; }
    const Table& circ_table() const { return circ_; }

    Elem add(Elem a, Elem b) const { return add_(a, b); }
    Elem circ(Elem a, Elem b) const { return circ_(a, b); }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add_(a, neg_[b]); }
    Elem circ_inverse(Elem a) const { return inv_[a]; }
    /// a·b = a∘b − a − b
    Elem star(Elem a, Elem b) const { return sub(sub(circ_(a, b), a), b); }

    bool operator==(const FiniteBrace& o) const { return add_ == o.add_ && circ_ == o.circ_; }

  private:
    Table add_;
    Table circ_;
    std::vector<Elem> neg_;
    std::vector<Elem> inv_;
};

/// Sorted, duplicate-free set of element indices of some brace.
struct BraceSubset {
    std::vector<Elem> members;

    BraceSubset() = default;
    explicit BraceSubset(std::vector<Elem> m);

    bool contains(Elem e) const;
    size_t size() const { return members.size(); }
    bool operator==(const BraceSubset&) const = default;
};

struct ChainReport {
    /// chain[i - 1] holds the i-th term, so chain[0] is the whole brace.
    std::vector<BraceSubset> chain;
    bool vanishes = false;
    /// 1-based index of the first term equal to {0}.
    std::optional<int> vanish_index;

    const BraceSubset& term(int i) const { return chain.at(static_cast<size_t>(i - 1)); }
};

struct NilpotencyChains {
    ChainReport left;
    ChainReport right;
    ChainReport strong;
};

struct AxiomViolation {
    std::string axiom;
    Elem a = 0, b = 0, c = 0;
};

struct BraceReport {
    bool is_brace = false;
    std::vector<AxiomViolation> violations;
};

// ---- verification --------------------------------------------------------

BraceReport verify_brace(const Table& add, const Table& circ);
BraceReport verify_skew_brace_report(const Table& add, const Table& circ);
bool verify_skew_brace(const Table& add, const Table& circ);
/// Abelian group, associativity and both distributive laws.
bool verify_ring(const FiniteRing& ring);

// ---- constructions -------------------------------------------------------

/// Polynomials a1 x + ... + a_{n-1} x^{n-1} over F_p with x^n = 0.
/// Element index is sum a_k p^{k-1}, so x is 1 and x^2 is p.
FiniteRing make_truncated_polynomial_ring(int p, int n);
/// Multiples of `step` in Z/modulus, e.g. (2, 8) gives {0,2,4,6} with index k <-> 2k.
FiniteRing make_multiple_ring(int step, int modulus);
/// Z/n with identically zero multiplication.
FiniteRing make_zero_ring(int n);
/// Strictly upper triangular k x k matrices over F_p (non-commutative for k >= 3).
FiniteRing make_strict_upper_triangular_ring(int p, int k);

/// Smallest m with R^m = {0}, or nullopt if the power chain stalls.
std::optional<int> ring_nilpotency_class(const FiniteRing& ring);

/// a∘b = a + b + ab. Throws if the ring is not nilpotent.
FiniteBrace brace_from_nilpotent_ring(const FiniteRing& ring);
/// Trivial brace on Z/n: a∘b = a + b.
FiniteBrace trivial_brace(int n);
/// Componentwise brace on pairs, index a1 * |B2| + a2.
FiniteBrace direct_product(const FiniteBrace& b1, const FiniteBrace& b2);

/// (N, +, ⊙) with a⊙a' = b∘a'∘c where a = b∘c, b ∈ B, c ∈ C.
/// Throws unless every element factors uniquely.
FiniteBrace brace_from_exact_factorization(const FiniteBrace& n, const BraceSubset& b_sub,
                                           const BraceSubset& c_sub);

// ---- structure -----------------------------------------------------------

Elem star_product(const FiniteBrace& b, Elem x, Elem y);
BraceSubset socle(const FiniteBrace& b);
/// Additive subgroup closed under z·x and x·z for all z.
bool is_ideal(const FiniteBrace& b, const BraceSubset& s);

struct Quotient {
    FiniteBrace brace;
    /// class_map[a] is the index of the coset a + I.
    std::vector<Elem> class_map;
};
Quotient quotient_brace(const FiniteBrace& b, const BraceSubset& ideal);

/// Additive subgroup generated by `gens`.
BraceSubset additive_closure(const FiniteBrace& b, const std::vector<Elem>& gens);
/// Additive closure of {s·t : s ∈ lhs, t ∈ rhs}.
BraceSubset star_span(const FiniteBrace& b, const BraceSubset& lhs, const BraceSubset& rhs);
BraceSubset subset_sum(const FiniteBrace& b, const BraceSubset& x, const BraceSubset& y);
BraceSubset whole(const FiniteBrace& b);

NilpotencyChains nilpotency_chains(const FiniteBrace& b);

/// Smallest sub-brace containing x.
BraceSubset generated_subbrace(const FiniteBrace& b, Elem x);

struct SubBrace {
    FiniteBrace brace;
    /// embedding[i] is the parent index of sub-brace element i; embedding[0] == 0.
    std::vector<Elem> embedding;
    std::vector<Elem> parent_to_sub;  // -1 outside the sub-brace
};
/// Reindexes a subset closed under + and ∘ as a standalone brace.
SubBrace extract_subbrace(const FiniteBrace& b, const BraceSubset& s);

/// Checks (a+b)·c against the alternating correction sum built from
/// d0 = a, d0' = b, d_{i+1} = d_i + d_i', d'_{i+1} = d'_i · d_i.
/// Throws if the brace is not right nilpotent.
bool check_sum_formula(const FiniteBrace& b, Elem a, Elem bb, Elem c);
bool check_sum_formula(const FiniteBrace& b, Elem a, Elem bb, Elem c, int right_index);

/// All subgroups of (B, ∘), each as a sorted subset.
std::vector<BraceSubset> circle_subgroups(const FiniteBrace& b);

struct ExactFactorization {
    BraceSubset b_sub;
    BraceSubset c_sub;
};
/// Exact factorizations with both factors proper and nontrivial.
std::vector<ExactFactorization> find_exact_factorizations(const FiniteBrace& b);

}  // namespace ybe
