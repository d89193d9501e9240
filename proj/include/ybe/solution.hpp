#pragma once

// Set-theoretic solutions of the Yang-Baxter equation as explicit pair tables.
//
// A solution on {0..n-1} maps (x, y) to (σ_x(y), τ_y(x)). The table is stored
// in full, so degenerate and non-involutive maps are representable.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybe/brace.hpp"

namespace ybe {

using Pair = std::pair<int, int>;

class SolutionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class SetSolution {
  public:
    SetSolution() = default;
    /// `table[i * n + j]` is r(i, j).
    SetSolution(int n, std::vector<Pair> table);

    int size() const { return n_; }
    Pair operator()(int x, int y) const { return table_[static_cast<size_t>(x) * n_ + y]; }
    int sigma(int x, int y) const { return (*this)(x, y).first; }
    /// τ_y(x), the second component of r(x, y).
    int tau(int y, int x) const { return (*this)(x, y).second; }
    const std::vector<Pair>& table() const { return table_; }

    bool is_bijective() const;

    bool operator==(const SetSolution&) const = default;

  private:
    int n_ = 0;
    std::vector<Pair> table_;
};

struct SolutionProperties {
    bool braid_ok = false;
    bool involutive = false;
    bool left_nondeg = false;   // every τ_x is a permutation
    bool right_nondeg = false;  // every σ_x is a permutation

    bool nondegenerate() const { return left_nondeg && right_nondeg; }
};

struct PartitionedSet {
    int n = 0;
    std::vector<std::vector<int>> classes;

    /// Class index of each element, -1 where uncovered.
    std::vector<int> class_of() const;
    bool covers() const;
    bool operator==(const PartitionedSet&) const = default;
};

// ---- construction --------------------------------------------------------

SetSolution flip_solution(int n);
/// r(x, y) = (y + 1, x − 1) on Z/n.
SetSolution cyclic_solution(int n);
/// Four points [i, j] over Z/2 indexed 2i + j, with
/// r([i,j],[m,n]) = ([m+1, n+m+i], [i+1, j+i+m]).
SetSolution hura5_solution();

enum class BuiltinSolution { flip, cyclic, hura5 };
SetSolution builtin_solution(BuiltinSolution kind, int n);
BuiltinSolution parse_builtin_solution(const std::string& name);

/// r(x, y) = (x·y + y, z·x + x) with z the circle inverse of x·y + y.
SetSolution yb_map_from_brace(const FiniteBrace& b);

/// Union on n1 + n2 points; pairs across the parts are swapped.
SetSolution disjoint_union(const SetSolution& a, const SetSolution& b);

/// Relabels: result(φ(x), φ(y)) = (φ(u), φ(v)) where r(x, y) = (u, v).
SetSolution relabel(const SetSolution& s, const std::vector<int>& phi);

// ---- checks --------------------------------------------------------------

/// First triple violating r1 r2 r1 = r2 r1 r2, if any. Throws if r is not bijective.
std::optional<std::array<int, 3>> find_braid_violation(const SetSolution& s);
bool verify_set_ybe(const SetSolution& s);
SolutionProperties solution_properties(const SetSolution& s);

/// First pair (x, y) with x ∈ X_i, y ∈ X_j whose image leaves X_j × X_i.
std::optional<Pair> partition_invariance_violation(const SetSolution& s, const PartitionedSet& p);

// ---- restriction, orbits, retraction -------------------------------------

struct Restriction {
    SetSolution solution;
    /// members[k] is the ambient index of restricted element k.
    std::vector<int> members;
};

/// Throws SolutionError naming the escaping pair when r(X × X) ⊄ X × X.
Restriction restrict_solution(const SetSolution& s, const std::vector<int>& members);

struct OrbitReport {
    PartitionedSet orbits;
    bool indecomposable = false;
};
OrbitReport orbits(const SetSolution& s);

struct Retraction {
    SetSolution solution;
    /// class_map[x] is the class of x in the retract.
    std::vector<int> class_map;
};

/// Identifies points with equal σ. Requires an involutive non-degenerate solution.
Retraction retraction(const SetSolution& s);

/// Number of retractions down to one point; nullopt if retraction stalls above that.
std::optional<int> multipermutation_level(const SetSolution& s);

/// Quotient of a restricted brace solution along cosets x + I.
Retraction i_retraction(const FiniteBrace& b, const BraceSubset& ideal, const Restriction& sub);

struct OneGeneratorSolution {
    SubBrace sub;
    int generator = 0;  // index inside sub.brace
    BraceSubset x_set;  // indices inside sub.brace
    SetSolution solution;
};

/// A(x), X = {x + a·x : a ∈ A(x)} and the Yang-Baxter map restricted to X.
OneGeneratorSolution one_generator_solution(const FiniteBrace& b, Elem x);

/// X = {x + a·x : a ∈ B} and the additive closure of X is all of B.
bool check_theorem_567(const FiniteBrace& b, const BraceSubset& x_set, Elem x);

enum class PartitionKind { orbit_q, graded, coset, sylow };
PartitionKind parse_partition_kind(const std::string& name);

struct InvariantPartition {
    BraceSubset x_set;        // brace indices
    PartitionedSet classes;   // over brace indices (n = brace order)
};

/// Invariant decompositions of a brace; verifies r(X_i, X_j) ⊆ X_j × X_i.
InvariantPartition invariant_partition(PartitionKind kind, const FiniteBrace& b);

// ---- permutation group ---------------------------------------------------

using Permutation = std::vector<int>;

struct PermutationGroup {
    std::vector<Permutation> elements;  // sorted, identity first
    bool is_nilpotent = false;
};

/// Group generated by the σ_x. Throws once the closure exceeds `cap` elements.
PermutationGroup permutation_group(const SetSolution& s, size_t cap = 1000000);

// ---- isomorphism ---------------------------------------------------------

/// φ with relabel(a, φ) == b, by exhaustive search (small n only).
std::optional<std::vector<int>> find_isomorphism(const SetSolution& a, const SetSolution& b);

/// φ: X → Z/m with relabel(s, φ) == cyclic_solution(m), if one exists.
/// Requires all σ_x equal to a single m-cycle.
std::optional<std::vector<int>> find_cyclic_labeling(const SetSolution& s);

}  // namespace ybe
