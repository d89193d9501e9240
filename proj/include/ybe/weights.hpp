#pragma once

// Weight systems D = {d_(x,y)} over a set-theoretic solution: the cocycle
// condition that makes the weighted linearization satisfy the QYBE, the
// triviality decision, and the standard ways of producing weights.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ybe/matrix.hpp"
#include "ybe/solution.hpp"

namespace ybe {

class WeightError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class WeightSystem {
  public:
    WeightSystem() = default;
    /// `d[x * n + y]` is d_(x,y). Throws if any |d| ≤ `eps`.
    WeightSystem(int n, std::vector<cplx> d, double eps = kSupportEps);

    static WeightSystem constant(int n, cplx value);

    int size() const { return n_; }
    cplx operator()(int x, int y) const { return d_[static_cast<size_t>(x) * n_ + y]; }
    const std::vector<cplx>& values() const { return d_; }

  private:
    int n_ = 0;
    std::vector<cplx> d_;
};

/// First (x, y, z) where f(x,y) f(x^y,z) f(ˣy, ^{x^y}z) ≠ f(y,z) f(x,ʸz) f(x^{ʸz}, y^z).
std::optional<std::array<int, 3>> find_cocycle_violation(const SetSolution& s, const WeightSystem& d,
                                                         double tol = kDefaultTol);
/// Throws on size mismatch or a degenerate solution.
bool verify_cocycle(const SetSolution& s, const WeightSystem& d, double tol = kDefaultTol);

struct TrivialityWitness {
    std::vector<cplx> alpha;
    cplx c{1.0, 0.0};
};

/// d_(x,y) = c α_x α_y / (α_{σ_x(y)} α_{τ_y(x)}).
WeightSystem weights_from_witness(const SetSolution& s, const TrivialityWitness& w);
bool witness_holds(const SetSolution& s, const WeightSystem& d, const TrivialityWitness& w,
                   double tol = kDefaultTol);

struct TrivialityResult {
    bool trivial = false;
    std::optional<TrivialityWitness> witness;
    /// Largest |Π d^v − 1| over the integer left-kernel basis vectors v.
    double kernel_residual = 0.0;
};

/// Decides whether D is a diagonal gauge of the unweighted solution.
/// Throws WeightError if D fails the cocycle condition.
TrivialityResult is_trivial(const SetSolution& s, const WeightSystem& d, double tol = kDefaultTol);

/// d_(x,y)·d_{r(x,y)} is the same for every pair. Requires an involutive solution.
bool lemma_trivial_check(const SetSolution& s, const WeightSystem& d, double tol = kDefaultTol);

/// Checks the three invariance identities for f and returns it as a weight system.
/// Throws WeightError naming the first failing triple.
WeightSystem invariance_weights(const SetSolution& s, const WeightSystem& f, double tol = kDefaultTol);

/// d_(x,y) = alpha[i][j] for x ∈ X_i, y ∈ X_j. The classes must cover the set
/// and satisfy r(X_i, X_j) ⊆ X_j × X_i.
WeightSystem orbit_weights(const SetSolution& s, const PartitionedSet& classes,
                           const std::vector<std::vector<cplx>>& alpha);

/// d_(i,j) = g(i − j mod n), for cyclic_solution(n).
WeightSystem cyclic_g_weights(const std::vector<cplx>& g);
/// f([i,j],[m,n]) = g(i+j+n, m+j+n) over Z/2, for hura5_solution(). g is
/// indexed g[2a + b] = g(a, b) and needs g(1,0) = g(0,1).
WeightSystem hura5_g_weights(const std::array<cplx, 4>& g, double tol = kDefaultTol);

enum class BuiltinWeights { cyclic_g, hura5_g };
BuiltinWeights parse_builtin_weights(const std::string& name);
WeightSystem builtin_weights(BuiltinWeights kind, const std::vector<cplx>& g);

/// d'_(x,y) = Dq([x], [y]). The quotient must be consistent with s under
/// q.class_map and Dq must satisfy the cocycle condition on q.solution.
WeightSystem lift_weights(const SetSolution& s, const Retraction& q, const WeightSystem& dq,
                          double tol = kDefaultTol);

/// A weight system on s that satisfies the cocycle condition and is not trivial.
///
/// Decomposable s: orbit weights, 2 on the (X_0, X_1) block and 1 elsewhere.
/// Indecomposable s: cyclic weights g = (1, 2, 1, ...) directly if s is a relabeled
/// cyclic solution; otherwise `presentation` must be the one-generator solution
/// equal to s, and the weights are lifted from the (A·A² + A²·A)-retraction.
WeightSystem construct_nontrivial_bvst(const SetSolution& s,
                                       const OneGeneratorSolution* presentation = nullptr);

}  // namespace ybe
