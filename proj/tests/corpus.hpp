#pragma once

// Shared test inputs: small braces and brute-force oracles that do not go
// through the library code they are checking.

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ybe/brace.hpp"
#include "ybe/solution.hpp"

namespace corpus {

struct NamedBrace {
    std::string name;
    ybe::FiniteBrace brace;
};

struct NamedRing {
    std::string name;
    ybe::FiniteRing ring;
};

// Nilpotent rings of order ≤ 16 built by the library.
inline std::vector<NamedRing> nilpotent_rings(int max_order = 16) {
    std::vector<NamedRing> out;
    auto add = [&](std::string name, ybe::FiniteRing r) {
        if (r.order() <= max_order) out.push_back({std::move(name), std::move(r)});
    };
    for (int n = 2; n <= 5; ++n) add("F2[x]/x^" + std::to_string(n), ybe::make_truncated_polynomial_ring(2, n));
    for (int n = 2; n <= 3; ++n) add("F3[x]/x^" + std::to_string(n), ybe::make_truncated_polynomial_ring(3, n));
    add("2Z/4", ybe::make_multiple_ring(2, 4));
    add("2Z/8", ybe::make_multiple_ring(2, 8));
    add("2Z/16", ybe::make_multiple_ring(2, 16));
    add("4Z/16", ybe::make_multiple_ring(4, 16));
    for (int n : {2, 3, 4, 6}) add("zero(" + std::to_string(n) + ")", ybe::make_zero_ring(n));
    add("UT3(F2)", ybe::make_strict_upper_triangular_ring(2, 3));
    return out;
}

inline std::vector<NamedBrace> braces(int max_order = 8) {
    std::vector<NamedBrace> out;
    for (auto& r : nilpotent_rings(max_order)) out.push_back({"ring " + r.name, ybe::brace_from_nilpotent_ring(r.ring)});
    for (int n : {1, 2, 3, 4, 6}) out.push_back({"trivial(" + std::to_string(n) + ")", ybe::trivial_brace(n)});
    const auto f2x3 = ybe::brace_from_nilpotent_ring(ybe::make_truncated_polynomial_ring(2, 3));
    out.push_back({"F2[x]/x^3 x Z/2", ybe::direct_product(f2x3, ybe::trivial_brace(2))});
    const auto z8 = ybe::brace_from_nilpotent_ring(ybe::make_multiple_ring(2, 8));
    out.push_back({"2Z/8 x Z/2", ybe::direct_product(ybe::brace_from_nilpotent_ring(ybe::make_multiple_ring(2, 4)),
                                                     ybe::brace_from_nilpotent_ring(ybe::make_multiple_ring(2, 4)))});
    // braces from exact factorizations of circle groups
    for (const auto& base : {ybe::brace_from_nilpotent_ring(ybe::make_strict_upper_triangular_ring(2, 3)),
                             ybe::brace_from_nilpotent_ring(ybe::make_truncated_polynomial_ring(2, 4)), z8}) {
        const auto facs = ybe::find_exact_factorizations(base);
        if (!facs.empty())
            out.push_back({"exact factorization of order " + std::to_string(base.order()),
                           ybe::brace_from_exact_factorization(base, facs.front().b_sub, facs.front().c_sub)});
    }
    return out;
}

// ---- brute-force solutions --------------------------------------------------

using PairTable = std::vector<std::pair<int, int>>;

inline bool braid_holds(int n, const PairTable& r) {
    auto at = [&](int x, int y) { return r[static_cast<size_t>(x) * n + y]; };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                // r1 r2 r1
                auto [a1, b1] = at(x, y);
                auto [b2, c2] = at(b1, z);
                auto [a3, b3] = at(a1, b2);
                // r2 r1 r2
                auto [q1, r1] = at(y, z);
                auto [p2, q2] = at(x, q1);
                auto [q3, r3] = at(q2, r1);
                if (a3 != p2 || b3 != q3 || c2 != r3) return false;
            }
    return true;
}

inline bool involutive_nondegenerate(int n, const PairTable& r) {
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [u, v] = r[static_cast<size_t>(x) * n + y];
            if (r[static_cast<size_t>(u) * n + v] != std::pair{x, y}) return false;
        }
    for (int x = 0; x < n; ++x) {
        std::set<int> sig, tau;
        for (int y = 0; y < n; ++y) {
            sig.insert(r[static_cast<size_t>(x) * n + y].first);
            tau.insert(r[static_cast<size_t>(y) * n + x].second);
        }
        if (static_cast<int>(sig.size()) != n || static_cast<int>(tau.size()) != n) return false;
    }
    return true;
}

/// Visits every bijection of the n² pairs.
template <class F>
void for_each_bijection(int n, F&& visit) {
    const int m = n * n;
    std::vector<int> perm(static_cast<size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    PairTable r(static_cast<size_t>(m));
    do {
        for (int k = 0; k < m; ++k) r[k] = {perm[k] / n, perm[k] % n};
        visit(r);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

/// All involutive non-degenerate braid solutions on n points, by exhaustion.
inline std::set<PairTable> involutive_solutions(int n) {
    std::set<PairTable> out;
    for_each_bijection(n, [&](const PairTable& r) {
        if (involutive_nondegenerate(n, r) && braid_holds(n, r)) out.insert(r);
    });
    return out;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20261018);
    return g;
}

}  // namespace corpus
