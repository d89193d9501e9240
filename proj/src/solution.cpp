#include "ybe/solution.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ybe {

namespace {

std::string pair_str(int x, int y) {
    std::ostringstream os;
    os << "(" << x << ", " << y << ")";
    return os.str();
}

bool is_permutation(const std::vector<int>& v) {
    std::vector<char> seen(v.size(), 0);
    for (int e : v) {
        if (e < 0 || e >= static_cast<int>(v.size()) || seen[e]) return false;
        seen[e] = 1;
    }
    return true;
}

void require_involutive_nondegenerate(const SetSolution& s, const char* what) {
    auto p = solution_properties(s);
    if (!p.involutive || !p.nondegenerate())
        throw SolutionError(std::string(what) + " requires an involutive non-degenerate solution");
}

Permutation compose(const Permutation& f, const Permutation& g) {  // f after g
    Permutation h(g.size());
    for (size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
    return h;
}

Permutation inverse(const Permutation& f) {
    Permutation h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[f[i]] = static_cast<int>(i);
    return h;
}

std::set<Permutation> generate(const std::vector<Permutation>& gens, size_t degree, size_t cap) {
    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::set<Permutation> group{id};
    std::vector<Permutation> frontier{id};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& g : frontier)
            for (const auto& s : gens) {
                auto h = compose(s, g);
                if (group.insert(h).second) {
                    if (group.size() > cap)
                        throw SolutionError("permutation group exceeds the configured bound");
                    next.push_back(std::move(h));
                }
            }
        frontier = std::move(next);
    }
    return group;
}

}  // namespace

// ---- SetSolution ---------------------------------------------------------

SetSolution::SetSolution(int n, std::vector<Pair> table) : n_(n), table_(std::move(table)) {
    if (n < 0 || table_.size() != static_cast<size_t>(n) * n)
        throw SolutionError("solution table size does not match n*n");
    for (const auto& [k, l] : table_)
        if (k < 0 || l < 0 || k >= n || l >= n) throw SolutionError("solution entry out of range");
}

bool SetSolution::is_bijective() const {
    std::vector<char> seen(table_.size(), 0);
    for (const auto& [k, l] : table_) {
        size_t idx = static_cast<size_t>(k) * n_ + l;
        if (seen[idx]) return false;
        seen[idx] = 1;
    }
    return true;
}

std::vector<int> PartitionedSet::class_of() const {
    std::vector<int> out(static_cast<size_t>(n), -1);
    for (size_t c = 0; c < classes.size(); ++c)
        for (int x : classes[c]) {
            if (x < 0 || x >= n) throw SolutionError("partition element out of range");
            if (out[x] >= 0) throw SolutionError("partition classes overlap");
            out[x] = static_cast<int>(c);
        }
    return out;
}

bool PartitionedSet::covers() const {
    auto c = class_of();
    return std::all_of(c.begin(), c.end(), [](int v) { return v >= 0; });
}

// ---- construction --------------------------------------------------------

SetSolution flip_solution(int n) {
    if (n < 1) throw SolutionError("flip solution needs n >= 1");
    std::vector<Pair> t;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t.emplace_back(y, x);
    return SetSolution(n, std::move(t));
}

SetSolution cyclic_solution(int n) {
    if (n < 1) throw SolutionError("cyclic solution needs n >= 1");
    std::vector<Pair> t;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t.emplace_back((y + 1) % n, (x - 1 + n) % n);
    return SetSolution(n, std::move(t));
}

SetSolution hura5_solution() {
    std::vector<Pair> t;
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            int i = u >> 1, j = u & 1, m = v >> 1, n = v & 1;
            int a = (m + 1) & 1, b = (n + m + i) & 1;
            int c = (i + 1) & 1, d = (j + i + m) & 1;
            t.emplace_back(2 * a + b, 2 * c + d);
        }
    return SetSolution(4, std::move(t));
}

SetSolution builtin_solution(BuiltinSolution kind, int n) {
    switch (kind) {
        case BuiltinSolution::flip:
            return flip_solution(n);
        case BuiltinSolution::cyclic:
            return cyclic_solution(n);
        case BuiltinSolution::hura5:
            if (n != 4) throw SolutionError("hura5 solution has fixed size 4");
            return hura5_solution();
    }
    throw SolutionError("unknown builtin solution");
}

BuiltinSolution parse_builtin_solution(const std::string& name) {
    if (name == "flip") return BuiltinSolution::flip;
    if (name == "cyclic") return BuiltinSolution::cyclic;
    if (name == "hura5") return BuiltinSolution::hura5;
    throw SolutionError("unknown builtin solution '" + name + "'");
}

SetSolution yb_map_from_brace(const FiniteBrace& b) {
    int n = b.order();
    std::vector<Pair> t;
    t.reserve(static_cast<size_t>(n) * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            Elem u = b.add(b.star(x, y), y);
            Elem z = b.circ_inverse(u);
            t.emplace_back(u, b.add(b.star(z, x), x));
        }
    return SetSolution(n, std::move(t));
}

SetSolution disjoint_union(const SetSolution& a, const SetSolution& b) {
    int na = a.size(), n = na + b.size();
    std::vector<Pair> t;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x < na && y < na) {
                t.push_back(a(x, y));
            } else if (x >= na && y >= na) {
                auto [k, l] = b(x - na, y - na);
                t.emplace_back(k + na, l + na);
            } else {
                t.emplace_back(y, x);
            }
        }
    return SetSolution(n, std::move(t));
}

SetSolution relabel(const SetSolution& s, const std::vector<int>& phi) {
    int n = s.size();
    if (static_cast<int>(phi.size()) != n || !is_permutation(phi))
        throw SolutionError("relabeling is not a permutation");
    std::vector<Pair> t(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [u, v] = s(x, y);
            t[static_cast<size_t>(phi[x]) * n + phi[y]] = {phi[u], phi[v]};
        }
    return SetSolution(n, std::move(t));
}

// ---- checks --------------------------------------------------------------

std::optional<std::array<int, 3>> find_braid_violation(const SetSolution& s) {
    if (!s.is_bijective()) throw SolutionError("r is not a bijection on pairs");
    int n = s.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                // r1 r2 r1
                auto [a1, b1] = s(x, y);
                auto [b2, c2] = s(b1, z);
                auto [a3, b3] = s(a1, b2);
                // r2 r1 r2
                auto [p1, q1] = s(y, z);
                auto [o2, p2] = s(x, p1);
                auto [p3, q3] = s(p2, q1);
                if (a3 != o2 || b3 != p3 || c2 != q3) return std::array<int, 3>{x, y, z};
            }
    return std::nullopt;
}

bool verify_set_ybe(const SetSolution& s) { return !find_braid_violation(s).has_value(); }

SolutionProperties solution_properties(const SetSolution& s) {
    SolutionProperties p;
    int n = s.size();
    p.braid_ok = s.is_bijective() && verify_set_ybe(s);
    p.involutive = true;
    for (int x = 0; x < n && p.involutive; ++x)
        for (int y = 0; y < n && p.involutive; ++y) {
            auto [u, v] = s(x, y);
            p.involutive = s(u, v) == Pair{x, y};
        }
    p.left_nondeg = p.right_nondeg = true;
    for (int x = 0; x < n; ++x) {
        std::vector<int> sig(static_cast<size_t>(n)), ta(static_cast<size_t>(n));
        for (int y = 0; y < n; ++y) {
            sig[y] = s.sigma(x, y);
            ta[y] = s.tau(x, y);
        }
        p.right_nondeg = p.right_nondeg && is_permutation(sig);
        p.left_nondeg = p.left_nondeg && is_permutation(ta);
    }
    return p;
}

std::optional<Pair> partition_invariance_violation(const SetSolution& s, const PartitionedSet& p) {
    auto cls = p.class_of();
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y) {
            if (cls[x] < 0 || cls[y] < 0) continue;
            auto [u, v] = s(x, y);
            if (cls[u] != cls[y] || cls[v] != cls[x]) return Pair{x, y};
        }
    return std::nullopt;
}

// ---- restriction, orbits, retraction -------------------------------------

Restriction restrict_solution(const SetSolution& s, const std::vector<int>& members_in) {
    std::vector<int> members = members_in;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<int> index(static_cast<size_t>(s.size()), -1);
    for (size_t k = 0; k < members.size(); ++k) {
        if (members[k] < 0 || members[k] >= s.size()) throw SolutionError("subset element out of range");
        index[members[k]] = static_cast<int>(k);
    }
    int m = static_cast<int>(members.size());
    std::vector<Pair> t;
    for (int x : members)
        for (int y : members) {
            auto [u, v] = s(x, y);
            if (index[u] < 0 || index[v] < 0)
                throw SolutionError("r" + pair_str(x, y) + " = " + pair_str(u, v) + " leaves the subset");
            t.emplace_back(index[u], index[v]);
        }
    return {SetSolution(m, std::move(t)), std::move(members)};
}

OrbitReport orbits(const SetSolution& s) {
    int n = s.size();
    std::vector<int> label(static_cast<size_t>(n), -1);
    OrbitReport rep;
    rep.orbits.n = n;
    for (int start = 0; start < n; ++start) {
        if (label[start] >= 0) continue;
        int id = static_cast<int>(rep.orbits.classes.size());
        std::vector<int> members{start};
        label[start] = id;
        for (size_t k = 0; k < members.size(); ++k) {
            int y = members[k];
            for (int x = 0; x < n; ++x)
                for (int img : {s.sigma(x, y), s.tau(x, y)})
                    if (label[img] < 0) {
                        label[img] = id;
                        members.push_back(img);
                    }
        }
        std::sort(members.begin(), members.end());
        rep.orbits.classes.push_back(std::move(members));
    }
    rep.indecomposable = n >= 1 && rep.orbits.classes.size() == 1;
    return rep;
}

namespace {

Retraction quotient_solution(const SetSolution& s, const std::vector<int>& class_map, int classes) {
    std::vector<Pair> t(static_cast<size_t>(classes) * classes, {-1, -1});
    int n = s.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [u, v] = s(x, y);
            Pair img{class_map[u], class_map[v]};
            auto& slot = t[static_cast<size_t>(class_map[x]) * classes + class_map[y]];
            if (slot.first < 0) {
                slot = img;
            } else if (slot != img) {
                throw SolutionError("induced map on classes is not well defined at " + pair_str(x, y));
            }
        }
    return {SetSolution(classes, std::move(t)), class_map};
}

}  // namespace

Retraction retraction(const SetSolution& s) {
    require_involutive_nondegenerate(s, "retraction");
    int n = s.size();
    std::map<std::vector<int>, int> ids;
    std::vector<int> class_map(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
        std::vector<int> sig(static_cast<size_t>(n));
        for (int y = 0; y < n; ++y) sig[y] = s.sigma(x, y);
        auto [it, fresh] = ids.emplace(std::move(sig), static_cast<int>(ids.size()));
        class_map[x] = it->second;
    }
    return quotient_solution(s, class_map, static_cast<int>(ids.size()));
}

std::optional<int> multipermutation_level(const SetSolution& s) {
    require_involutive_nondegenerate(s, "multipermutation level");
    SetSolution cur = s;
    int level = 0;
    while (cur.size() > 1) {
        Retraction r = retraction(cur);
        if (r.solution.size() == cur.size()) return std::nullopt;
        cur = std::move(r.solution);
        ++level;
    }
    return level;
}

Retraction i_retraction(const FiniteBrace& b, const BraceSubset& ideal, const Restriction& sub) {
    if (!is_ideal(b, ideal)) throw SolutionError("subset is not an ideal of the brace");
    const auto& members = sub.members;
    int m = static_cast<int>(members.size());
    if (sub.solution.size() != m) throw SolutionError("restriction size does not match its members");
    SetSolution full = yb_map_from_brace(b);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            auto [u, v] = sub.solution(i, j);
            if (full(members[i], members[j]) != Pair{members[u], members[v]})
                throw SolutionError("solution is not a restriction of the brace map");
        }
    std::vector<int> class_map(static_cast<size_t>(m), -1);
    int classes = 0;
    for (int i = 0; i < m; ++i) {
        if (class_map[i] >= 0) continue;
        for (int j = i; j < m; ++j)
            if (class_map[j] < 0 && ideal.contains(b.sub(members[i], members[j]))) class_map[j] = classes;
        ++classes;
    }
    return quotient_solution(sub.solution, class_map, classes);
}

OneGeneratorSolution one_generator_solution(const FiniteBrace& b, Elem x) {
    OneGeneratorSolution out;
    out.sub = extract_subbrace(b, generated_subbrace(b, x));
    const FiniteBrace& a = out.sub.brace;
    out.generator = out.sub.parent_to_sub[x];
    std::vector<Elem> xs;
    for (Elem s = 0; s < a.order(); ++s) xs.push_back(a.add(out.generator, a.star(s, out.generator)));
    out.x_set = BraceSubset(std::move(xs));
    out.solution = restrict_solution(yb_map_from_brace(a), out.x_set.members).solution;
    return out;
}

bool check_theorem_567(const FiniteBrace& b, const BraceSubset& x_set, Elem x) {
    std::vector<Elem> expect;
    for (Elem a = 0; a < b.order(); ++a) expect.push_back(b.add(x, b.star(a, x)));
    if (BraceSubset(expect) != x_set) return false;
    return additive_closure(b, x_set.members).size() == static_cast<size_t>(b.order());
}

PartitionKind parse_partition_kind(const std::string& name) {
    if (name == "orbit_Q" || name == "orbit_q" || name == "orbit") return PartitionKind::orbit_q;
    if (name == "graded") return PartitionKind::graded;
    if (name == "coset") return PartitionKind::coset;
    if (name == "sylow") return PartitionKind::sylow;
    throw SolutionError("unknown partition kind '" + name + "'");
}

InvariantPartition invariant_partition(PartitionKind kind, const FiniteBrace& b) {
    int n = b.order();
    std::set<std::vector<int>> classes;
    if (kind == PartitionKind::orbit_q) {
        for (Elem q = 1; q < n; ++q) {
            std::vector<int> cls;
            for (Elem a = 0; a < n; ++a) cls.push_back(b.add(q, b.star(a, q)));
            classes.insert(BraceSubset(cls).members);
        }
    } else if (kind == PartitionKind::graded || kind == PartitionKind::coset) {
        ChainReport left = nilpotency_chains(b).left;
        if (!left.vanishes) throw SolutionError("partition requires a left nilpotent brace");
        int m = *left.vanish_index;
        for (int i = 1; i < m; ++i) {
            const BraceSubset& cur = left.term(i);
            const BraceSubset& next = left.term(i + 1);
            std::vector<int> layer;
            for (Elem e : cur.members)
                if (!next.contains(e)) layer.push_back(e);
            if (kind == PartitionKind::graded) {
                if (!layer.empty()) classes.insert(layer);
                continue;
            }
            for (Elem q : layer) {
                std::vector<int> cls;
                for (Elem t : next.members) cls.push_back(b.add(q, t));
                classes.insert(BraceSubset(cls).members);
            }
        }
    } else {
        // additive order of each element; A_p = elements of p-power order
        std::vector<int> order(static_cast<size_t>(n), 1);
        for (Elem a = 1; a < n; ++a) {
            Elem s = a;
            int k = 1;
            while (s != 0) {
                s = b.add(s, a);
                ++k;
            }
            order[a] = k;
        }
        std::map<int, std::vector<int>> by_prime;
        for (Elem a = 1; a < n; ++a) {
            int k = order[a], p = 2;
            while (k % p != 0) ++p;
            while (k % p == 0) k /= p;
            if (k == 1) by_prime[p].push_back(a);
        }
        std::vector<std::vector<int>> ordered;
        for (auto& [p, cls] : by_prime) ordered.push_back(cls);
        InvariantPartition out;
        out.classes.n = n;
        out.classes.classes = ordered;
        std::vector<int> all;
        for (auto& c : ordered) all.insert(all.end(), c.begin(), c.end());
        out.x_set = BraceSubset(all);
        if (auto bad = partition_invariance_violation(yb_map_from_brace(b), out.classes))
            throw SolutionError("invariance fails at " + pair_str(bad->first, bad->second));
        return out;
    }

    InvariantPartition out;
    out.classes.n = n;
    std::vector<int> all;
    for (const auto& c : classes) {
        out.classes.classes.push_back(c);
        all.insert(all.end(), c.begin(), c.end());
    }
    out.x_set = BraceSubset(all);
    out.classes.class_of();  // throws on overlap
    if (auto bad = partition_invariance_violation(yb_map_from_brace(b), out.classes))
        throw SolutionError("invariance fails at " + pair_str(bad->first, bad->second));
    return out;
}

// ---- permutation group ---------------------------------------------------

PermutationGroup permutation_group(const SetSolution& s, size_t cap) {
    if (!solution_properties(s).right_nondeg)
        throw SolutionError("permutation group requires a right non-degenerate solution");
    int n = s.size();
    std::vector<Permutation> gens;
    for (int x = 0; x < n; ++x) {
        Permutation p(static_cast<size_t>(n));
        for (int y = 0; y < n; ++y) p[y] = s.sigma(x, y);
        gens.push_back(std::move(p));
    }
    auto group = generate(gens, static_cast<size_t>(n), cap);
    std::vector<Permutation> all(group.begin(), group.end());

    // lower central series G_{k+1} = <[a, b] : a in G_k, b in G>
    std::set<Permutation> term = group;
    bool nilpotent = term.size() == 1;
    while (!nilpotent) {
        std::set<Permutation> comms;
        for (const auto& a : term)
            for (const auto& b : all) comms.insert(compose(compose(inverse(a), inverse(b)), compose(a, b)));
        auto next = generate(std::vector<Permutation>(comms.begin(), comms.end()), static_cast<size_t>(n), cap);
        if (next.size() == 1) {
            nilpotent = true;
        } else if (next == term) {
            break;
        }
        term = std::move(next);
    }
    Permutation id(static_cast<size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    std::sort(all.begin(), all.end(), [&](const Permutation& a, const Permutation& b) {
        if ((a == id) != (b == id)) return a == id;
        return a < b;
    });
    return {std::move(all), nilpotent};
}

// ---- isomorphism ---------------------------------------------------------

std::optional<std::vector<int>> find_isomorphism(const SetSolution& a, const SetSolution& b) {
    if (a.size() != b.size()) return std::nullopt;
    if (a.size() > 9) throw SolutionError("isomorphism search is limited to n <= 9");
    std::vector<int> phi(static_cast<size_t>(a.size()));
    std::iota(phi.begin(), phi.end(), 0);
    do {
        if (relabel(a, phi) == b) return phi;
    } while (std::next_permutation(phi.begin(), phi.end()));
    return std::nullopt;
}

std::optional<std::vector<int>> find_cyclic_labeling(const SetSolution& s) {
    int n = s.size();
    if (n < 1) return std::nullopt;
    std::vector<int> shift(static_cast<size_t>(n));
    for (int y = 0; y < n; ++y) shift[y] = s.sigma(0, y);
    for (int x = 1; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (s.sigma(x, y) != shift[y]) return std::nullopt;
    std::vector<int> phi(static_cast<size_t>(n), -1);
    int cur = 0;
    for (int k = 0; k < n; ++k) {
        if (phi[cur] >= 0) return std::nullopt;  // shift is not a single n-cycle
        phi[cur] = k;
        cur = shift[cur];
    }
    if (cur != 0 || !is_permutation(shift)) return std::nullopt;
    if (relabel(s, phi) != cyclic_solution(n)) return std::nullopt;
    return phi;
}

}  // namespace ybe
