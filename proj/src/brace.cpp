#include "ybe/brace.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ybe {

namespace {

std::vector<Elem> sorted_unique(std::vector<Elem> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Closure of `gens` under a binary table; always contains `identity`.
std::vector<Elem> close_under(const Table& op, std::vector<Elem> gens, Elem identity) {
    std::vector<char> in(static_cast<size_t>(op.order()), 0);
    std::vector<Elem> members;
    auto push = [&](Elem e) {
        if (!in[e]) {
            in[e] = 1;
            members.push_back(e);
        }
    };
    push(identity);
    for (Elem g : gens) push(g);
    for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = 0; j <= i; ++j) {
            push(op(members[i], members[j]));
            push(op(members[j], members[i]));
        }
    }
    return sorted_unique(std::move(members));
}

std::vector<Elem> table_negations(const Table& add) {
    int n = add.order();
    std::vector<Elem> neg(static_cast<size_t>(n), -1);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (add(a, b) == 0) {
                neg[a] = b;
                break;
            }
    return neg;
}

void check_square_pair(const Table& a, const Table& b) {
    if (a.order() != b.order()) {
        std::ostringstream os;
        os << "table dimension mismatch: " << a.order() << " vs " << b.order();
        throw AlgebraError(os.str());
    }
}

bool in_range(const Table& t) {
    return std::all_of(t.data().begin(), t.data().end(),
                       [&](Elem e) { return e >= 0 && e < t.order(); });
}

// Group axioms for `op` with identity 0; records the first failure of each kind.
void check_group(const Table& op, const std::string& name, bool need_abelian,
                 std::vector<AxiomViolation>& out) {
    int n = op.order();
    for (Elem a = 0; a < n; ++a) {
        if (op(0, a) != a || op(a, 0) != a) {
            out.push_back({name + ": identity", a, 0, 0});
            break;
        }
    }
    bool found = false;
    for (Elem a = 0; a < n && !found; ++a)
        for (Elem b = 0; b < n && !found; ++b)
            for (Elem c = 0; c < n && !found; ++c)
                if (op(op(a, b), c) != op(a, op(b, c))) {
                    out.push_back({name + ": associativity", a, b, c});
                    found = true;
                }
    for (Elem a = 0; a < n; ++a) {
        bool has_inv = false;
        for (Elem b = 0; b < n && !has_inv; ++b) has_inv = op(a, b) == 0 && op(b, a) == 0;
        if (!has_inv) {
            out.push_back({name + ": inverse", a, 0, 0});
            break;
        }
    }
    if (need_abelian) {
        found = false;
        for (Elem a = 0; a < n && !found; ++a)
            for (Elem b = 0; b < a && !found; ++b)
                if (op(a, b) != op(b, a)) {
                    out.push_back({name + ": commutativity", a, b, 0});
                    found = true;
                }
    }
}

BraceSubset ring_span(const FiniteRing& r, const std::vector<Elem>& lhs,
                      const std::vector<Elem>& rhs) {
    std::vector<Elem> gens;
    for (Elem a : lhs)
        for (Elem b : rhs) gens.push_back(r.mul(a, b));
    return BraceSubset(close_under(r.add, sorted_unique(std::move(gens)), 0));
}

}  // namespace

// ---- Table / subsets -----------------------------------------------------

Table::Table(int order, std::vector<Elem> data) : order_(order), data_(std::move(data)) {
    if (order < 0 || data_.size() != static_cast<size_t>(order) * order)
        throw AlgebraError("table data does not match order");
}

Table Table::from_rows(const std::vector<std::vector<Elem>>& rows) {
    int n = static_cast<int>(rows.size());
    std::vector<Elem> data;
    data.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) throw AlgebraError("table is not square");
        data.insert(data.end(), row.begin(), row.end());
    }
    return Table(n, std::move(data));
}

std::vector<std::vector<Elem>> Table::rows() const {
    std::vector<std::vector<Elem>> out(static_cast<size_t>(order_));
    for (int i = 0; i < order_; ++i)
        out[i].assign(data_.begin() + static_cast<long>(i) * order_,
                      data_.begin() + static_cast<long>(i + 1) * order_);
    return out;
}

BraceSubset::BraceSubset(std::vector<Elem> m) : members(sorted_unique(std::move(m))) {}

bool BraceSubset::contains(Elem e) const {
    return std::binary_search(members.begin(), members.end(), e);
}

FiniteBrace::FiniteBrace(Table add, Table circ) : add_(std::move(add)), circ_(std::move(circ)) {
    check_square_pair(add_, circ_);
    if (!in_range(add_) || !in_range(circ_)) throw AlgebraError("table entry out of range");
    neg_ = table_negations(add_);
    inv_ = table_negations(circ_);
    for (int a = 0; a < order(); ++a)
        if (neg_[a] < 0 || inv_[a] < 0)
            throw AlgebraError("element " + std::to_string(a) + " has no inverse");
}

// ---- verification --------------------------------------------------------

BraceReport verify_brace(const Table& add, const Table& circ) {
    check_square_pair(add, circ);
    BraceReport rep;
    if (!in_range(add) || !in_range(circ) || add.order() == 0) {
        rep.violations.push_back({"table range", 0, 0, 0});
        return rep;
    }
    check_group(add, "additive group", true, rep.violations);
    check_group(circ, "circle group", false, rep.violations);
    if (!rep.violations.empty()) return rep;

    int n = add.order();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (add(circ(a, add(b, c)), a) != add(circ(a, b), circ(a, c))) {
                    rep.violations.push_back({"compatibility", a, b, c});
                    return rep;
                }
    rep.is_brace = true;
    return rep;
}

BraceReport verify_skew_brace_report(const Table& add, const Table& circ) {
    check_square_pair(add, circ);
    BraceReport rep;
    if (!in_range(add) || !in_range(circ) || add.order() == 0) {
        rep.violations.push_back({"table range", 0, 0, 0});
        return rep;
    }
    check_group(add, "additive group", false, rep.violations);
    check_group(circ, "circle group", false, rep.violations);
    if (!rep.violations.empty()) return rep;

    auto neg = table_negations(add);
    int n = add.order();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (circ(a, add(b, c)) != add(add(circ(a, b), neg[a]), circ(a, c))) {
                    rep.violations.push_back({"skew compatibility", a, b, c});
                    return rep;
                }
    rep.is_brace = true;
    return rep;
}

bool verify_skew_brace(const Table& add, const Table& circ) {
    return verify_skew_brace_report(add, circ).is_brace;
}

bool verify_ring(const FiniteRing& r) {
    check_square_pair(r.add, r.mul);
    if (!in_range(r.add) || !in_range(r.mul)) return false;
    std::vector<AxiomViolation> v;
    check_group(r.add, "additive group", true, v);
    if (!v.empty()) return false;
    int n = r.order();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c) {
                if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return false;
                if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return false;
                if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) return false;
            }
    return true;
}

// ---- constructions -------------------------------------------------------

FiniteRing make_truncated_polynomial_ring(int p, int n) {
    if (!is_prime(p)) throw AlgebraError("characteristic " + std::to_string(p) + " is not prime");
    if (n < 2) throw AlgebraError("truncation degree must be at least 2");
    int dim = n - 1;
    int order = 1;
    for (int i = 0; i < dim; ++i) order *= p;

    auto coeffs = [&](Elem e) {
        std::vector<int> c(static_cast<size_t>(dim));
        for (int i = 0; i < dim; ++i) {
            c[i] = e % p;
            e /= p;
        }
        return c;
    };
    auto index = [&](const std::vector<int>& c) {
        Elem e = 0;
        for (int i = dim - 1; i >= 0; --i) e = e * p + c[i];
        return e;
    };

    FiniteRing r{Table(order), Table(order)};
    for (Elem a = 0; a < order; ++a) {
        auto ca = coeffs(a);
        for (Elem b = 0; b < order; ++b) {
            auto cb = coeffs(b);
            std::vector<int> s(static_cast<size_t>(dim)), m(static_cast<size_t>(dim), 0);
            for (int i = 0; i < dim; ++i) s[i] = (ca[i] + cb[i]) % p;
            // coefficient slot i holds x^{i+1}
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) {
                    int deg = (i + 1) + (j + 1);
                    if (deg < n) m[deg - 1] = (m[deg - 1] + ca[i] * cb[j]) % p;
                }
            r.add(a, b) = index(s);
            r.mul(a, b) = index(m);
        }
    }
    return r;
}

FiniteRing make_multiple_ring(int step, int modulus) {
    if (step <= 0 || modulus <= 0 || modulus % step != 0)
        throw AlgebraError("step must divide the modulus");
    int order = modulus / step;
    FiniteRing r{Table(order), Table(order)};
    for (Elem a = 0; a < order; ++a)
        for (Elem b = 0; b < order; ++b) {
            long va = static_cast<long>(a) * step, vb = static_cast<long>(b) * step;
            r.add(a, b) = static_cast<Elem>(((va + vb) % modulus) / step);
            r.mul(a, b) = static_cast<Elem>(((va * vb) % modulus) / step);
        }
    return r;
}

FiniteRing make_zero_ring(int n) {
    if (n < 1) throw AlgebraError("ring order must be positive");
    FiniteRing r{Table(n), Table(n)};
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) r.add(a, b) = (a + b) % n;
    return r;
}

FiniteRing make_strict_upper_triangular_ring(int p, int k) {
    if (!is_prime(p)) throw AlgebraError("characteristic " + std::to_string(p) + " is not prime");
    if (k < 2) throw AlgebraError("matrix size must be at least 2");
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) slots.emplace_back(i, j);
    int dim = static_cast<int>(slots.size());
    int order = 1;
    for (int i = 0; i < dim; ++i) order *= p;

    auto to_matrix = [&](Elem e) {
        std::vector<int> m(static_cast<size_t>(k * k), 0);
        for (int s = 0; s < dim; ++s) {
            m[slots[s].first * k + slots[s].second] = e % p;
            e /= p;
        }
        return m;
    };
    auto to_index = [&](const std::vector<int>& m) {
        Elem e = 0;
        for (int s = dim - 1; s >= 0; --s) e = e * p + m[slots[s].first * k + slots[s].second];
        return e;
    };

    FiniteRing r{Table(order), Table(order)};
    for (Elem a = 0; a < order; ++a) {
        auto ma = to_matrix(a);
        for (Elem b = 0; b < order; ++b) {
            auto mb = to_matrix(b);
            std::vector<int> s(static_cast<size_t>(k * k)), m(static_cast<size_t>(k * k), 0);
            for (int i = 0; i < k * k; ++i) s[i] = (ma[i] + mb[i]) % p;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    for (int l = 0; l < k; ++l) m[i * k + j] = (m[i * k + j] + ma[i * k + l] * mb[l * k + j]) % p;
            r.add(a, b) = to_index(s);
            r.mul(a, b) = to_index(m);
        }
    }
    return r;
}

std::optional<int> ring_nilpotency_class(const FiniteRing& r) {
    std::vector<Elem> all(static_cast<size_t>(r.order()));
    for (Elem a = 0; a < r.order(); ++a) all[a] = a;
    BraceSubset power(all);
    int m = 1;
    while (power.size() > 1) {
        BraceSubset next = ring_span(r, all, power.members);
        if (next == power) return std::nullopt;
        power = std::move(next);
        ++m;
    }
    return m;
}

FiniteBrace brace_from_nilpotent_ring(const FiniteRing& r) {
    if (!ring_nilpotency_class(r)) throw AlgebraError("ring is not nilpotent");
    Table circ(r.order());
    for (Elem a = 0; a < r.order(); ++a)
        for (Elem b = 0; b < r.order(); ++b) circ(a, b) = r.add(r.add(a, b), r.mul(a, b));
    return FiniteBrace(r.add, std::move(circ));
}

FiniteBrace trivial_brace(int n) {
    FiniteRing z = make_zero_ring(n);
    return FiniteBrace(z.add, z.add);
}

FiniteBrace direct_product(const FiniteBrace& b1, const FiniteBrace& b2) {
    int n1 = b1.order(), n2 = b2.order(), n = n1 * n2;
    Table add(n), circ(n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            Elem a1 = a / n2, a2 = a % n2, c1 = b / n2, c2 = b % n2;
            add(a, b) = b1.add(a1, c1) * n2 + b2.add(a2, c2);
            circ(a, b) = b1.circ(a1, c1) * n2 + b2.circ(a2, c2);
        }
    return FiniteBrace(std::move(add), std::move(circ));
}

FiniteBrace brace_from_exact_factorization(const FiniteBrace& nb, const BraceSubset& b_sub,
                                           const BraceSubset& c_sub) {
    int n = nb.order();
    std::vector<int> count(static_cast<size_t>(n), 0);
    std::vector<Elem> fb(static_cast<size_t>(n), 0), fc(static_cast<size_t>(n), 0);
    for (Elem b : b_sub.members)
        for (Elem c : c_sub.members) {
            Elem a = nb.circ(b, c);
            if (count[a]++ == 0) {
                fb[a] = b;
                fc[a] = c;
            }
        }
    for (Elem a = 0; a < n; ++a)
        if (count[a] != 1) {
            std::ostringstream os;
            os << "factorization is not exact: element " << a << " has " << count[a]
               << " factorizations";
            throw AlgebraError(os.str());
        }
    Table odot(n);
    for (Elem a = 0; a < n; ++a)
        for (Elem a2 = 0; a2 < n; ++a2) odot(a, a2) = nb.circ(nb.circ(fb[a], a2), fc[a]);
    return FiniteBrace(nb.add_table(), std::move(odot));
}

// ---- structure -----------------------------------------------------------

Elem star_product(const FiniteBrace& b, Elem x, Elem y) {
    if (x < 0 || y < 0 || x >= b.order() || y >= b.order())
        throw AlgebraError("element index out of range");
    return b.star(x, y);
}

BraceSubset whole(const FiniteBrace& b) {
    std::vector<Elem> all(static_cast<size_t>(b.order()));
    for (Elem a = 0; a < b.order(); ++a) all[a] = a;
    return BraceSubset(std::move(all));
}

BraceSubset socle(const FiniteBrace& b) {
    std::vector<Elem> out;
    for (Elem a = 0; a < b.order(); ++a) {
        bool ok = true;
        for (Elem c = 0; c < b.order() && ok; ++c) ok = b.star(a, c) == 0;
        if (ok) out.push_back(a);
    }
    return BraceSubset(std::move(out));
}

bool is_ideal(const FiniteBrace& b, const BraceSubset& s) {
    if (!s.contains(0)) return false;
    for (Elem x : s.members) {
        if (x < 0 || x >= b.order()) return false;
        if (!s.contains(b.neg(x))) return false;
        for (Elem y : s.members)
            if (!s.contains(b.add(x, y))) return false;
        for (Elem z = 0; z < b.order(); ++z)
            if (!s.contains(b.star(z, x)) || !s.contains(b.star(x, z))) return false;
    }
    return true;
}

Quotient quotient_brace(const FiniteBrace& b, const BraceSubset& ideal) {
    if (!is_ideal(b, ideal)) throw AlgebraError("subset is not an ideal");
    int n = b.order();
    std::vector<Elem> class_map(static_cast<size_t>(n), -1);
    std::vector<Elem> reps;
    for (Elem a = 0; a < n; ++a) {
        if (class_map[a] >= 0) continue;
        Elem cls = static_cast<Elem>(reps.size());
        reps.push_back(a);
        for (Elem i : ideal.members) class_map[b.add(a, i)] = cls;
    }
    int m = static_cast<int>(reps.size());
    Table add(m), circ(m);
    std::vector<char> seen(static_cast<size_t>(m) * m, 0);
    for (Elem a = 0; a < n; ++a)
        for (Elem c = 0; c < n; ++c) {
            Elem ca = class_map[a], cc = class_map[c];
            Elem s = class_map[b.add(a, c)], o = class_map[b.circ(a, c)];
            size_t k = static_cast<size_t>(ca) * m + cc;
            if (!seen[k]) {
                seen[k] = 1;
                add(ca, cc) = s;
                circ(ca, cc) = o;
            } else if (add(ca, cc) != s || circ(ca, cc) != o) {
                throw AlgebraError("induced quotient operation is not well defined");
            }
        }
    return {FiniteBrace(std::move(add), std::move(circ)), std::move(class_map)};
}

BraceSubset additive_closure(const FiniteBrace& b, const std::vector<Elem>& gens) {
    return BraceSubset(close_under(b.add_table(), gens, 0));
}

BraceSubset star_span(const FiniteBrace& b, const BraceSubset& lhs, const BraceSubset& rhs) {
    std::vector<Elem> gens;
    for (Elem s : lhs.members)
        for (Elem t : rhs.members) gens.push_back(b.star(s, t));
    return additive_closure(b, sorted_unique(std::move(gens)));
}

BraceSubset subset_sum(const FiniteBrace& b, const BraceSubset& x, const BraceSubset& y) {
    std::vector<Elem> gens = x.members;
    gens.insert(gens.end(), y.members.begin(), y.members.end());
    return additive_closure(b, gens);
}

namespace {

ChainReport finish_chain(std::vector<BraceSubset> chain) {
    ChainReport rep;
    for (size_t i = 0; i < chain.size(); ++i)
        if (chain[i].size() == 1) {
            rep.vanishes = true;
            rep.vanish_index = static_cast<int>(i + 1);
            break;
        }
    rep.chain = std::move(chain);
    return rep;
}

ChainReport one_sided_chain(const FiniteBrace& b, bool left) {
    std::vector<BraceSubset> chain{whole(b)};
    BraceSubset all = chain.front();
    while (chain.back().size() > 1) {
        BraceSubset next = left ? star_span(b, all, chain.back()) : star_span(b, chain.back(), all);
        if (next == chain.back()) break;
        chain.push_back(std::move(next));
    }
    return finish_chain(std::move(chain));
}

}  // namespace

NilpotencyChains nilpotency_chains(const FiniteBrace& b) {
    NilpotencyChains out;
    out.left = one_sided_chain(b, true);
    out.right = one_sided_chain(b, false);

    // A^[k+1] = sum_{i=1..k} A^[i] · A^[k+1-i]; a term may repeat before the
    // chain drops further, so iterate to a fixed budget instead of stopping
    // at the first repeat.
    std::vector<BraceSubset> strong{whole(b)};
    const size_t budget = static_cast<size_t>(4 * b.order() + 4);
    while (strong.back().size() > 1 && strong.size() < budget) {
        size_t k = strong.size();
        BraceSubset term({0});
        for (size_t i = 1; i <= k; ++i)
            term = subset_sum(b, term, star_span(b, strong[i - 1], strong[k - i]));
        strong.push_back(std::move(term));
    }
    out.strong = finish_chain(std::move(strong));
    return out;
}

BraceSubset generated_subbrace(const FiniteBrace& b, Elem x) {
    if (x < 0 || x >= b.order()) throw AlgebraError("element index out of range");
    int n = b.order();
    std::vector<char> in(static_cast<size_t>(n), 0);
    std::vector<Elem> members;
    auto push = [&](Elem e) {
        if (!in[e]) {
            in[e] = 1;
            members.push_back(e);
        }
    };
    push(x);
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            Elem u = members[i], v = members[j];
            push(b.add(u, v));
            push(b.circ(u, v));
            push(b.circ(v, u));
        }
    return BraceSubset(std::move(members));
}

SubBrace extract_subbrace(const FiniteBrace& b, const BraceSubset& s) {
    if (!s.contains(0)) throw AlgebraError("subset does not contain the identity");
    SubBrace out;
    out.embedding = s.members;
    out.parent_to_sub.assign(static_cast<size_t>(b.order()), -1);
    for (size_t i = 0; i < s.members.size(); ++i) out.parent_to_sub[s.members[i]] = static_cast<Elem>(i);
    int m = static_cast<int>(s.size());
    Table add(m), circ(m);
    for (Elem i = 0; i < m; ++i)
        for (Elem j = 0; j < m; ++j) {
            Elem sa = out.parent_to_sub[b.add(s.members[i], s.members[j])];
            Elem sc = out.parent_to_sub[b.circ(s.members[i], s.members[j])];
            if (sa < 0 || sc < 0) throw AlgebraError("subset is not closed under + and circle");
            add(i, j) = sa;
            circ(i, j) = sc;
        }
    out.brace = FiniteBrace(std::move(add), std::move(circ));
    return out;
}

bool check_sum_formula(const FiniteBrace& b, Elem a, Elem bb, Elem c) {
    auto chains = nilpotency_chains(b);
    if (!chains.right.vanishes) throw AlgebraError("brace is not right nilpotent");
    return check_sum_formula(b, a, bb, c, *chains.right.vanish_index);
}

bool check_sum_formula(const FiniteBrace& b, Elem a, Elem bb, Elem c, int s) {
    Elem lhs = b.star(b.add(a, bb), c);
    Elem rhs = b.add(b.star(a, c), b.star(bb, c));
    Elem d = a, dp = bb;
    for (int i = 0; i <= 2 * s; ++i) {
        Elem term = b.sub(b.star(b.star(dp, d), c), b.star(dp, b.star(d, c)));
        // (-1)^{i+1}: subtract for even i
        rhs = (i % 2 == 0) ? b.sub(rhs, term) : b.add(rhs, term);
        Elem nd = b.add(d, dp);
        Elem ndp = b.star(dp, d);
        d = nd;
        dp = ndp;
    }
    return lhs == rhs;
}

std::vector<BraceSubset> circle_subgroups(const FiniteBrace& b) {
    const Table& op = b.circ_table();
    std::set<std::vector<Elem>> found;
    std::vector<std::vector<Elem>> queue;
    auto add_group = [&](std::vector<Elem> g) {
        if (found.insert(g).second) queue.push_back(std::move(g));
    };
    for (Elem a = 0; a < b.order(); ++a) add_group(close_under(op, {a}, 0));
    std::vector<std::vector<Elem>> cyclic = queue;
    // every subgroup is a join of cyclic subgroups
    for (size_t i = 0; i < queue.size(); ++i)
        for (size_t j = 0; j < cyclic.size(); ++j) {
            if (std::includes(queue[i].begin(), queue[i].end(), cyclic[j].begin(), cyclic[j].end()))
                continue;
            std::vector<Elem> gens = queue[i];
            gens.insert(gens.end(), cyclic[j].begin(), cyclic[j].end());
            add_group(close_under(op, std::move(gens), 0));
        }
    std::vector<BraceSubset> out;
    for (const auto& g : found) out.emplace_back(g);
    std::sort(out.begin(), out.end(), [](const BraceSubset& x, const BraceSubset& y) {
        return x.size() != y.size() ? x.size() < y.size() : x.members < y.members;
    });
    return out;
}

std::vector<ExactFactorization> find_exact_factorizations(const FiniteBrace& b) {
    auto groups = circle_subgroups(b);
    std::vector<ExactFactorization> out;
    size_t n = static_cast<size_t>(b.order());
    for (const auto& g1 : groups) {
        if (g1.size() == 1 || g1.size() == n) continue;
        for (const auto& g2 : groups) {
            if (g2.size() == 1 || g1.size() * g2.size() != n) continue;
            std::vector<char> hit(n, 0);
            bool exact = true;
            for (Elem x : g1.members) {
                for (Elem y : g2.members) {
                    Elem a = b.circ(x, y);
                    if (hit[a]) {
                        exact = false;
                        break;
                    }
                    hit[a] = 1;
                }
                if (!exact) break;
            }
            if (exact) out.push_back({g1, g2});
        }
    }
    return out;
}

}  // namespace ybe
