#include "ybe/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

namespace ybe {

WeightSystem::WeightSystem(int n, std::vector<cplx> d, double eps) : n_(n), d_(std::move(d)) {
    if (n < 0 || d_.size() != static_cast<size_t>(n) * n)
        throw WeightError("weight table must have n² entries");
    for (size_t k = 0; k < d_.size(); ++k)
        if (!(std::abs(d_[k]) > eps))
            throw WeightError("zero weight at pair (" + std::to_string(k / n) + "," + std::to_string(k % n) +
                              ")");
}

WeightSystem WeightSystem::constant(int n, cplx value) {
    return WeightSystem(n, std::vector<cplx>(static_cast<size_t>(n) * n, value));
}

static void require_size(const SetSolution& s, const WeightSystem& d) {
    if (s.size() != d.size())
        throw WeightError("weight system has size " + std::to_string(d.size()) + " but the solution has " +
                          std::to_string(s.size()));
}

static bool close(cplx a, cplx b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

std::optional<std::array<int, 3>> find_cocycle_violation(const SetSolution& s, const WeightSystem& d,
                                                         double tol) {
    require_size(s, d);
    const auto props = solution_properties(s);
    if (!props.nondegenerate()) throw WeightError("cocycle check needs a non-degenerate solution");
    const int n = s.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto [sxy, txy] = s(x, y);  // ˣy, x^y
            for (int z = 0; z < n; ++z) {
                const int syz = s.sigma(y, z);  // ʸz
                const int tzy = s.tau(z, y);    // y^z
                const cplx lhs = d(x, y) * d(txy, z) * d(sxy, s.sigma(txy, z));
                const cplx rhs = d(y, z) * d(x, syz) * d(s.tau(syz, x), tzy);
                if (!close(lhs, rhs, tol)) return std::array<int, 3>{x, y, z};
            }
        }
    return std::nullopt;
}

bool verify_cocycle(const SetSolution& s, const WeightSystem& d, double tol) {
    return !find_cocycle_violation(s, d, tol).has_value();
}

WeightSystem weights_from_witness(const SetSolution& s, const TrivialityWitness& w) {
    const int n = s.size();
    if (static_cast<int>(w.alpha.size()) != n) throw WeightError("witness size mismatch");
    std::vector<cplx> d(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto [u, v] = s(x, y);
            d[static_cast<size_t>(x) * n + y] = w.c * w.alpha[x] * w.alpha[y] / (w.alpha[u] * w.alpha[v]);
        }
    return WeightSystem(n, std::move(d));
}

bool witness_holds(const SetSolution& s, const WeightSystem& d, const TrivialityWitness& w, double tol) {
    require_size(s, d);
    const WeightSystem e = weights_from_witness(s, w);
    for (size_t k = 0; k < e.values().size(); ++k)
        if (!close(e.values()[k], d.values()[k], tol)) return false;
    return true;
}

// ---- triviality ------------------------------------------------------------
//
// Unknowns u = (α_0..α_{n-1}, c); pair (x, y) contributes the row with +1 at x,
// +1 at y, −1 at σ_x(y), −1 at τ_y(x) and +1 at c, and right-hand side d_(x,y).
// Row-reduce E to echelon form H = U·E with unimodular U. Zero rows of H give a
// Z-basis of the left kernel, and the system Π u^E = d is solvable over ℂ^× iff
// each of them maps d to 1. A witness then follows by back-substitution, since
// every nonzero complex number has k-th roots.

namespace {

using Row = std::vector<std::int64_t>;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw WeightError("integer overflow in exponent elimination");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw WeightError("integer overflow in exponent elimination");
    return r;
}

// row_a -= q * row_b
void axpy(Row& a, const Row& b, std::int64_t q) {
    for (size_t k = 0; k < a.size(); ++k)
        if (b[k]) a[k] = checked_sub(a[k], checked_mul(q, b[k]));
}

struct Echelon {
    std::vector<Row> h;  // reduced exponent rows
    std::vector<Row> u;  // transforms, h = u · e
    std::vector<int> pivot_col;  // per nonzero row of h, in order
    int rank = 0;
};

Echelon hermite_rows(std::vector<Row> e) {
    const size_t m = e.size();
    const size_t cols = m ? e[0].size() : 0;
    Echelon out;
    out.u.assign(m, Row(m, 0));
    for (size_t i = 0; i < m; ++i) out.u[i][i] = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < m; ++c) {
        // Euclid down column c on rows r.. until a single nonzero remains.
        while (true) {
            size_t best = m;
            for (size_t i = r; i < m; ++i)
                if (e[i][c] && (best == m || std::llabs(e[i][c]) < std::llabs(e[best][c]))) best = i;
            if (best == m) break;
            std::swap(e[r], e[best]);
            std::swap(out.u[r], out.u[best]);
            bool done = true;
            for (size_t i = r + 1; i < m; ++i) {
                if (!e[i][c]) continue;
                const std::int64_t q = e[i][c] / e[r][c];
                axpy(e[i], e[r], q);
                axpy(out.u[i], out.u[r], q);
                if (e[i][c]) done = false;
            }
            if (done) break;
        }
        if (r < m && e[r][c]) {
            if (e[r][c] < 0) {
                for (auto& v : e[r]) v = -v;
                for (auto& v : out.u[r]) v = -v;
            }
            out.pivot_col.push_back(static_cast<int>(c));
            ++r;
        }
    }
    out.rank = static_cast<int>(r);
    out.h = std::move(e);
    return out;
}

// Π d_k^{v_k} through logarithms; the branch ambiguity cancels for integer v.
cplx power_product(const std::vector<cplx>& d, const Row& v) {
    double mag = 0.0, arg = 0.0;
    for (size_t k = 0; k < v.size(); ++k) {
        if (!v[k]) continue;
        mag += static_cast<double>(v[k]) * std::log(std::abs(d[k]));
        arg += static_cast<double>(v[k]) * std::arg(d[k]);
    }
    return std::polar(std::exp(mag), arg);
}

cplx int_pow(cplx z, std::int64_t k) {
    cplx base = k < 0 ? 1.0 / z : z;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
    cplx r = 1.0;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace

TrivialityResult is_trivial(const SetSolution& s, const WeightSystem& d, double tol) {
    require_size(s, d);
    if (!verify_cocycle(s, d, tol)) throw WeightError("weights fail the cocycle condition");
    const int n = s.size();
    const int m = n * n;
    std::vector<Row> e(static_cast<size_t>(m), Row(static_cast<size_t>(n) + 1, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Row& row = e[static_cast<size_t>(x) * n + y];
            const auto [u, v] = s(x, y);
            ++row[x];
            ++row[y];
            --row[u];
            --row[v];
            row[n] = 1;
        }
    const Echelon ech = hermite_rows(std::move(e));

    TrivialityResult out;
    out.trivial = true;
    for (int i = ech.rank; i < m; ++i) {
        const double dev = std::abs(power_product(d.values(), ech.u[i]) - 1.0);
        out.kernel_residual = std::max(out.kernel_residual, dev);
        if (dev > tol) out.trivial = false;
    }
    if (!out.trivial) return out;

    std::vector<cplx> u(static_cast<size_t>(n) + 1, 1.0);
    for (int i = ech.rank - 1; i >= 0; --i) {
        const int p = ech.pivot_col[i];
        cplx rhs = power_product(d.values(), ech.u[i]);
        for (int j = p + 1; j <= n; ++j)
            if (ech.h[i][j]) rhs /= int_pow(u[j], ech.h[i][j]);
        const std::int64_t k = ech.h[i][p];
        u[p] = k == 1 ? rhs : std::pow(rhs, 1.0 / static_cast<double>(k));
    }
    TrivialityWitness w;
    w.alpha.assign(u.begin(), u.begin() + n);
    w.c = u[n];
    if (!witness_holds(s, d, w, std::max(tol, 1e-8)))
        throw WeightError("triviality witness failed to reproduce the weights");
    out.witness = std::move(w);
    return out;
}

bool lemma_trivial_check(const SetSolution& s, const WeightSystem& d, double tol) {
    require_size(s, d);
    if (!solution_properties(s).involutive) throw WeightError("product check needs an involutive solution");
    const int n = s.size();
    if (n == 0) return true;
    const auto [u0, v0] = s(0, 0);
    const cplx ref = d(0, 0) * d(u0, v0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto [u, v] = s(x, y);
            if (!close(d(x, y) * d(u, v), ref, tol)) return false;
        }
    return true;
}

// ---- constructions -----------------------------------------------------------

WeightSystem invariance_weights(const SetSolution& s, const WeightSystem& f, double tol) {
    require_size(s, f);
    const int n = s.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto [sxy, txy] = s(x, y);
            for (int z = 0; z < n; ++z) {
                const int syz = s.sigma(y, z);
                const int tzy = s.tau(z, y);
                const char* which = nullptr;
                if (!close(f(x, y), f(s.tau(syz, x), tzy), tol)) which = "f(x,y) = f(x^{ʸz}, y^z)";
                else if (!close(f(txy, z), f(x, syz), tol)) which = "f(x^y, z) = f(x, ʸz)";
                else if (!close(f(sxy, s.sigma(txy, z)), f(y, z), tol)) which = "f(ˣy, ^{x^y}z) = f(y, z)";
                if (which)
                    throw WeightError(std::string("invariance identity ") + which + " fails at (" +
                                      std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) +
                                      ")");
            }
        }
    return f;
}

WeightSystem orbit_weights(const SetSolution& s, const PartitionedSet& classes,
                           const std::vector<std::vector<cplx>>& alpha) {
    const int n = s.size();
    if (classes.n != n) throw WeightError("partition size does not match the solution");
    const auto cls = classes.class_of();
    for (int x = 0; x < n; ++x)
        if (cls[x] < 0) throw WeightError("partition does not cover element " + std::to_string(x));
    const size_t k = classes.classes.size();
    if (alpha.size() != k) throw WeightError("alpha must be a square table over the classes");
    for (const auto& row : alpha)
        if (row.size() != k) throw WeightError("alpha must be a square table over the classes");
    if (auto bad = partition_invariance_violation(s, classes))
        throw WeightError("partition is not invariant: r(" + std::to_string(bad->first) + "," +
                          std::to_string(bad->second) + ") leaves X_j × X_i");
    std::vector<cplx> d(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) d[static_cast<size_t>(x) * n + y] = alpha[cls[x]][cls[y]];
    return WeightSystem(n, std::move(d));
}

WeightSystem cyclic_g_weights(const std::vector<cplx>& g) {
    const int n = static_cast<int>(g.size());
    if (n < 1) throw WeightError("cyclic weights need n ≥ 1");
    std::vector<cplx> d(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[static_cast<size_t>(i) * n + j] = g[((i - j) % n + n) % n];
    return WeightSystem(n, std::move(d));
}

WeightSystem hura5_g_weights(const std::array<cplx, 4>& g, double tol) {
    if (!close(g[1], g[2], tol)) throw WeightError("hura5 weights need g(1,0) = g(0,1)");
    std::vector<cplx> d(16);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int m = 0; m < 2; ++m)
                for (int nn = 0; nn < 2; ++nn) {
                    const int a = (i + j + nn) % 2;
                    const int b = (m + j + nn) % 2;
                    d[static_cast<size_t>(2 * i + j) * 4 + (2 * m + nn)] = g[2 * a + b];
                }
    return WeightSystem(4, std::move(d));
}

BuiltinWeights parse_builtin_weights(const std::string& name) {
    if (name == "cyclic_g" || name == "cyclic") return BuiltinWeights::cyclic_g;
    if (name == "hura5_g" || name == "hura5") return BuiltinWeights::hura5_g;
    throw WeightError("unknown weight family '" + name + "'");
}

WeightSystem builtin_weights(BuiltinWeights kind, const std::vector<cplx>& g) {
    switch (kind) {
        case BuiltinWeights::cyclic_g:
            return cyclic_g_weights(g);
        case BuiltinWeights::hura5_g:
            if (g.size() != 4) throw WeightError("hura5 weights take g(0,0), g(0,1), g(1,0), g(1,1)");
            return hura5_g_weights({g[0], g[1], g[2], g[3]});
    }
    throw WeightError("unknown weight family");
}

WeightSystem lift_weights(const SetSolution& s, const Retraction& q, const WeightSystem& dq, double tol) {
    const int n = s.size();
    const int k = q.solution.size();
    if (dq.size() != k) throw WeightError("quotient weights do not match the quotient size");
    if (static_cast<int>(q.class_map.size()) != n) throw WeightError("class map does not cover the solution");
    std::vector<bool> hit(static_cast<size_t>(k), false);
    for (int c : q.class_map) {
        if (c < 0 || c >= k) throw WeightError("class map points outside the quotient");
        hit[c] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw WeightError("class map is not surjective");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto [u, v] = s(x, y);
            if (q.solution(q.class_map[x], q.class_map[y]) != Pair{q.class_map[u], q.class_map[v]})
                throw WeightError("class map is inconsistent with the quotient solution at (" +
                                  std::to_string(x) + "," + std::to_string(y) + ")");
        }
    if (!verify_cocycle(q.solution, dq, tol)) throw WeightError("quotient weights fail the cocycle condition");
    std::vector<cplx> d(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) d[static_cast<size_t>(x) * n + y] = dq(q.class_map[x], q.class_map[y]);
    return WeightSystem(n, std::move(d));
}

static std::vector<cplx> nontrivial_g(int m) {
    std::vector<cplx> g(static_cast<size_t>(m), 1.0);
    if (m > 1) g[1] = 2.0;
    return g;
}

WeightSystem construct_nontrivial_bvst(const SetSolution& s, const OneGeneratorSolution* presentation) {
    const auto props = solution_properties(s);
    if (!props.braid_ok || !props.involutive || !props.nondegenerate())
        throw WeightError("construction needs an involutive non-degenerate solution");
    if (!multipermutation_level(s)) throw WeightError("construction needs a solution of finite multipermutation level");

    WeightSystem out;
    const OrbitReport orb = orbits(s);
    if (!orb.indecomposable) {
        const size_t k = orb.orbits.classes.size();
        std::vector<std::vector<cplx>> alpha(k, std::vector<cplx>(k, 1.0));
        alpha[0][1] = 2.0;
        out = orbit_weights(s, orb.orbits, alpha);
    } else if (auto phi = find_cyclic_labeling(s)) {
        const int n = s.size();
        const WeightSystem base = cyclic_g_weights(nontrivial_g(n));
        std::vector<cplx> d(static_cast<size_t>(n) * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) d[static_cast<size_t>(x) * n + y] = base((*phi)[x], (*phi)[y]);
        out = WeightSystem(n, std::move(d));
    } else {
        if (!presentation)
            throw WeightError("indecomposable solution that is not cyclic needs its one-generator brace presentation");
        if (!(presentation->solution == s))
            throw WeightError("brace presentation does not produce this solution");
        const FiniteBrace& a = presentation->sub.brace;
        const NilpotencyChains ch = nilpotency_chains(a);
        if (!ch.left.vanishes || !ch.right.vanishes)
            throw WeightError("presentation brace must be left and right nilpotent");
        const BraceSubset all = whole(a);
        const BraceSubset a2 = star_span(a, all, all);
        const BraceSubset ideal = subset_sum(a, star_span(a, all, a2), star_span(a, a2, all));
        const Retraction q = i_retraction(a, ideal, Restriction{s, presentation->x_set.members});
        const auto qphi = find_cyclic_labeling(q.solution);
        if (!qphi) throw WeightError("I-retraction is not a cyclic solution");
        const int m = q.solution.size();
        const WeightSystem base = cyclic_g_weights(nontrivial_g(m));
        std::vector<cplx> dq(static_cast<size_t>(m) * m);
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) dq[static_cast<size_t>(x) * m + y] = base((*qphi)[x], (*qphi)[y]);
        out = lift_weights(s, q, WeightSystem(m, std::move(dq)));
    }
    if (!verify_cocycle(s, out)) throw WeightError("constructed weights fail the cocycle condition");
    if (is_trivial(s, out).trivial) throw WeightError("constructed weights are trivial; hypotheses not met");
    return out;
}

}  // namespace ybe
