#include "ybe/rmatrix.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace ybe {

CMatrix monomial_from_bvst(const SetSolution& s, const WeightSystem& d) {
    const int n = s.size();
    if (d.size() != n) throw MatrixError("weights and solution differ in size");
    CMatrix m(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto [k, l] = s(i, j);
            m(k * n + l, i * n + j) = d(i, j);
        }
    return m;
}

CMatrix solution_matrix(const SetSolution& s) {
    return monomial_from_bvst(s, WeightSystem::constant(s.size(), 1.0));
}

MonomialDecode decode_monomial(const CMatrix& a) {
    MonomialDecode out;
    int n = 0;
    try {
        n = base_dimension(a);
    } catch (const MatrixError& e) {
        out.reason = e.what();
        return out;
    }
    const int m = a.rows();
    MonomialPattern p;
    p.n = n;
    p.perm.assign(static_cast<size_t>(m), -1);
    p.values.assign(static_cast<size_t>(m), 0.0);
    std::vector<int> row_owner(static_cast<size_t>(m), -1);
    for (int c = 0; c < m; ++c) {
        int count = 0;
        for (int r = 0; r < m; ++r) {
            if (std::abs(a(r, c)) <= kSupportEps) continue;
            ++count;
            p.perm[c] = r;
            p.values[c] = a(r, c);
        }
        if (count != 1) {
            out.offending_column = c;
            out.reason = "column " + std::to_string(c) + " has " + std::to_string(count) + " nonzero entries";
            return out;
        }
        if (row_owner[p.perm[c]] >= 0) {
            out.offending_column = c;
            out.reason = "row " + std::to_string(p.perm[c]) + " is hit by columns " +
                         std::to_string(row_owner[p.perm[c]]) + " and " + std::to_string(c);
            return out;
        }
        row_owner[p.perm[c]] = c;
    }
    out.pattern = std::move(p);
    return out;
}

SetSolution pattern_solution(const MonomialPattern& p) {
    const int n = p.n;
    std::vector<Pair> t(static_cast<size_t>(n) * n);
    for (int c = 0; c < n * n; ++c) t[c] = {p.perm[c] / n, p.perm[c] % n};
    return SetSolution(n, std::move(t));
}

WeightSystem pattern_weights(const MonomialPattern& p) { return WeightSystem(p.n, p.values); }

InvolutiveMatrixReport classify_involutive_matrix(const CMatrix& a, int n) {
    if (n < 1 || !a.square() || a.rows() != n * n) throw MatrixError("classification needs an n²×n² matrix");
    const int m = n * n;
    std::vector<int> ones_in_row(static_cast<size_t>(m), 0), ones_in_col(static_cast<size_t>(m), 0);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            const cplx z = a(r, c);
            if (z == cplx{}) continue;
            if (z != cplx{1.0, 0.0})
                throw MatrixError("entry (" + std::to_string(r) + "," + std::to_string(c) + ") is not 0 or 1");
            ++ones_in_row[r];
            ++ones_in_col[c];
        }
    InvolutiveMatrixReport rep;
    rep.permutation = true;
    for (int k = 0; k < m; ++k)
        if (ones_in_row[k] != 1 || ones_in_col[k] != 1) rep.permutation = false;
    rep.symmetric = a == a.transpose();
    rep.squares_to_identity = a * a == CMatrix::identity(m);
    rep.block_condition = true;
    for (int br = 0; br < n && rep.block_condition; ++br)
        for (int bc = 0; bc < n && rep.block_condition; ++bc) {
            int ones = 0;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    if (a(br * n + r, bc * n + c) != cplx{}) ++ones;
            if (ones != 1) rep.block_condition = false;
        }
    if (rep.permutation && rep.symmetric && rep.block_condition) {
        auto dec = decode_monomial(a);
        rep.solution = pattern_solution(*dec.pattern);
        rep.braid_ok = verify_set_ybe(*rep.solution);
    }
    return rep;
}

static MonomialPattern require_permutation_support(const CMatrix& a, const char* what) {
    auto dec = decode_monomial(a);
    if (!dec.pattern) throw MatrixError(std::string(what) + ": not monomial (" + dec.reason + ")");
    return *dec.pattern;
}

CMatrix hadamard_rmatrix(const CMatrix& a, const CMatrix& b, double tol) {
    const auto pa = require_permutation_support(a, "first factor");
    const auto pb = require_permutation_support(b, "second factor");
    if (pa.n != pb.n || pa.perm != pb.perm) throw MatrixError("factors have different supports");
    if (!is_r_matrix(a, pa.n, tol)) throw MatrixError("first factor is not an R-matrix");
    if (!is_r_matrix(b, pb.n, tol)) throw MatrixError("second factor is not an R-matrix");
    CMatrix h = hadamard(a, b);
    const auto q = qybe_check(h, pa.n, tol * std::max(1.0, max_abs(h) * max_abs(h) * max_abs(h)));
    if (!q.ok) throw MatrixError("Hadamard product failed the QYBE, residual " + std::to_string(q.residual));
    return h;
}

// ---- multiplicative maps ---------------------------------------------------

cplx MultiplicativeMap::operator()(cplx z) const {
    if (z == cplx{}) return z;
    const cplx base = conjugate ? std::conj(z) : z;
    if (power == 0) return 1.0;
    cplx r = 1.0;
    const cplx b = power < 0 ? 1.0 / base : base;
    for (int k = 0; k < std::abs(power); ++k) r *= b;
    return r;
}

MultiplicativeMap MultiplicativeMap::after(const MultiplicativeMap& inner) const {
    // conj commutes with powers, so the family is closed under composition
    return {power * inner.power, conjugate != inner.conjugate};
}

MultiplicativeMap MultiplicativeMap::parse(const std::string& spec) {
    MultiplicativeMap g;
    std::stringstream ss(spec);
    std::string step;
    while (std::getline(ss, step, ',')) {
        MultiplicativeMap s;
        if (step == "id" || step.empty()) {
        } else if (step == "conj") {
            s.conjugate = true;
        } else if (step.rfind("pow:", 0) == 0) {
            try {
                size_t used = 0;
                s.power = std::stoi(step.substr(4), &used);
                if (used != step.size() - 4) throw std::invalid_argument(step);
            } catch (const std::exception&) {
                throw MatrixError("bad power in map step '" + step + "'");
            }
        } else {
            throw MatrixError("unknown map step '" + step + "' (expected id, conj or pow:K)");
        }
        g = s.after(g);
    }
    return g;
}

std::string MultiplicativeMap::str() const {
    std::string s = conjugate ? "conj" : "id";
    if (power != 1) s += ",pow:" + std::to_string(power);
    return s;
}

CMatrix apply_multiplicative_map(const CMatrix& a, const MultiplicativeMap& g) {
    require_permutation_support(a, "multiplicative map");
    CMatrix out = a;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (std::abs(a(r, c)) > kSupportEps) out(r, c) = g(a(r, c));
            else out(r, c) = 0.0;
    return out;
}

// ---- worked examples -------------------------------------------------------

CMatrix a_of_d(int n, const std::vector<cplx>& d) {
    if (n < 1 || static_cast<int>(d.size()) != n * n) throw MatrixError("A(d) needs n² values");
    for (const auto& z : d)
        if (std::abs(z) <= kSupportEps) throw MatrixError("A(d) needs nonzero d");
    CMatrix m(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(j * n + i, i * n + j) = d[j * n + i];
    return m;
}

CMatrix flip_permutation(int n) { return a_of_d(n, std::vector<cplx>(static_cast<size_t>(n) * n, 1.0)); }

CMatrix householder_a1(int n) {
    if (n < 1) throw MatrixError("Householder example needs n ≥ 1");
    const int m = n * n;
    CMatrix h = CMatrix::identity(m);
    const double alpha = 2.0 / m;
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) h(r, c) -= alpha;
    return h * flip_permutation(n);
}

CMatrix vandermonde_p(int n) {
    if (n < 1) throw MatrixError("Vandermonde example needs n ≥ 1");
    CMatrix p(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int e = ((n - j) * i) % n;
            p(i, j) = e == 0 ? cplx{1.0, 0.0} : std::polar(1.0, 2.0 * std::numbers::pi * e / n);
        }
    return p;
}

CMatrix alpha_b_beta_e(int n, cplx alpha, cplx beta) {
    const CMatrix b = solution_matrix(cyclic_solution(n));
    CMatrix out(b.rows(), b.cols());
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) out(r, c) = alpha * b(r, c) + beta;
    return out;
}

CMatrix idempotent_c() {
    return CMatrix::from_rows({{1, 0, 1, 1}, {0, 1, 1, 2}, {0, 0, 0, 0}, {0, 0, 0, 0}});
}

CMatrix counterexample_x() {
    return CMatrix::from_rows({{1, 0, 0, 0}, {0, -3, 2, 0}, {0, 2, 0, 0}, {0, 0, 0, 1}});
}

ExampleKind parse_example_kind(const std::string& name) {
    if (name == "A_of_d") return ExampleKind::a_of_d;
    if (name == "householder_A1") return ExampleKind::householder_a1;
    if (name == "vandermonde_P") return ExampleKind::vandermonde_p;
    if (name == "alphaB_betaE") return ExampleKind::alpha_b_beta_e;
    if (name == "idempotent_C") return ExampleKind::idempotent_c;
    if (name == "counterexample_X") return ExampleKind::counterexample_x;
    throw MatrixError("unknown example kind '" + name + "'");
}

CMatrix build_example(ExampleKind kind, const ExampleParams& p) {
    switch (kind) {
        case ExampleKind::a_of_d: {
            std::vector<cplx> d = p.d;
            if (d.empty())
                for (int k = p.n * p.n; k >= 1; --k) d.emplace_back(k);
            return a_of_d(p.n, d);
        }
        case ExampleKind::householder_a1:
            return householder_a1(p.n);
        case ExampleKind::vandermonde_p:
            return vandermonde_p(p.n);
        case ExampleKind::alpha_b_beta_e:
            return alpha_b_beta_e(p.n, p.alpha, p.beta);
        case ExampleKind::idempotent_c:
            return idempotent_c();
        case ExampleKind::counterexample_x:
            return counterexample_x();
    }
    throw MatrixError("unknown example kind");
}

CMatrix named_example(const std::string& name) {
    if (name == "A1") return householder_a1(3);
    if (name == "A2") return alpha_b_beta_e(3, 1.0, -2.0 / 9.0);
    if (name == "Ad") return build_example(ExampleKind::a_of_d);
    if (name == "P") return vandermonde_p(3);
    if (name == "C") return idempotent_c();
    if (name == "X") return counterexample_x();
    if (name == "XoX") return hadamard(counterexample_x(), counterexample_x());
    if (name == "Cpinv")
        return (1.0 / 3.0) * CMatrix::from_rows({{2, -1, 0, 0}, {-1, 1, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}});
    throw MatrixError("unknown example '" + name + "'");
}

std::vector<std::string> named_examples() { return {"A1", "A2", "Ad", "P", "C", "X", "XoX", "Cpinv"}; }

}  // namespace ybe
