#include "ybe/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <utility>

namespace ybe {

CMatrix::CMatrix(int rows, int cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows < 0 || cols < 0 || data_.size() != static_cast<size_t>(rows) * cols)
        throw MatrixError("matrix data length does not match " + std::to_string(rows) + "x" +
                          std::to_string(cols));
}

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::from_rows(const std::vector<std::vector<cplx>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    CMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw MatrixError("ragged matrix rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

CMatrix CMatrix::transpose() const {
    CMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

CMatrix CMatrix::conj() const {
    CMatrix m = *this;
    for (auto& z : m.data_) z = std::conj(z);
    return m;
}

static void require_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw MatrixError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw MatrixError("product: inner dimensions differ");
    CMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "sum");
    CMatrix c = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "difference");
    CMatrix c = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
    return c;
}

CMatrix operator*(cplx s, const CMatrix& a) {
    CMatrix c = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) *= s;
    return c;
}

double max_abs(const CMatrix& a) {
    double m = 0.0;
    for (const auto& z : a.data()) m = std::max(m, std::abs(z));
    return m;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "comparison");
    double m = 0.0;
    for (size_t k = 0; k < a.data().size(); ++k) m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
    return m;
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return max_abs_diff(a, b) <= tol;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

CMatrix hadamard(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "hadamard");
    CMatrix c = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) *= b(i, j);
    return c;
}

int base_dimension(const CMatrix& x) {
    if (!x.square()) throw MatrixError("matrix is not square");
    int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(x.rows()))));
    if (n * n != x.rows())
        throw MatrixError("dimension " + std::to_string(x.rows()) + " is not a perfect square");
    return n;
}

QybeResult qybe_check(const CMatrix& x, int n, double tol) {
    if (n < 1 || !x.square() || x.rows() != n * n)
        throw MatrixError("QYBE needs an n²×n² matrix with n = " + std::to_string(n) + ", got " +
                          std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
    const CMatrix id = CMatrix::identity(n);
    const CMatrix x1 = kron(x, id);
    const CMatrix x2 = kron(id, x);
    const CMatrix lhs = x1 * x2 * x1;
    const CMatrix rhs = x2 * x1 * x2;
    QybeResult r;
    r.residual = max_abs_diff(lhs, rhs);
    r.ok = r.residual <= tol;
    return r;
}

QybeResult qybe_check(const CMatrix& x, double tol) { return qybe_check(x, base_dimension(x), tol); }

Nonsingularity nonsingularity(const CMatrix& a, double tol) {
    if (!a.square()) throw MatrixError("nonsingularity test needs a square matrix");
    CMatrix m = a;
    const int n = m.rows();
    Nonsingularity out;
    out.nonsingular = true;
    out.det_abs = 1.0;
    out.min_pivot = n ? std::numeric_limits<double>::infinity() : 0.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
        const double mag = std::abs(m(piv, k));
        out.min_pivot = std::min(out.min_pivot, mag);
        if (mag <= tol) {
            out.nonsingular = false;
            out.det_abs = 0.0;
            return out;
        }
        if (piv != k)
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
        out.det_abs *= mag;
        for (int i = k + 1; i < n; ++i) {
            const cplx f = m(i, k) / m(k, k);
            if (f == cplx{}) continue;
            for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return out;
}

bool is_r_matrix(const CMatrix& x, int n, double tol) {
    return qybe_check(x, n, tol).ok && nonsingularity(x, tol).nonsingular;
}

CMatrix inverse(const CMatrix& a) {
    if (!a.square()) throw MatrixError("inverse needs a square matrix");
    const int n = a.rows();
    CMatrix m = a;
    CMatrix inv = CMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
        if (std::abs(m(piv, k)) <= kSupportEps) throw MatrixError("matrix is singular");
        if (piv != k)
            for (int j = 0; j < n; ++j) {
                std::swap(m(k, j), m(piv, j));
                std::swap(inv(k, j), inv(piv, j));
            }
        const cplx p = m(k, k);
        for (int j = 0; j < n; ++j) {
            m(k, j) /= p;
            inv(k, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            const cplx f = m(i, k);
            if (f == cplx{}) continue;
            for (int j = 0; j < n; ++j) {
                m(i, j) -= f * m(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

bool kron_pair_criterion(const CMatrix& c, const CMatrix& d, double tol) {
    if (!c.square() || !d.square() || c.rows() != d.rows())
        throw MatrixError("Kronecker pair criterion needs square matrices of equal size");
    const CMatrix lhs = kron(kron(c * c, d * c * d), d);
    const CMatrix rhs = kron(kron(c, c * d * c), d * d);
    return max_abs_diff(lhs, rhs) <= tol;
}

// ---- Jacobi ---------------------------------------------------------------

static double off_diagonal_norm(const CMatrix& h) {
    double s = 0.0;
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j)
            if (i != j) s += std::norm(h(i, j));
    return std::sqrt(s);
}

static double frobenius(const CMatrix& h) {
    double s = 0.0;
    for (const auto& z : h.data()) s += std::norm(z);
    return std::sqrt(s);
}

HermitianEigen hermitian_eigen(const CMatrix& input) {
    if (!input.square()) throw MatrixError("eigen decomposition needs a square matrix");
    const int n = input.rows();
    CMatrix h = input;
    CMatrix v = CMatrix::identity(n);
    const double scale = std::max(1.0, frobenius(h));
    const double threshold = 1e-12 * scale;
    constexpr int kMaxSweeps = 100;
    if (max_abs_diff(h, h.adjoint()) > 1e-9 * scale) throw MatrixError("eigen decomposition needs a Hermitian matrix");

    HermitianEigen out;
    double off = off_diagonal_norm(h);
    while (off > threshold) {
        if (out.sweeps == kMaxSweeps)
            throw MatrixError("Jacobi did not converge after 100 sweeps; off-diagonal residual " +
                              std::to_string(off));
        ++out.sweeps;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const cplx b = h(p, q);
                const double mag = std::abs(b);
                if (mag <= 1e-300) continue;
                const cplx phase = b / mag;
                const double a = h(p, p).real();
                const double d = h(q, q).real();
                const double tau = (d - a) / (2.0 * mag);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx jpq = s * phase;
                const cplx jqp = -s * std::conj(phase);
                // H <- H J, V <- V J (columns p, q)
                for (int k = 0; k < n; ++k) {
                    const cplx hkp = h(k, p), hkq = h(k, q);
                    h(k, p) = hkp * c + hkq * jqp;
                    h(k, q) = hkp * jpq + hkq * c;
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * c + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * c;
                }
                // H <- J* H (rows p, q)
                for (int k = 0; k < n; ++k) {
                    const cplx hpk = h(p, k), hqk = h(q, k);
                    h(p, k) = c * hpk + std::conj(jqp) * hqk;
                    h(q, k) = std::conj(jpq) * hpk + c * hqk;
                }
                h(p, q) = h(q, p) = 0.0;
                h(p, p) = h(p, p).real();
                h(q, q) = h(q, q).real();
            }
        off = off_diagonal_norm(h);
    }
    out.off_norm = off;

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return h(i, i).real() > h(j, j).real(); });
    out.values.reserve(static_cast<size_t>(n));
    out.vectors = CMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        out.values.push_back(h(order[k], order[k]).real());
        for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

std::vector<double> singular_values(const CMatrix& a) {
    const HermitianEigen e = hermitian_eigen(a.adjoint() * a);
    std::vector<double> sv;
    sv.reserve(e.values.size());
    for (double l : e.values) sv.push_back(std::sqrt(std::max(l, 0.0)));
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

CMatrix pinv(const CMatrix& a) {
    const CMatrix ah = a.adjoint();
    const HermitianEigen e = hermitian_eigen(ah * a);
    const int n = a.cols();
    const double lmax = e.values.empty() ? 0.0 : e.values.front();
    // Σ v_i v_i* / λ_i over the numerically nonzero spectrum, then times A*.
    CMatrix g(n, n);
    for (int k = 0; k < n; ++k) {
        const double l = e.values[k];
        if (lmax <= 0.0 || l <= 1e-12 * lmax) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) += e.vectors(i, k) * std::conj(e.vectors(j, k)) / l;
    }
    return g * ah;
}

bool penrose_check(const CMatrix& a, const CMatrix& ap, double tol) {
    if (a.rows() != ap.cols() || a.cols() != ap.rows()) return false;
    const CMatrix aap = a * ap;
    const CMatrix apa = ap * a;
    return max_abs_diff(aap * a, a) <= tol && max_abs_diff(apa * ap, ap) <= tol &&
           max_abs_diff(apa, apa.adjoint()) <= tol && max_abs_diff(aap, aap.adjoint()) <= tol;
}

bool is_unitary(const CMatrix& a, double tol) {
    if (!a.square()) throw MatrixError("unitarity test needs a square matrix");
    return max_abs_diff(a.adjoint() * a, CMatrix::identity(a.rows())) <= tol;
}

CMatrix conjugate_similarity(const CMatrix& p, const CMatrix& x) {
    if (!p.square()) throw MatrixError("similarity matrix must be square");
    const int n = p.rows();
    if (!x.square() || x.rows() != n * n)
        throw MatrixError("similarity: X must be " + std::to_string(n * n) + "x" + std::to_string(n * n));
    if (!nonsingularity(p, kSupportEps).nonsingular) throw MatrixError("similarity matrix is singular");
    const CMatrix pp = kron(p, p);
    return pp * x * inverse(pp);
}

// ---- parametrized equation ------------------------------------------------

namespace {

// Polynomial in (x, y) with matrix coefficients, keyed by exponents.
using Poly = std::map<std::pair<int, int>, CMatrix>;

Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ma] : a)
        for (const auto& [eb, mb] : b) {
            const std::pair<int, int> e{ea.first + eb.first, ea.second + eb.second};
            CMatrix prod = ma * mb;
            auto it = out.find(e);
            if (it == out.end()) out.emplace(e, std::move(prod));
            else it->second = it->second + prod;
        }
    return out;
}

// I + α(cx·x + cy·y)·M
Poly linear_factor(const CMatrix& m, cplx alpha, int cx, int cy) {
    Poly p;
    p.emplace(std::pair{0, 0}, CMatrix::identity(m.rows()));
    if (cx) p.emplace(std::pair{1, 0}, (alpha * static_cast<double>(cx)) * m);
    if (cy) p.emplace(std::pair{0, 1}, (alpha * static_cast<double>(cy)) * m);
    return p;
}

}  // namespace

bool parametrized_ybe_check(const CMatrix& a, int n, cplx alpha, double tol) {
    if (n < 1 || !a.square() || a.rows() != n * n)
        throw MatrixError("parametrized check needs an n²×n² matrix");
    if (max_abs_diff(a * a, CMatrix::identity(a.rows())) > tol)
        throw MatrixError("parametrized check requires A² = I");
    const CMatrix id = CMatrix::identity(n);
    const CMatrix a1 = kron(a, id);
    const CMatrix a2 = kron(id, a);
    // (R(x)⊗I)(I⊗R(x+y))(R(y)⊗I) vs (I⊗R(y))(R(x+y)⊗I)(I⊗R(x))
    const Poly lhs = multiply(multiply(linear_factor(a1, alpha, 1, 0), linear_factor(a2, alpha, 1, 1)),
                              linear_factor(a1, alpha, 0, 1));
    const Poly rhs = multiply(multiply(linear_factor(a2, alpha, 0, 1), linear_factor(a1, alpha, 1, 1)),
                              linear_factor(a2, alpha, 1, 0));
    const CMatrix zero(a1.rows(), a1.cols());
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) {
            auto l = lhs.find({i, j});
            auto r = rhs.find({i, j});
            const CMatrix& lm = l == lhs.end() ? zero : l->second;
            const CMatrix& rm = r == rhs.end() ? zero : r->second;
            if (max_abs_diff(lm, rm) > tol) return false;
        }
    return true;
}

}  // namespace ybe
