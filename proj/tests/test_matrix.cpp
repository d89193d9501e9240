#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "ybe/matrix.hpp"

using namespace ybe;

namespace {

CMatrix random_matrix(int r, int c, double spread = 1.0) {
    std::uniform_real_distribution<double> u(-spread, spread);
    CMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = {u(corpus::rng()), u(corpus::rng())};
    return m;
}

CMatrix flip(int n) {
    CMatrix p(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p(j * n + i, i * n + j) = 1.0;
    return p;
}

// naive triple loop, no zero skipping
CMatrix naive_mul(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            for (int k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
    return c;
}

// S·diag(1,…,1,0,…)·S⁻¹ with a random rank
CMatrix random_idempotent(int n) {
    CMatrix s = random_matrix(n, n), diag(n, n);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int i = 0; i < n; ++i) diag(i, i) = bit(corpus::rng());
    return s * diag * inverse(s);
}

const CMatrix kIdem = CMatrix::from_rows({{1, 1}, {0, 0}});

}  // namespace

TEST_CASE("arithmetic") {
    const auto a = random_matrix(3, 4), b = random_matrix(4, 2);
    CHECK(max_abs_diff(a * b, naive_mul(a, b)) < 1e-14);
    CHECK(approx_equal(CMatrix::identity(3) * a, a));
    CHECK(max_abs_diff(a.adjoint().adjoint(), a) == 0.0);
    CHECK(max_abs_diff(a.transpose().conj(), a.adjoint()) == 0.0);
    CHECK(max_abs_diff((a + a) - cplx(2.0) * a, CMatrix(3, 4)) < 1e-15);
    CHECK_THROWS_AS(a * a, MatrixError);
    CHECK_THROWS_AS(max_abs_diff(a, b), MatrixError);
    CHECK_THROWS_AS(CMatrix(2, 2, {1.0, 2.0}), MatrixError);
}

TEST_CASE("Kronecker and Hadamard products") {
    const auto a = random_matrix(2, 3), b = random_matrix(3, 2);
    const auto k = kron(a, b);
    CHECK(k.rows() == 6);
    CHECK(k.cols() == 6);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 2; ++q) CHECK(k(i * 3 + p, j * 2 + q) == a(i, j) * b(p, q));
    // mixed product
    const auto c = random_matrix(3, 2), d = random_matrix(2, 3);
    CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);

    const auto h = hadamard(a, a);
    CHECK(h(1, 2) == a(1, 2) * a(1, 2));
    CHECK_THROWS_AS(hadamard(a, b), MatrixError);
}

TEST_CASE("QYBE check") {
    CHECK(qybe_check(CMatrix::identity(4)).ok);
    CHECK(qybe_check(flip(3)).ok);
    CHECK(qybe_check(flip(2), 2).residual == 0.0);
    CHECK(base_dimension(CMatrix::identity(9)) == 3);
    CHECK_THROWS_AS(qybe_check(CMatrix::identity(5)), MatrixError);
    CHECK_THROWS_AS(qybe_check(CMatrix::identity(4), 3), MatrixError);
    // a generic matrix is not a solution
    const auto g = random_matrix(4, 4);
    const auto res = qybe_check(g);
    CHECK_FALSE(res.ok);
    CHECK(res.residual > 1e-3);
}

TEST_CASE("nonsingularity and inverse") {
    CHECK(nonsingularity(CMatrix::identity(4)).nonsingular);
    CHECK(nonsingularity(CMatrix::identity(4)).det_abs == doctest::Approx(1.0));
    const auto x = kron(kIdem, CMatrix::identity(2));
    CHECK(qybe_check(x).ok);
    CHECK_FALSE(nonsingularity(x).nonsingular);
    CHECK_FALSE(is_r_matrix(x, 2));
    CHECK(is_r_matrix(CMatrix::identity(4), 2));
    CHECK(is_r_matrix(flip(3), 3));
    CHECK_THROWS_AS(inverse(x), MatrixError);

    const auto a = random_matrix(5, 5);
    CHECK(max_abs_diff(a * inverse(a), CMatrix::identity(5)) < 1e-10);
    const auto d = CMatrix::from_rows({{2, 0}, {0, 3}});
    CHECK(nonsingularity(d).det_abs == doctest::Approx(6.0));
}

TEST_CASE("Kronecker pair criterion agrees with the QYBE") {
    CHECK(kron_pair_criterion(kIdem, CMatrix::identity(2)));
    const auto c4 = CMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 0}});
    CHECK(kron_pair_criterion(c4, CMatrix::identity(4)));
    CHECK_THROWS_AS(kron_pair_criterion(kIdem, CMatrix::identity(3)), MatrixError);

    int agree = 0, positive = 0;
    std::uniform_int_distribution<int> pick(0, 3);
    for (int t = 0; t < 100; ++t) {
        const int n = t % 2 ? 3 : 2;
        // mix generic pairs with ones that satisfy the criterion
        CMatrix c = random_matrix(n, n), d = random_matrix(n, n);
        switch (pick(corpus::rng())) {
            case 0: c = random_idempotent(n), d = CMatrix::identity(n); break;
            case 1: c = CMatrix::identity(n), d = random_idempotent(n); break;
            case 2: c = cplx(0.5, 1.0) * CMatrix::identity(n), d = cplx(2.0) * CMatrix::identity(n); break;
            default: break;
        }
        // kron(C, D) is n²×n², base dimension n
        const bool crit = kron_pair_criterion(c, d, 1e-8);
        agree += crit == qybe_check(kron(c, d), n, 1e-8).ok;
        positive += crit;
    }
    CHECK(agree == 100);
    CHECK(positive > 10);
}

TEST_CASE("Hermitian eigensolver") {
    const auto a = random_matrix(6, 6);
    const auto h = a.adjoint() * a;
    const auto e = hermitian_eigen(h);
    REQUIRE(e.values.size() == 6);
    CHECK(std::is_sorted(e.values.rbegin(), e.values.rend()));
    CHECK(e.sweeps <= 100);
    // H v = λ v and V unitary
    CHECK(is_unitary(e.vectors, 1e-10));
    for (int k = 0; k < 6; ++k)
        for (int i = 0; i < 6; ++i) {
            cplx hv = 0;
            for (int j = 0; j < 6; ++j) hv += h(i, j) * e.vectors(j, k);
            CHECK(std::abs(hv - e.values[k] * e.vectors(i, k)) < 1e-10);
        }
    double trace = 0;
    for (int i = 0; i < 6; ++i) trace += h(i, i).real();
    double sum = 0;
    for (double v : e.values) sum += v;
    CHECK(sum == doctest::Approx(trace));

    CHECK_THROWS_AS(hermitian_eigen(random_matrix(3, 3)), MatrixError);  // not Hermitian
}

TEST_CASE("singular values") {
    const auto s = singular_values(CMatrix::identity(4));
    for (double v : s) CHECK(v == doctest::Approx(1.0));
    const auto d = CMatrix::from_rows({{0, 3}, {cplx(0, -5), 0}});
    const auto sv = singular_values(d);
    CHECK(sv[0] == doctest::Approx(5.0));
    CHECK(sv[1] == doctest::Approx(3.0));
    const auto rect = singular_values(CMatrix::from_rows({{3, 0, 0}, {0, 4, 0}}));
    CHECK(rect.front() == doctest::Approx(4.0));
}

TEST_CASE("pseudo-inverse") {
    const auto a = random_matrix(4, 4);
    CHECK(max_abs_diff(pinv(a), inverse(a)) < 1e-9);
    CHECK(penrose_check(a, pinv(a)));
    CHECK_FALSE(penrose_check(a, a));

    // rank one: u v*/|u|²|v|²
    const auto u = random_matrix(3, 1), v = random_matrix(2, 1);
    const auto r1 = u * v.adjoint();
    const auto p = pinv(r1);
    CHECK(p.rows() == 2);
    CHECK(penrose_check(r1, p));
    CHECK(max_abs(pinv(CMatrix(2, 3))) == 0.0);
}

TEST_CASE("unitarity") {
    CHECK(is_unitary(CMatrix::identity(3)));
    CHECK(is_unitary(flip(3)));
    CHECK_FALSE(is_unitary(cplx(2.0) * CMatrix::identity(3)));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(is_unitary(CMatrix::from_rows({{s, s}, {cplx(0, s), cplx(0, -s)}})));
}

TEST_CASE("similarity preserves the QYBE") {
    const auto x = flip(2);
    CHECK(approx_equal(conjugate_similarity(CMatrix::identity(2), x), x));
    const auto p = random_matrix(2, 2);
    const auto y = conjugate_similarity(p, x);
    CHECK(qybe_check(y).ok);
    // undoing with P⁻¹ recovers X
    CHECK(max_abs_diff(conjugate_similarity(inverse(p), y), x) < 1e-10);
    CHECK_THROWS_AS(conjugate_similarity(kIdem, x), MatrixError);
}

TEST_CASE("parametrized Yang-Baxter equation") {
    CHECK(parametrized_ybe_check(flip(2), 2, 1.0));
    CHECK(parametrized_ybe_check(flip(3), 3, cplx(0.3, -2.0)));
    CHECK(parametrized_ybe_check(flip(2), 2, 0.0));
    CHECK(parametrized_ybe_check(CMatrix::identity(4), 2, 1.0));
    CHECK_THROWS_AS(parametrized_ybe_check(kron(kIdem, CMatrix::identity(2)), 2, 1.0), MatrixError);

    // -flip squares to I and satisfies the QYBE too
    CHECK(parametrized_ybe_check(cplx(-1.0) * flip(2), 2, 1.0));
    // an involution that is not a braid solution fails
    CMatrix swap_first(4, 4);
    swap_first(0, 1) = swap_first(1, 0) = swap_first(2, 2) = swap_first(3, 3) = 1.0;
    CHECK_FALSE(qybe_check(swap_first).ok);
    CHECK_FALSE(parametrized_ybe_check(swap_first, 2, 1.0));
}
