#pragma once

// Dense complex matrices and the numerical kernels used to check R-matrices.
//
// Pair indices are lexicographic: (i, j) sits at row/column i * n + j.

#include <complex>
#include <stdexcept>
#include <vector>

namespace ybe {

using cplx = std::complex<double>;

/// Entries below this modulus count as structural zeros.
inline constexpr double kSupportEps = 1e-12;
inline constexpr double kDefaultTol = 1e-9;

class MatrixError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
    CMatrix(int rows, int cols, std::vector<cplx> data);

    static CMatrix identity(int n);
    static CMatrix from_rows(const std::vector<std::vector<cplx>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    cplx& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const std::vector<cplx>& data() const { return data_; }

    CMatrix adjoint() const;
    CMatrix transpose() const;
    CMatrix conj() const;

    bool operator==(const CMatrix&) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> data_;
};

/// Skips zero entries of the left factor, so monomial products stay cheap.
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, const CMatrix& a);

double max_abs(const CMatrix& a);
/// max |a_ij - b_ij|; throws on shape mismatch.
double max_abs_diff(const CMatrix& a, const CMatrix& b);
bool approx_equal(const CMatrix& a, const CMatrix& b, double tol = kDefaultTol);

CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix hadamard(const CMatrix& a, const CMatrix& b);

struct QybeResult {
    bool ok = false;
    double residual = 0.0;
};

/// (X⊗I)(I⊗X)(X⊗I) against (I⊗X)(X⊗I)(I⊗X). Throws unless X is n²×n².
QybeResult qybe_check(const CMatrix& x, int n, double tol = kDefaultTol);
/// Infers n from the dimension; throws if it is not a perfect square.
QybeResult qybe_check(const CMatrix& x, double tol = kDefaultTol);
int base_dimension(const CMatrix& x);

struct Nonsingularity {
    bool nonsingular = false;
    double det_abs = 0.0;
    double min_pivot = 0.0;
};
/// Partial-pivot elimination; singular once a pivot falls to `tol` or below.
Nonsingularity nonsingularity(const CMatrix& a, double tol = kDefaultTol);

bool is_r_matrix(const CMatrix& x, int n, double tol = kDefaultTol);

/// Gauss-Jordan with partial pivoting. Throws MatrixError if singular.
CMatrix inverse(const CMatrix& a);

/// C²⊗DCD⊗D = C⊗CDC⊗D².
bool kron_pair_criterion(const CMatrix& c, const CMatrix& d, double tol = kDefaultTol);

struct HermitianEigen {
    std::vector<double> values;  // descending
    CMatrix vectors;             // column k pairs with values[k]
    int sweeps = 0;
    double off_norm = 0.0;
};

/// Cyclic complex Jacobi. Throws MatrixError (with the residual) if 100 sweeps
/// do not bring the off-diagonal norm below 1e-12 relative to the Frobenius norm.
HermitianEigen hermitian_eigen(const CMatrix& h);

/// Descending square roots of the eigenvalues of A*A.
std::vector<double> singular_values(const CMatrix& a);

CMatrix pinv(const CMatrix& a);
/// All four Penrose identities.
bool penrose_check(const CMatrix& a, const CMatrix& ap, double tol = kDefaultTol);

bool is_unitary(const CMatrix& a, double tol = kDefaultTol);

/// (P⊗P)·X·(P⊗P)⁻¹. Throws MatrixError if P is singular.
CMatrix conjugate_similarity(const CMatrix& p, const CMatrix& x);

/// R(x) = I + αxA; compares both sides of the parameter-dependent equation
/// coefficient by coefficient as polynomials in (x, y).
/// Throws MatrixError unless A is n²×n² with A² = I.
bool parametrized_ybe_check(const CMatrix& a, int n, cplx alpha, double tol = kDefaultTol);

}  // namespace ybe
