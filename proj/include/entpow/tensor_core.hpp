#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace entpow {

using cd = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Bipartition of a dim_A * dim_B composite space. The composite index is
// (a, b) -> a * dim_B + b, i.e. the A factor is the more significant one.
// Only equal halves (dim_A == dim_B == 2^(L/2)) are used here.
struct Bipartition {
    Eigen::Index dim_A = 0;
    Eigen::Index dim_B = 0;
    Eigen::Index dim() const { return dim_A * dim_B; }
};

// Half cut of an L-site chain, L even.
Bipartition half_cut(int L);

// Cap BLAS threading; n <= 0 restores the library default. The ENTPOW_THREADS
// environment variable is applied by apply_thread_env().
void set_blas_threads(int n);
void apply_thread_env();

// max |(U^dag U - I)_{ij}|
double unitarity_residual(const ComplexMatrix& U);
bool is_unitary(const ComplexMatrix& U, double tol = 1e-10);

// (A kron B)[(i,k),(j,l)] = A(i,j) * B(k,l)
ComplexMatrix kron(const ComplexMatrix& A, const ComplexMatrix& B);

// BLAS-backed dense product A * B.
ComplexMatrix matmul(const ComplexMatrix& A, const ComplexMatrix& B);

// Index permutation R[(a,a'),(b,b')] = U[(a,b),(a',b')]. An involution; turns
// the operator Schmidt decomposition across the cut into an ordinary SVD.
ComplexMatrix realign(const ComplexMatrix& U, const Bipartition& cut);

// Nonincreasing singular values (values only, no vectors).
std::vector<double> svd_singular_values(const ComplexMatrix& M);

// sum_i sigma_i^4 of M, computed as ||M^dag M||_F^2 without an SVD.
double gram_frobenius_sq(const ComplexMatrix& M);

// rho_A(a,a') = sum_b psi(a,b) conj(psi(a',b)); psi must be normalized.
ComplexMatrix partial_trace_B(const ComplexVector& psi, const Bipartition& cut);

// Sorted eigenphases of a unitary in [0, 2pi).
std::vector<double> eigenphases_unitary(const ComplexMatrix& U);

}  // namespace entpow
