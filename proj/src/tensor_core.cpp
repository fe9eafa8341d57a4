#include "entpow/tensor_core.hpp"

#include <complex>
#define LAPACK_COMPLEX_CUSTOM
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <cblas.h>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

extern "C" void openblas_set_num_threads(int);

namespace entpow {

Bipartition half_cut(int L) {
    if (L <= 0 || L % 2 != 0) throw std::invalid_argument("half_cut: L must be even and positive");
    const Eigen::Index N = Eigen::Index(1) << (L / 2);
    return {N, N};
}

void set_blas_threads(int n) {
    openblas_set_num_threads(n > 0 ? n : 1);
}

void apply_thread_env() {
    if (const char* s = std::getenv("ENTPOW_THREADS")) {
        const int n = std::atoi(s);
        if (n > 0) set_blas_threads(n);
    } else {
        set_blas_threads(1);
    }
}

namespace {

// Lower triangle of M^dag M via ZHERK; half the cost of a full GEMM.
ComplexMatrix gram_lower(const ComplexMatrix& M) {
    const auto n = M.cols();
    ComplexMatrix C(n, n);
    C.setZero();
    cblas_zherk(CblasColMajor, CblasLower, CblasConjTrans,
                static_cast<blasint>(n), static_cast<blasint>(M.rows()),
                1.0, M.data(), static_cast<blasint>(M.rows()),
                0.0, C.data(), static_cast<blasint>(n));
    return C;
}

}  // namespace

double unitarity_residual(const ComplexMatrix& U) {
    if (U.rows() != U.cols()) return HUGE_VAL;
    const ComplexMatrix C = gram_lower(U);
    double res = 0.0;
    for (Eigen::Index j = 0; j < C.cols(); ++j)
        for (Eigen::Index i = j; i < C.rows(); ++i) {
            const cd want = (i == j) ? cd(1.0) : cd(0.0);
            res = std::max(res, std::abs(C(i, j) - want));
        }
    return res;
}

bool is_unitary(const ComplexMatrix& U, double tol) {
    return unitarity_residual(U) < tol;
}

ComplexMatrix kron(const ComplexMatrix& A, const ComplexMatrix& B) {
    ComplexMatrix out(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index j = 0; j < A.cols(); ++j)
        for (Eigen::Index i = 0; i < A.rows(); ++i)
            out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return out;
}

ComplexMatrix matmul(const ComplexMatrix& A, const ComplexMatrix& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("matmul: inner dimensions differ");
    ComplexMatrix C(A.rows(), B.cols());
    const cd one(1.0), zero(0.0);
    cblas_zgemm(CblasColMajor, CblasNoTrans, CblasNoTrans,
                static_cast<blasint>(A.rows()), static_cast<blasint>(B.cols()),
                static_cast<blasint>(A.cols()),
                &one, A.data(), static_cast<blasint>(A.rows()),
                B.data(), static_cast<blasint>(B.rows()),
                &zero, C.data(), static_cast<blasint>(C.rows()));
    return C;
}

ComplexMatrix realign(const ComplexMatrix& U, const Bipartition& cut) {
    const Eigen::Index N = cut.dim_A;
    if (cut.dim_A != cut.dim_B)
        throw std::invalid_argument("realign: bipartition must have equal halves");
    if (U.rows() != U.cols() || U.rows() != N * N)
        throw std::invalid_argument("realign: dimension is not the square of the cut");
    ComplexMatrix R(N * N, N * N);
    for (Eigen::Index b = 0; b < N; ++b)
        for (Eigen::Index bp = 0; bp < N; ++bp) {
            const Eigen::Index col = b * N + bp;
            for (Eigen::Index a = 0; a < N; ++a)
                for (Eigen::Index ap = 0; ap < N; ++ap)
                    R(a * N + ap, col) = U(a * N + b, ap * N + bp);
        }
    return R;
}

std::vector<double> svd_singular_values(const ComplexMatrix& M) {
    if (!M.allFinite()) throw std::invalid_argument("svd_singular_values: non-finite entries");
    const auto m = M.rows(), n = M.cols();
    ComplexMatrix work = M;  // zgesdd destroys its input
    std::vector<double> s(static_cast<std::size_t>(std::min(m, n)));
    int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N',
                              static_cast<lapack_int>(m), static_cast<lapack_int>(n),
                              work.data(), static_cast<lapack_int>(m),
                              s.data(), nullptr, 1, nullptr, 1);
    if (info != 0) {
        // zgesdd occasionally fails to converge; zgesvd is the slower, sturdier fallback.
        work = M;
        std::vector<double> superb(static_cast<std::size_t>(std::min(m, n)));
        info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'N', 'N',
                              static_cast<lapack_int>(m), static_cast<lapack_int>(n),
                              work.data(), static_cast<lapack_int>(m),
                              s.data(), nullptr, 1, nullptr, 1, superb.data());
        if (info != 0)
            throw std::runtime_error("svd_singular_values: LAPACK failed, info=" + std::to_string(info));
    }
    return s;
}

double gram_frobenius_sq(const ComplexMatrix& M) {
    if (!M.allFinite()) throw std::invalid_argument("gram_frobenius_sq: non-finite entries");
    const ComplexMatrix C = gram_lower(M);
    double diag = 0.0, off = 0.0;
    for (Eigen::Index j = 0; j < C.cols(); ++j) {
        diag += std::norm(C(j, j));
        for (Eigen::Index i = j + 1; i < C.rows(); ++i) off += std::norm(C(i, j));
    }
    return diag + 2.0 * off;  // M^dag M is Hermitian
}

ComplexMatrix partial_trace_B(const ComplexVector& psi, const Bipartition& cut) {
    if (psi.size() != cut.dim())
        throw std::invalid_argument("partial_trace_B: state dimension mismatch");
    if (std::abs(psi.norm() - 1.0) > 1e-8)
        throw std::invalid_argument("partial_trace_B: state not normalized");
    // psi(a,b) laid out with a major: row-major N_A x N_B view of the vector.
    Eigen::Map<const Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        M(psi.data(), cut.dim_A, cut.dim_B);
    return M * M.adjoint();
}

std::vector<double> eigenphases_unitary(const ComplexMatrix& U) {
    const double res = unitarity_residual(U);
    if (!(res < 1e-10))
        throw std::invalid_argument("eigenphases_unitary: input not unitary, residual " + std::to_string(res));
    const auto n = U.rows();
    ComplexMatrix work = U;
    std::vector<cd> w(static_cast<std::size_t>(n));
    const int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', static_cast<lapack_int>(n),
                                   work.data(), static_cast<lapack_int>(n),
                                   w.data(), nullptr, 1, nullptr, 1);
    if (info != 0)
        throw std::runtime_error("eigenphases_unitary: LAPACK zgeev failed, info=" + std::to_string(info));
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> phases(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (std::abs(std::abs(w[k]) - 1.0) > 1e-8)
            throw std::runtime_error("eigenphases_unitary: eigenvalue off the unit circle");
        double th = std::arg(w[k]);
        if (th < 0) th += two_pi;
        if (th >= two_pi) th -= two_pi;
        phases[k] = th;
    }
    std::sort(phases.begin(), phases.end());
    return phases;
}

}  // namespace entpow
