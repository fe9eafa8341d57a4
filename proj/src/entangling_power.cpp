#include "entpow/entangling_power.hpp"

#include <cmath>
#include <stdexcept>

#include "entpow/util.hpp"

namespace entpow {

double entangling_power_from_entropies(double El_U, double El_US, Eigen::Index N) {
    const double Nd = static_cast<double>(N);
    const double El_S = 1.0 - 1.0 / (Nd * Nd);
    return Nd * Nd / ((Nd + 1.0) * (Nd + 1.0)) * (El_U + El_US - El_S);
}

double ep_linear_exact(const ComplexMatrix& U, const Bipartition& cut) {
    const double El_U = 1.0 - schmidt_purity(U, cut);
    const double El_US = 1.0 - schmidt_purity(apply_swap_right(U, cut.dim_A), cut);
    return entangling_power_from_entropies(El_U, El_US, cut.dim_A);
}

ComplexVector sample_haar_product_state(Eigen::Index N, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexVector a(N), b(N);
    for (Eigen::Index i = 0; i < N; ++i) a(i) = cd(gauss(rng), gauss(rng));
    for (Eigen::Index i = 0; i < N; ++i) b(i) = cd(gauss(rng), gauss(rng));
    a /= a.norm();
    b /= b.norm();
    ComplexVector psi(N * N);
    for (Eigen::Index i = 0; i < N; ++i) psi.segment(i * N, N) = a(i) * b;
    return psi;
}

namespace {

// Linear and von Neumann entropies of rho_A for the composite state phi.
// The eigenvalues of rho_A are the squared singular values of the N_A x N_B
// reshape of phi.
EntropyPair state_entropies(const ComplexVector& phi, const Bipartition& cut) {
    Eigen::Map<const Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        M(phi.data(), cut.dim_A, cut.dim_B);
    Eigen::JacobiSVD<ComplexMatrix> svd(M);
    const auto& sv = svd.singularValues();
    std::vector<double> lam;
    lam.reserve(static_cast<std::size_t>(sv.size()));
    for (Eigen::Index i = 0; i < sv.size(); ++i) lam.push_back(sv(i) * sv(i));
    return entanglement_entropies({std::move(lam), cut});
}

}  // namespace

EpEstimate ep_monte_carlo(const ComplexMatrix& U, const Bipartition& cut,
                          long samples, std::uint64_t seed) {
    if (samples < 100) throw std::invalid_argument("ep_monte_carlo: need at least 100 samples");
    if (U.rows() != cut.dim() || U.cols() != cut.dim())
        throw std::invalid_argument("ep_monte_carlo: dimension mismatch");
    const Eigen::Index N = cut.dim_A;
    std::vector<double> e_lin(static_cast<std::size_t>(samples));
    std::vector<double> e_vn(static_cast<std::size_t>(samples));
    // Batch states into blocks so the U application runs as one matrix product.
    const long block = 256;
    ComplexMatrix batch(cut.dim(), block);
    for (long start = 0; start < samples; start += block) {
        const long m = std::min(block, samples - start);
        for (long i = 0; i < m; ++i) {
            std::mt19937_64 rng = make_rng(seed, static_cast<std::uint64_t>(start + i));
            batch.col(i) = sample_haar_product_state(N, rng);
        }
        const ComplexMatrix evolved = matmul(U, batch.leftCols(m));
        for (long i = 0; i < m; ++i) {
            const EntropyPair e = state_entropies(evolved.col(i), cut);
            e_lin[static_cast<std::size_t>(start + i)] = e.linear;
            e_vn[static_cast<std::size_t>(start + i)] = e.von_neumann;
        }
    }
    const MeanSem lin = mean_sem(e_lin);
    const MeanSem vn = mean_sem(e_vn);
    EpEstimate est;
    est.ep_l_exact = ep_linear_exact(U, cut);
    est.ep_l_mc = lin.mean;
    est.ep_vN_mc = vn.mean;
    est.stderr_l = lin.sem;
    est.stderr_vN = vn.sem;
    est.samples = samples;
    est.seed = seed;
    return est;
}

MeasureSeries ep_series(const FieldConfig& cfg, int n_max, long samples, std::uint64_t seed) {
    validate(cfg);
    if (n_max < 0) throw std::invalid_argument("ep_series: n_max must be nonnegative");
    const Bipartition cut = half_cut(cfg.L);
    const ComplexMatrix U = build_floquet(cfg);
    ComplexMatrix Un = ComplexMatrix::Identity(U.rows(), U.cols());
    MeasureSeries series;
    series.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) Un = matmul(U, Un);
        const EntropyPair e = entanglement_entropies(operator_schmidt_spectrum(Un, cut));
        const EntropyPair es =
            entanglement_entropies(operator_schmidt_spectrum(apply_swap_right(Un, cut.dim_A), cut));
        const double ep = entangling_power_from_entropies(e.linear, es.linear, cut.dim_A);
        // Stream block per n keeps sample streams disjoint across the series.
        const EpEstimate mc = ep_monte_carlo(Un, cut, samples,
                                             splitmix64(seed + static_cast<std::uint64_t>(n)));
        series.push_back({n, e.linear, e.von_neumann, es.linear, ep, mc.ep_vN_mc, mc.stderr_vN});
    }
    return series;
}

}  // namespace entpow
