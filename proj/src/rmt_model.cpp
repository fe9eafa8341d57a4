#include "entpow/rmt_model.hpp"

#include "entpow/entangling_power.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "entpow/util.hpp"

namespace entpow {

RmtPrediction rmt_predictions(double tau, Eigen::Index N, int n) {
    if (N <= 1) throw std::invalid_argument("rmt_predictions: N must exceed 1");
    if (n < 0) throw std::invalid_argument("rmt_predictions: n must be nonnegative");
    const double Nd = static_cast<double>(N);
    const double N2 = Nd * Nd;
    RmtPrediction p;
    p.n = n;
    p.ep_l_bar = (Nd - 1.0) * (Nd - 1.0) / (N2 + 1.0);
    p.el_bar = (N2 - 1.0) / (N2 + 1.0);
    p.evn_bar = 2.0 * std::log2(Nd) - 1.0 / (2.0 * std::numbers::ln2);
    const double s2 = std::sin(2.0 * tau) * std::sin(2.0 * tau);
    const double CN = N2 * (N2 + 1.0) / ((N2 - 1.0) * (N2 - 1.0));
    p.ep_l_pred = p.ep_l_bar * (1.0 - std::pow(1.0 - 0.5 * CN * s2, n));
    p.el_pred = 1.0 - std::pow(1.0 - 0.5 * s2, n);
    return p;
}

ComplexMatrix sample_cue(Eigen::Index N, std::mt19937_64& rng) {
    if (N < 2) throw std::invalid_argument("sample_cue: N must be at least 2");
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix G(N, N);
    for (Eigen::Index j = 0; j < N; ++j)
        for (Eigen::Index i = 0; i < N; ++i) G(i, j) = cd(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<ComplexMatrix> qr(G);
    ComplexMatrix Q = qr.householderQ();
    const ComplexMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the QR gauge: scale columns by the R diagonal phases to make Q Haar.
    for (Eigen::Index j = 0; j < N; ++j) {
        const cd d = R(j, j);
        const double a = std::abs(d);
        Q.col(j) *= (a > 0.0) ? d / a : cd(1.0);
    }
    return Q;
}

ComplexMatrix sample_coe(Eigen::Index N, std::mt19937_64& rng) {
    const ComplexMatrix W = sample_cue(N, rng);
    return W.transpose() * W;
}

RmtSeries rmt_trajectory(double tau, int L, int n_max, int realizations,
                         std::uint64_t seed, LocalsMode mode) {
    if (L <= 0 || L % 2 != 0) throw std::invalid_argument("rmt_trajectory: L must be even");
    if (n_max < 0 || realizations < 1)
        throw std::invalid_argument("rmt_trajectory: bad n_max or realizations");
    const Bipartition cut = half_cut(L);
    const Eigen::Index N = cut.dim_A;
    const Eigen::Index dim = cut.dim();

    // Diagonal of exp(-i tau sz sz) on the last site of A and first of B:
    // z_A = bit 0 of a, z_B = top bit of b.
    ComplexVector uab(dim);
    for (Eigen::Index a = 0; a < N; ++a) {
        const double za = 1.0 - 2.0 * static_cast<double>(a & 1);
        for (Eigen::Index b = 0; b < N; ++b) {
            const double zb = 1.0 - 2.0 * static_cast<double>((b >> (L / 2 - 1)) & 1);
            uab(a * N + b) = std::exp(cd(0.0, -tau * za * zb));
        }
    }

    const std::size_t rows = static_cast<std::size_t>(n_max) + 1;
    std::vector<std::vector<double>> el(rows), evn(rows), elus(rows), ep(rows);

    for (int r = 0; r < realizations; ++r) {
        std::mt19937_64 rng = make_rng(seed, static_cast<std::uint64_t>(r));
        ComplexMatrix W = ComplexMatrix::Identity(dim, dim);
        ComplexMatrix UA, UB;
        if (mode == LocalsMode::frozen) {
            UA = sample_cue(N, rng);
            UB = sample_cue(N, rng);
        }
        for (int n = 0; n <= n_max; ++n) {
            if (n > 0) {
                if (mode == LocalsMode::fresh) {
                    UA = sample_cue(N, rng);
                    UB = sample_cue(N, rng);
                } else if (mode == LocalsMode::shared_ab) {
                    UA = sample_cue(N, rng);
                    UB = UA;
                }
                for (Eigen::Index c = 0; c < dim; ++c)
                    W.col(c) = uab.cwiseProduct(W.col(c));  // diagonal U_AB acts on rows
                W = matmul(kron(UA, UB), W);
            }
            const EntropyPair e = entanglement_entropies(operator_schmidt_spectrum(W, cut));
            const EntropyPair es =
                entanglement_entropies(operator_schmidt_spectrum(apply_swap_right(W, N), cut));
            el[static_cast<std::size_t>(n)].push_back(e.linear);
            evn[static_cast<std::size_t>(n)].push_back(e.von_neumann);
            elus[static_cast<std::size_t>(n)].push_back(es.linear);
            ep[static_cast<std::size_t>(n)].push_back(
                entangling_power_from_entropies(e.linear, es.linear, N));
        }
    }

    RmtSeries series(rows);
    for (std::size_t n = 0; n < rows; ++n) {
        const MeanSem a = mean_sem(el[n]), b = mean_sem(evn[n]), c = mean_sem(elus[n]),
                      d = mean_sem(ep[n]);
        series[n] = {static_cast<int>(n), a.mean, b.mean, c.mean, d.mean,
                     a.sem, b.sem, c.sem, d.sem};
    }
    return series;
}

}  // namespace entpow
