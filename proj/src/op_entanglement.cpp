#include "entpow/op_entanglement.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "entpow/util.hpp"

namespace entpow {

SchmidtSpectrum operator_schmidt_spectrum(const ComplexMatrix& U, const Bipartition& cut) {
    const std::vector<double> sigma = svd_singular_values(realign(U, cut));
    std::vector<double> lam(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) lam[i] = sigma[i] * sigma[i];
    const double total = pairwise_sum(lam);
    if (!(total > 0.0))
        throw std::invalid_argument("operator_schmidt_spectrum: zero operator");
    for (double& w : lam) w /= total;
    return {std::move(lam), cut};
}

double schmidt_purity(const ComplexMatrix& U, const Bipartition& cut) {
    const ComplexMatrix R = realign(U, cut);
    const double total = R.squaredNorm();  // sum sigma^2
    if (!(total > 0.0)) throw std::invalid_argument("schmidt_purity: zero operator");
    return gram_frobenius_sq(R) / (total * total);
}

EntropyPair entanglement_entropies(const SchmidtSpectrum& s) {
    std::vector<double> kept;
    kept.reserve(s.weights.size());
    for (double w : s.weights) {
        if (w < 0.0 && w > -1e-12) w = 0.0;
        if (w < 0.0) throw std::invalid_argument("entanglement_entropies: negative weight");
        if (w >= 1e-12) kept.push_back(w);
    }
    std::vector<double> sq(kept.size()), wlog(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        sq[i] = kept[i] * kept[i];
        wlog[i] = kept[i] * std::log2(kept[i]);
    }
    const double linear = std::max(0.0, 1.0 - pairwise_sum(sq));
    const double von_neumann = std::max(0.0, -pairwise_sum(wlog));
    return {linear, von_neumann};
}

ComplexMatrix swap_operator(Eigen::Index N) {
    if (N < 2) throw std::invalid_argument("swap_operator: N must be at least 2");
    ComplexMatrix S = ComplexMatrix::Zero(N * N, N * N);
    for (Eigen::Index a = 0; a < N; ++a)
        for (Eigen::Index b = 0; b < N; ++b) S(b * N + a, a * N + b) = 1.0;
    return S;
}

ComplexMatrix apply_swap_right(const ComplexMatrix& M, Eigen::Index N) {
    if (M.cols() != N * N)
        throw std::invalid_argument("apply_swap_right: dimension mismatch");
    ComplexMatrix out(M.rows(), M.cols());
    // (M S) column (a,b) picks up S's single 1 in row (b,a): column (b,a) of M.
    for (Eigen::Index a = 0; a < N; ++a)
        for (Eigen::Index b = 0; b < N; ++b) out.col(a * N + b) = M.col(b * N + a);
    return out;
}

MeasureSeries measure_series(const FieldConfig& cfg, int n_max) {
    validate(cfg);
    if (n_max < 0) throw std::invalid_argument("measure_series: n_max must be nonnegative");
    const Bipartition cut = half_cut(cfg.L);
    const ComplexMatrix U = build_floquet(cfg);
    ComplexMatrix Un = ComplexMatrix::Identity(U.rows(), U.cols());
    const double nan = std::numeric_limits<double>::quiet_NaN();
    MeasureSeries series;
    series.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) Un = matmul(U, Un);
        const EntropyPair e = entanglement_entropies(operator_schmidt_spectrum(Un, cut));
        const EntropyPair es =
            entanglement_entropies(operator_schmidt_spectrum(apply_swap_right(Un, cut.dim_A), cut));
        series.push_back({n, e.linear, e.von_neumann, es.linear, nan, nan, nan});
    }
    return series;
}

namespace {

std::string format_field(double x) {
    if (std::isnan(x)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::string series_csv(const MeasureSeries& series, const std::vector<std::string>& comments) {
    std::string out;
    for (const std::string& c : comments) out += "# " + c + "\n";
    out += "n,E_l,E_vN,E_l_US,ep_l,ep_vN,ep_vN_stderr\n";
    for (const MeasureRecord& r : series) {
        out += std::to_string(r.n);
        for (double x : {r.E_l, r.E_vN, r.E_l_US, r.ep_l, r.ep_vN, r.ep_vN_stderr}) {
            out += ',';
            out += format_field(x);
        }
        out += '\n';
    }
    return out;
}

}  // namespace entpow
