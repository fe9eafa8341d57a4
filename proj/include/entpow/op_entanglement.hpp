#pragma once

#include <string>
#include <vector>

#include "entpow/floquet_model.hpp"
#include "entpow/tensor_core.hpp"

namespace entpow {

// Operator Schmidt weights lambda_i across a cut: nonincreasing, nonnegative,
// normalized to sum 1 (exact for unitary inputs, enforced by construction).
struct SchmidtSpectrum {
    std::vector<double> weights;
    Bipartition cut;
};

struct EntropyPair {
    double linear;       // E_l = 1 - sum lambda^2
    double von_neumann;  // E_vN = -sum lambda log2 lambda, in bits
};

// lambda_i = sigma_i^2 / sum sigma^2 with sigma the singular values of
// realign(U, cut).
SchmidtSpectrum operator_schmidt_spectrum(const ComplexMatrix& U, const Bipartition& cut);

// sum_i lambda_i^2 without an SVD (Gram Frobenius norm of the realignment).
// Equal to the spectrum-based value to ~1e-12; used on hot paths where only
// linear entropies are needed.
double schmidt_purity(const ComplexMatrix& U, const Bipartition& cut);

// Weights below 1e-12 are dropped before either entropy is evaluated.
EntropyPair entanglement_entropies(const SchmidtSpectrum& s);

// S |a>|b> = |b>|a> on an N x N composite.
ComplexMatrix swap_operator(Eigen::Index N);

// Column permutation computing M * S without a matrix product.
ComplexMatrix apply_swap_right(const ComplexMatrix& M, Eigen::Index N);

// One record per kick count n. Columns not produced by a given experiment are
// NaN and serialize as empty CSV fields.
struct MeasureRecord {
    int n = 0;
    double E_l = 0.0;
    double E_vN = 0.0;
    double E_l_US = 0.0;
    double ep_l = 0.0;
    double ep_vN = 0.0;
    double ep_vN_stderr = 0.0;
};

using MeasureSeries = std::vector<MeasureRecord>;

// E_l(U^n), E_vN(U^n), E_l(U^n S) for n = 0..n_max across the half cut.
// Entangling-power columns are left NaN.
MeasureSeries measure_series(const FieldConfig& cfg, int n_max);

// CSV with header `n,E_l,E_vN,E_l_US,ep_l,ep_vN,ep_vN_stderr`, 17 significant
// digits, one leading `# ...` comment line per entry of `comments`.
std::string series_csv(const MeasureSeries& series, const std::vector<std::string>& comments = {});

}  // namespace entpow
