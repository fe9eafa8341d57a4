#pragma once

#include <string>
#include <utility>
#include <vector>

#include "entpow/floquet_model.hpp"
#include "entpow/tensor_core.hpp"

namespace entpow {

struct SpectralReport {
    std::string sector_label;            // "even" | "odd" | "full"
    std::vector<double> phases;          // sorted, [0, 2pi)
    std::vector<double> spacings;        // unfolded cyclic gaps, mean exactly 1
    std::vector<double> ratios;          // min/max of consecutive spacings
    double mean_ratio = 0.0;
    std::vector<std::pair<double, double>> sigma2;  // (r, Sigma^2(r))
};

// Index permutation of the spatial reflection (site j <-> site L+1-j).
std::vector<Eigen::Index> bit_reversal_permutation(int L);

// U restricted to the +1/-1 eigenspaces of the reflection, in that order.
// Rejects (with the residual in the message) if ||RUR - U||_max >= 1e-10.
// Sector dimensions are (2^L +- 2^(L/2)) / 2.
std::pair<ComplexMatrix, ComplexMatrix> parity_sectors(const ComplexMatrix& U,
                                                       const FieldConfig& cfg);

// Unfolds by the exact uniform density: s_k = gap_k * d / 2pi with the last
// gap wrapped cyclically. Requires at least 50 phases.
SpectralReport spacing_statistics(const std::vector<double>& phases);

// Sigma^2(r) = <(count in window - r)^2> over `origins` equally spaced cyclic
// windows of width r, in unfolded coordinates (circumference = #positions).
std::vector<std::pair<double, double>> number_variance(const std::vector<double>& phases,
                                                       const std::vector<double>& r_values,
                                                       int origins = 512);

// max |(G U* G^-1 - U^dag)_{ij}| for the diagonal antiunitary partner
// G = (kron_j e^{-i theta_j sz_j}) e^{+i tau H0}, theta_j = atan2(hy_j, hx_j).
// identity_g replaces G by 1 as a negative control.
double check_false_trs(const FieldConfig& cfg, bool identity_g = false);

}  // namespace entpow
