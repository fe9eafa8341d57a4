#pragma once

#include <cstdint>
#include <random>

#include "entpow/op_entanglement.hpp"

namespace entpow {

// Analytic references for the bipartite random-matrix model at half-cut
// dimension N: saturation values and the finite-n growth curves.
struct RmtPrediction {
    int n = 0;
    double ep_l_pred = 0.0;  // ep_l_bar * [1 - (1 - C_N/2 sin^2 2tau)^n]
    double el_pred = 0.0;    // 1 - (1 - sin^2(2tau)/2)^n, neglects O(1/N^2)
    double ep_l_bar = 0.0;   // (N-1)^2 / (N^2+1)
    double el_bar = 0.0;     // (N^2-1) / (N^2+1)
    double evn_bar = 0.0;    // 2 log2 N - 1/(2 ln 2), bits
};

RmtPrediction rmt_predictions(double tau, Eigen::Index N, int n);

// Haar-distributed unitary: QR of a complex Ginibre matrix with the R diagonal
// phases absorbed into Q.
ComplexMatrix sample_cue(Eigen::Index N, std::mt19937_64& rng);

// COE draw W^T W with W from the CUE; symmetric unitary.
ComplexMatrix sample_coe(Eigen::Index N, std::mt19937_64& rng);

enum class LocalsMode {
    fresh,      // independent U_A, U_B at every step (the solved model)
    shared_ab,  // U_B = U_A within each step
    frozen      // one (U_A, U_B) pair per realization, reused every step
};

// Ensemble means and standard errors per kick count.
struct RmtRecord {
    int n = 0;
    double E_l = 0.0, E_vN = 0.0, E_l_US = 0.0, ep_l = 0.0;
    double sem_E_l = 0.0, sem_E_vN = 0.0, sem_E_l_US = 0.0, sem_ep_l = 0.0;
};

using RmtSeries = std::vector<RmtRecord>;

// W_n = (U_An (x) U_Bn) U_AB(tau) W_{n-1} with U_AB = exp(-i tau sz sz) on the
// two cut-adjacent sites; measures averaged over `realizations` trajectories.
RmtSeries rmt_trajectory(double tau, int L, int n_max, int realizations,
                         std::uint64_t seed, LocalsMode mode = LocalsMode::fresh);

}  // namespace entpow
