#pragma once

#include "entpow/tensor_core.hpp"

namespace entpow {

// Closed-form half-cut measures of U^n for the transverse kick at tau = pi/4
// on the open chain. Defined on 1 <= n <= L, reflected via n -> 2L - n on
// (L, 2L], periodic with period 2L; all zero at n = 0 except E_l_US = E_l(S).
struct ExactMeasures {
    int n = 0;
    double E_l = 0.0;
    double E_vN = 0.0;  // bits; integer on 1 <= n <= L
    double E_l_US = 0.0;
    double ep_l = 0.0;  // 0 at n = 0 by definition
};

ExactMeasures exact_measures(int L, long n);

// The single commuting nonlocal factor V_i, 1 <= i <= 2L (V_{L+k} = V_k):
// (1 - i P_i)/sqrt(2) for a Pauli string P_i straddling the half cut.
ComplexMatrix nonlocal_factor(int L, int i);

// Ordered product V_n ... V_2 V_1; Schmidt-equivalent to U^n.
ComplexMatrix build_nonlocal_factor(int L, int n);

}  // namespace entpow
