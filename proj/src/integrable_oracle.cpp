#include "entpow/integrable_oracle.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace entpow {

ExactMeasures exact_measures(int L, long n) {
    if (L <= 0 || L % 2 != 0) throw std::invalid_argument("exact_measures: L must be even");
    if (n < 0) throw std::invalid_argument("exact_measures: n must be nonnegative");
    const int period = 2 * L;
    int m = static_cast<int>(n % period);
    if (m > L) m = period - m;
    ExactMeasures out;
    out.n = static_cast<int>(n);
    if (m == 0) {
        out.E_l = 0.0;
        out.E_vN = 0.0;
        out.E_l_US = 1.0 - std::pow(2.0, -L);  // E_l(S)
        out.ep_l = 0.0;
        return out;
    }
    out.E_l = 1.0 - std::pow(2.0, -m);
    out.E_vN = static_cast<double>(m);
    out.E_l_US = 1.0 - std::pow(2.0, m - 1 - L);
    const double root = 1.0 + std::pow(2.0, L / 2);
    out.ep_l = (1.0 + std::pow(2.0, L) - std::pow(2.0, L - m) - std::pow(2.0, m - 1)) /
               (root * root);
    return out;
}

namespace {

enum class Axis { x, y, z };

// Dense Pauli string over L qubits; site 1-based, site 1 = most significant
// bit. Built column by column from the bit masks, no matrix products.
ComplexMatrix pauli_string(int L, const std::map<int, Axis>& ops) {
    const Eigen::Index dim = Eigen::Index(1) << L;
    Eigen::Index xmask = 0;
    std::vector<int> ybits, zbits;
    for (const auto& [site, axis] : ops) {
        const int bit = L - site;
        if (axis == Axis::x || axis == Axis::y) xmask |= Eigen::Index(1) << bit;
        if (axis == Axis::y) ybits.push_back(bit);
        if (axis == Axis::z) zbits.push_back(bit);
    }
    ComplexMatrix P = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        cd phase(1.0, 0.0);
        for (int bit : ybits) phase *= ((c >> bit) & 1) ? cd(0.0, -1.0) : cd(0.0, 1.0);
        for (int bit : zbits) phase *= ((c >> bit) & 1) ? -1.0 : 1.0;
        P(c ^ xmask, c) = phase;
    }
    return P;
}

// Sites of the string inside V_i. With M = L/2, the cut-mirrored labels are
// A_j = site M+1-j and B_j = site M+j. For i <= M the string is y on the
// (A_i, B_i) pair over an x-string on all closer pairs; past i = M the y pair
// is replaced by a z pair marching back toward the cut.
std::map<int, Axis> factor_sites(int L, int i) {
    const int M = L / 2;
    auto A = [M](int j) { return M + 1 - j; };
    auto B = [M](int j) { return M + j; };
    std::map<int, Axis> ops;
    if (i <= M) {
        ops[A(i)] = Axis::y;
        ops[B(i)] = Axis::y;
        for (int j = 1; j < i; ++j) {
            ops[A(j)] = Axis::x;
            ops[B(j)] = Axis::x;
        }
    } else {
        const int k = i - M;
        ops[A(M - k + 1)] = Axis::z;
        ops[B(M - k + 1)] = Axis::z;
        for (int j = 1; j <= M - k; ++j) {
            ops[A(j)] = Axis::x;
            ops[B(j)] = Axis::x;
        }
    }
    return ops;
}

}  // namespace

ComplexMatrix nonlocal_factor(int L, int i) {
    if (L <= 0 || L % 2 != 0) throw std::invalid_argument("nonlocal_factor: L must be even");
    if (i < 1 || i > 2 * L) throw std::invalid_argument("nonlocal_factor: i out of range");
    const int base = (i - 1) % L + 1;  // V_{L+k} = V_k
    const Eigen::Index dim = Eigen::Index(1) << L;
    const ComplexMatrix P = pauli_string(L, factor_sites(L, base));
    return (ComplexMatrix::Identity(dim, dim) - cd(0.0, 1.0) * P) / std::sqrt(2.0);
}

ComplexMatrix build_nonlocal_factor(int L, int n) {
    if (L <= 0 || L % 2 != 0) throw std::invalid_argument("build_nonlocal_factor: L must be even");
    if (n < 1 || n > 2 * L) throw std::invalid_argument("build_nonlocal_factor: n out of range");
    ComplexMatrix prod = nonlocal_factor(L, 1);
    for (int i = 2; i <= n; ++i) prod = matmul(nonlocal_factor(L, i), prod);
    return prod;
}

}  // namespace entpow
