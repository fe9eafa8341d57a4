#include "entpow/util.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace entpow {

double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 16) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

MeanSem mean_sem(std::span<const double> v) {
    if (v.empty()) throw std::invalid_argument("mean_sem: empty sample");
    const long n = static_cast<long>(v.size());
    const double mean = pairwise_sum(v) / static_cast<double>(n);
    if (n == 1) return {mean, 0.0, 1};
    std::vector<double> sq(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double d = v[i] - mean;
        sq[i] = d * d;
    }
    const double var = pairwise_sum(sq) / static_cast<double>(n - 1);
    return {mean, std::sqrt(var / static_cast<double>(n)), n};
}

}  // namespace entpow
