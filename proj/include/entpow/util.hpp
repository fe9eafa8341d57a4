#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace entpow {

// SplitMix64 finalizer; good avalanche, used only to derive stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent stream `stream` of a master seed. Streams are reproducible
// regardless of the order in which they are consumed, so sampling loops can
// be reordered or parallelized without changing results.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
    return std::mt19937_64(splitmix64(seed + 0x632be59bd9b4e019ULL * (stream + 1)));
}

// Pairwise (cascade) summation: deterministic for a fixed input order and
// O(log n) error growth, mandated for Monte Carlo reductions.
double pairwise_sum(std::span<const double> v);

struct MeanSem {
    double mean;
    double sem;  // standard error of the mean
    long n;
};

MeanSem mean_sem(std::span<const double> v);

}  // namespace entpow
