#include <doctest.h>

#include <cmath>
#include <numbers>

#include "entpow/entangling_power.hpp"
#include "entpow/integrable_oracle.hpp"
#include "entpow/rmt_model.hpp"
#include "entpow/util.hpp"

using namespace entpow;

namespace {
constexpr double pi4 = std::numbers::pi / 4;

ComplexMatrix cue(Eigen::Index N, std::uint64_t stream) {
    auto rng = make_rng(1234, stream);
    return sample_cue(N, rng);
}

ComplexMatrix cnot() {
    ComplexMatrix U = ComplexMatrix::Identity(4, 4);
    U(2, 2) = U(3, 3) = 0.0;
    U(2, 3) = U(3, 2) = 1.0;
    return U;
}
}  // namespace

TEST_SUITE("entangling_power") {

TEST_CASE("identity, swap, and product unitaries entangle nothing") {
    const Bipartition cut{4, 4};
    CHECK(ep_linear_exact(ComplexMatrix::Identity(16, 16), cut) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(std::abs(ep_linear_exact(swap_operator(4), cut)) < 1e-12);
    CHECK(std::abs(ep_linear_exact(kron(cue(4, 0), cue(4, 1)), cut)) < 1e-12);
}

TEST_CASE("CNOT has entangling power 2/9") {
    const Bipartition cut{2, 2};
    CHECK(ep_linear_exact(cnot(), cut) == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
    // same value through the entropy identity
    const double El_U = entanglement_entropies(operator_schmidt_spectrum(cnot(), cut)).linear;
    const double El_US =
        entanglement_entropies(operator_schmidt_spectrum(apply_swap_right(cnot(), 2), cut)).linear;
    CHECK(El_U == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(El_US == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(entangling_power_from_entropies(El_U, El_US, 2) == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("kicked chain at the solvable point matches the closed form") {
    const FieldConfig cfg = preset_config("set-i", 8, pi4);
    const ComplexMatrix U4 = floquet_power(build_floquet(cfg), 4);
    const double ep = ep_linear_exact(U4, half_cut(8));
    CHECK(ep == doctest::Approx(233.0 / 289.0).epsilon(1e-10));
    CHECK(ep == doctest::Approx(exact_measures(8, 4).ep_l).epsilon(1e-10));
}

TEST_CASE("entangling power is invariant under local unitaries") {
    const Bipartition cut{4, 4};
    const ComplexMatrix U = cue(16, 2);
    const ComplexMatrix V =
        matmul(matmul(kron(cue(4, 3), cue(4, 4)), U), kron(cue(4, 5), cue(4, 6)));
    CHECK(ep_linear_exact(U, cut) == doctest::Approx(ep_linear_exact(V, cut)).epsilon(1e-9));
}

TEST_CASE("Haar product states are normalized, product, and deterministic") {
    auto rng = make_rng(5, 0);
    const ComplexVector psi = sample_haar_product_state(4, rng);
    REQUIRE(psi.size() == 16);
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));
    // product structure: reduced state is pure
    const ComplexMatrix rho = partial_trace_B(psi, Bipartition{4, 4});
    CHECK((matmul(rho, rho) - rho).cwiseAbs().maxCoeff() < 1e-12);

    auto rng2 = make_rng(5, 0);
    CHECK((sample_haar_product_state(4, rng2) - psi).cwiseAbs().maxCoeff() == 0.0);
    auto rng3 = make_rng(5, 1);
    CHECK((sample_haar_product_state(4, rng3) - psi).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("first Haar moment of a component weight is 1/N^2") {
    // |<00|psi>|^2 averages to 1/N^2 over the product ensemble (N = 4).
    const long M = 4000;
    std::vector<double> w(M);
    for (long i = 0; i < M; ++i) {
        auto rng = make_rng(17, static_cast<std::uint64_t>(i));
        w[static_cast<std::size_t>(i)] = std::norm(sample_haar_product_state(4, rng)(0));
    }
    const MeanSem ms = mean_sem(w);
    CHECK(std::abs(ms.mean - 1.0 / 16.0) < 4.0 * ms.sem);
}

TEST_CASE("Monte Carlo on a product unitary returns zero") {
    const Bipartition cut{4, 4};
    const EpEstimate est = ep_monte_carlo(kron(cue(4, 7), cue(4, 8)), cut, 150, 42);
    CHECK(std::abs(est.ep_l_mc) < 1e-10);
    CHECK(std::abs(est.ep_vN_mc) < 1e-9);
    CHECK(std::abs(est.ep_l_exact) < 1e-12);
}

TEST_CASE("Monte Carlo estimate brackets the exact value") {
    const Bipartition cut{4, 4};
    const ComplexMatrix U = cue(16, 9);
    const EpEstimate est = ep_monte_carlo(U, cut, 2000, 7);
    CHECK(est.samples == 2000);
    CHECK(est.stderr_l > 0.0);
    CHECK(est.stderr_vN > 0.0);
    CHECK(std::abs(est.ep_l_mc - est.ep_l_exact) < 3.0 * est.stderr_l);
    // deterministic for a fixed seed
    const EpEstimate again = ep_monte_carlo(U, cut, 2000, 7);
    CHECK(again.ep_l_mc == est.ep_l_mc);
    CHECK(again.ep_vN_mc == est.ep_vN_mc);
    // a different seed moves the estimate but stays within joint error bars
    const EpEstimate other = ep_monte_carlo(U, cut, 2000, 8);
    CHECK(other.ep_l_mc != est.ep_l_mc);
    CHECK(std::abs(other.ep_l_mc - est.ep_l_exact) < 4.0 * other.stderr_l);
}

TEST_CASE("sample floor is enforced") {
    CHECK_THROWS_AS(ep_monte_carlo(ComplexMatrix::Identity(4, 4), Bipartition{2, 2}, 99, 1),
                    std::invalid_argument);
}

TEST_CASE("ep_series fills every column and matches the closed form") {
    const int L = 6;
    const FieldConfig cfg = preset_config("set-i", L, pi4);
    const MeasureSeries series = ep_series(cfg, 2 * L, 200, 11);
    REQUIRE(series.size() == std::size_t(2 * L + 1));
    CHECK(series[0].ep_l == doctest::Approx(0.0).epsilon(1e-12));
    for (int n = 0; n <= 2 * L; ++n) {
        const ExactMeasures ex = exact_measures(L, n);
        CHECK(series[std::size_t(n)].ep_l == doctest::Approx(ex.ep_l).epsilon(1e-9));
        CHECK(std::isfinite(series[std::size_t(n)].ep_vN));
        if (n >= 1 && n < 2 * L) CHECK(series[std::size_t(n)].ep_vN_stderr > 0.0);
    }
    // the closed-form numerator 1 + 2^L - 2^(L-n) - 2^(n-1) ties its maximum
    // at n = L/2 and L/2 + 1
    double best = -1.0;
    int argbest = -1;
    for (const auto& r : series)
        if (r.ep_l > best) best = r.ep_l, argbest = r.n;
    CHECK((argbest == L / 2 || argbest == L / 2 + 1));
    // ep_vN tracks ep_l qualitatively: largest mid-period, zero at the revival
    CHECK(series[std::size_t(L / 2)].ep_vN > series[std::size_t(2 * L)].ep_vN + 0.5);
    CHECK(std::abs(series[std::size_t(2 * L)].ep_vN) < 1e-9);
}

}  // TEST_SUITE
