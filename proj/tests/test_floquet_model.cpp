#include <doctest.h>

#include <cmath>
#include <numbers>

#include "entpow/floquet_model.hpp"
#include "entpow/integrable_oracle.hpp"
#include "entpow/op_entanglement.hpp"

using namespace entpow;

namespace {
constexpr double pi4 = std::numbers::pi / 4;
}

TEST_SUITE("floquet_model") {

TEST_CASE("presets carry the documented fields") {
    const FieldConfig si = preset_config("set-i", 4, pi4);
    CHECK(si.hx == std::vector<double>(4, 1.0));
    CHECK(si.hy == std::vector<double>(4, 0.0));
    CHECK(si.hz == std::vector<double>(4, 0.0));

    const FieldConfig sni = preset_config("Set-NI", 4, pi4);  // case-insensitive
    CHECK(sni.hx == std::vector<double>(4, 0.9045));
    CHECK(sni.hy == std::vector<double>(4, 0.3457));
    CHECK(sni.hz == std::vector<double>(4, 0.8090));
    CHECK(sni.preset == "set-ni");

    const FieldConfig sx = preset_config("set-x", 4, pi4);
    CHECK(sx.hx == std::vector<double>(4, 1.0));
    CHECK(sx.hy == std::vector<double>(4, 0.0));
    CHECK(sx.hz == std::vector<double>(4, 1.0));

    CHECK_THROWS_AS(preset_config("set-q", 4, pi4), std::invalid_argument);
}

TEST_CASE("config validation rejects odd L, non-positive tau, bad arrays") {
    CHECK_THROWS_AS(preset_config("set-i", 5, pi4), std::invalid_argument);
    CHECK_THROWS_AS(preset_config("set-i", 4, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(preset_config("set-i", 4, -1.0), std::invalid_argument);
    FieldConfig cfg = preset_config("set-i", 4, pi4);
    cfg.hx.pop_back();
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}

TEST_CASE("zero fields give a diagonal operator of Ising phases") {
    FieldConfig cfg;
    cfg.L = 4;
    cfg.tau = 0.37;
    cfg.hx.assign(4, 0.0);
    cfg.hy.assign(4, 0.0);
    cfg.hz.assign(4, 0.0);
    for (Boundary b : {Boundary::open, Boundary::periodic}) {
        cfg.boundary = b;
        const ComplexMatrix U = build_floquet(cfg);
        const std::vector<double> E0 = ising_energies(cfg);
        for (Eigen::Index r = 0; r < U.rows(); ++r)
            for (Eigen::Index c = 0; c < U.cols(); ++c) {
                const cd want = (r == c) ? std::exp(cd(0, -cfg.tau * E0[std::size_t(c)])) : cd(0);
                CHECK(std::abs(U(r, c) - want) < 1e-15);
            }
    }
}

TEST_CASE("bond energies count the boundary correctly") {
    FieldConfig cfg = preset_config("set-i", 2, pi4);
    // L=2 basis 00,01,10,11 -> z pairs (+,+),(+,-),(-,+),(-,-)
    const std::vector<double> open_e = ising_energies(cfg);
    CHECK(open_e == std::vector<double>{1, -1, -1, 1});
    cfg.boundary = Boundary::periodic;  // the single bond is doubled by the wrap
    const std::vector<double> per_e = ising_energies(cfg);
    CHECK(per_e == std::vector<double>{2, -2, -2, 2});
}

TEST_CASE("two-site transverse model composes kick and phase factors") {
    const FieldConfig cfg = preset_config("set-i", 2, pi4);
    const ComplexMatrix U = build_floquet(cfg);
    // Single-site kick in closed form, then column phases of sz sz.
    ComplexMatrix k(2, 2);
    k << cd(std::cos(pi4), 0), cd(0, -std::sin(pi4)), cd(0, -std::sin(pi4)), cd(std::cos(pi4), 0);
    ComplexMatrix want = kron(k, k);
    const std::vector<double> E0 = ising_energies(cfg);
    for (Eigen::Index c = 0; c < 4; ++c) want.col(c) *= std::exp(cd(0, -pi4 * E0[std::size_t(c)]));
    CHECK((U - want).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("kick factor matches a brute-force exponential at L=4") {
    const FieldConfig cfg = preset_config("set-ni", 4, pi4);
    // Dense V = sum_j hx sx_j + hy sy_j, exponentiated by eigendecomposition.
    ComplexMatrix sx(2, 2), sy(2, 2), I2 = ComplexMatrix::Identity(2, 2);
    sx << 0, 1, 1, 0;
    sy << cd(0, 0), cd(0, -1), cd(0, 1), cd(0, 0);
    ComplexMatrix V = ComplexMatrix::Zero(16, 16);
    for (int j = 0; j < 4; ++j) {
        ComplexMatrix term = ComplexMatrix::Identity(1, 1);
        for (int k = 0; k < 4; ++k) {
            const ComplexMatrix& factor =
                (k == j) ? (cfg.hx[std::size_t(j)] * sx + cfg.hy[std::size_t(j)] * sy).eval() : I2;
            term = kron(term, factor);
        }
        V += term;
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(V);
    ComplexMatrix expV = ComplexMatrix::Zero(16, 16);
    for (Eigen::Index i = 0; i < 16; ++i)
        expV += std::exp(cd(0, -cfg.tau * es.eigenvalues()(i))) * es.eigenvectors().col(i) *
                es.eigenvectors().col(i).adjoint();
    CHECK((kick_operator(cfg) - expV).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("floquet operator is unitary for all presets and boundaries") {
    for (const char* name : {"set-i", "set-ni", "set-x"})
        for (Boundary b : {Boundary::open, Boundary::periodic}) {
            const ComplexMatrix U = build_floquet(preset_config(name, 6, pi4, b));
            CHECK(unitarity_residual(U) < 1e-10);
        }
}

TEST_CASE("floquet_power matches iterated products and handles edge cases") {
    const ComplexMatrix U = build_floquet(preset_config("set-ni", 4, 0.7));
    CHECK((floquet_power(U, 0) - ComplexMatrix::Identity(16, 16)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((floquet_power(U, 1) - U).cwiseAbs().maxCoeff() == 0.0);
    ComplexMatrix it = ComplexMatrix::Identity(16, 16);
    for (int k = 0; k < 7; ++k) it = matmul(U, it);
    CHECK((floquet_power(U, 7) - it).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(unitarity_residual(floquet_power(U, 16)) < 1e-9);
    CHECK_THROWS_AS(floquet_power(U, -1), std::invalid_argument);
}

TEST_CASE("transverse kick at tau=pi/4 returns to a product operator after 2L kicks") {
    const int L = 6;
    const FieldConfig cfg = preset_config("set-i", L, pi4);
    const ComplexMatrix U2L = floquet_power(build_floquet(cfg), 2 * L);
    const auto spec = operator_schmidt_spectrum(U2L, half_cut(L));
    CHECK(entanglement_entropies(spec).linear < 1e-10);  // Schmidt rank 1
}

TEST_CASE("transverse kick at tau=pi/4 has flat Schmidt spectra of rank 2^n") {
    const int L = 6;
    const ComplexMatrix U = build_floquet(preset_config("set-i", L, pi4));
    ComplexMatrix Un = U;
    for (int n = 1; n <= 3; ++n) {
        const auto spec = operator_schmidt_spectrum(Un, half_cut(L));
        const double flat = 1.0 / static_cast<double>(1 << n);
        for (std::size_t i = 0; i < spec.weights.size(); ++i) {
            const double want = (i < std::size_t(1 << n)) ? flat : 0.0;
            CHECK(std::abs(spec.weights[i] - want) < 1e-10);
        }
        Un = matmul(U, Un);
    }
}

TEST_CASE("diagonal model commutes with every sz") {
    FieldConfig cfg = preset_config("set-i", 4, 0.9);
    cfg.hx.assign(4, 0.0);  // only hz left
    cfg.hz.assign(4, 0.4);
    cfg.preset.clear();
    const ComplexMatrix U = build_floquet(cfg);
    for (Eigen::Index r = 0; r < 16; ++r)
        for (Eigen::Index c = 0; c < 16; ++c)
            if (r != c) CHECK(std::abs(U(r, c)) == 0.0);
}

TEST_CASE("reflecting the chain leaves entanglement measures unchanged") {
    const int L = 4;
    const ComplexMatrix U = build_floquet(preset_config("set-ni", L, pi4));
    const Eigen::Index dim = 16;
    ComplexMatrix RUR(dim, dim);
    auto rev = [](Eigen::Index b) {
        Eigen::Index r = 0;
        for (int j = 0; j < 4; ++j)
            if ((b >> j) & 1) r |= Eigen::Index(1) << (3 - j);
        return r;
    };
    for (Eigen::Index r = 0; r < dim; ++r)
        for (Eigen::Index c = 0; c < dim; ++c) RUR(rev(r), rev(c)) = U(r, c);
    const auto cut = half_cut(L);
    const auto e1 = entanglement_entropies(operator_schmidt_spectrum(U, cut));
    const auto e2 = entanglement_entropies(operator_schmidt_spectrum(RUR, cut));
    CHECK(e1.linear == doctest::Approx(e2.linear).epsilon(1e-10));
    CHECK(e1.von_neumann == doctest::Approx(e2.von_neumann).epsilon(1e-9));
}

}  // TEST_SUITE
