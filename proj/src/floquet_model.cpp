#include "entpow/floquet_model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace entpow {

std::string to_string(Boundary b) {
    return b == Boundary::open ? "open" : "periodic";
}

Boundary boundary_from_string(const std::string& s) {
    if (s == "open") return Boundary::open;
    if (s == "periodic") return Boundary::periodic;
    throw std::invalid_argument("unknown boundary '" + s + "' (want open|periodic)");
}

FieldConfig preset_config(const std::string& name, int L, double tau, Boundary boundary) {
    std::string key = name;
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    double hx, hy, hz;
    if (key == "set-i") {
        hx = 1.0; hy = 0.0; hz = 0.0;
    } else if (key == "set-ni") {
        hx = 0.9045; hy = 0.3457; hz = 0.8090;
    } else if (key == "set-x") {
        hx = 1.0; hy = 0.0; hz = 1.0;
    } else {
        throw std::invalid_argument("unknown preset '" + name + "' (want set-i|set-ni|set-x)");
    }
    FieldConfig cfg;
    cfg.L = L;
    cfg.tau = tau;
    cfg.hx.assign(static_cast<std::size_t>(L), hx);
    cfg.hy.assign(static_cast<std::size_t>(L), hy);
    cfg.hz.assign(static_cast<std::size_t>(L), hz);
    cfg.boundary = boundary;
    cfg.preset = key;
    validate(cfg);
    return cfg;
}

void validate(const FieldConfig& cfg) {
    if (cfg.L <= 0 || cfg.L % 2 != 0)
        throw std::invalid_argument("FieldConfig: L must be even and positive");
    if (!(cfg.tau > 0.0))
        throw std::invalid_argument("FieldConfig: tau must be positive");
    const auto n = static_cast<std::size_t>(cfg.L);
    if (cfg.hx.size() != n || cfg.hy.size() != n || cfg.hz.size() != n)
        throw std::invalid_argument("FieldConfig: field arrays must have length L");
}

std::vector<double> ising_energies(const FieldConfig& cfg) {
    validate(cfg);
    const int L = cfg.L;
    const std::size_t dim = std::size_t(1) << L;
    std::vector<double> E(dim, 0.0);
    auto z = [L](std::size_t b, int site) {  // site 1-based, site 1 = MSB
        return 1.0 - 2.0 * static_cast<double>((b >> (L - site)) & 1u);
    };
    for (std::size_t b = 0; b < dim; ++b) {
        double e = 0.0;
        for (int j = 1; j < L; ++j) e += z(b, j) * z(b, j + 1);
        if (cfg.boundary == Boundary::periodic) e += z(b, L) * z(b, 1);
        for (int j = 1; j <= L; ++j) e += cfg.hz[static_cast<std::size_t>(j - 1)] * z(b, j);
        E[b] = e;
    }
    return E;
}

ComplexMatrix kick_operator(const FieldConfig& cfg) {
    validate(cfg);
    ComplexMatrix K = ComplexMatrix::Identity(1, 1);
    for (int j = 0; j < cfg.L; ++j) {
        const double hx = cfg.hx[static_cast<std::size_t>(j)];
        const double hy = cfg.hy[static_cast<std::size_t>(j)];
        const double h = std::hypot(hx, hy);
        ComplexMatrix kj(2, 2);
        if (h == 0.0) {
            kj = ComplexMatrix::Identity(2, 2);
        } else {
            const double c = std::cos(h * cfg.tau), s = std::sin(h * cfg.tau);
            const double nx = hx / h, ny = hy / h;
            // cos(h tau) I - i sin(h tau) (nx sx + ny sy)
            kj(0, 0) = cd(c, 0.0);
            kj(1, 1) = cd(c, 0.0);
            kj(0, 1) = cd(-s * ny, -s * nx);
            kj(1, 0) = cd(s * ny, -s * nx);
        }
        K = kron(K, kj);
    }
    return K;
}

ComplexMatrix build_floquet(const FieldConfig& cfg) {
    const std::vector<double> E0 = ising_energies(cfg);
    ComplexMatrix U = kick_operator(cfg);
    for (Eigen::Index c = 0; c < U.cols(); ++c)
        U.col(c) *= std::exp(cd(0.0, -cfg.tau * E0[static_cast<std::size_t>(c)]));
    return U;
}

ComplexMatrix floquet_power(const ComplexMatrix& U, long n) {
    if (n < 0) throw std::invalid_argument("floquet_power: n must be nonnegative");
    if (U.rows() != U.cols()) throw std::invalid_argument("floquet_power: matrix not square");
    ComplexMatrix result = ComplexMatrix::Identity(U.rows(), U.cols());
    ComplexMatrix base = U;
    while (n > 0) {
        if (n & 1) result = matmul(base, result);
        n >>= 1;
        if (n > 0) base = matmul(base, base);
    }
    return result;
}

}  // namespace entpow
