#include "entpow/spectral_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "entpow/util.hpp"

namespace entpow {

std::vector<Eigen::Index> bit_reversal_permutation(int L) {
    if (L <= 0) throw std::invalid_argument("bit_reversal_permutation: L must be positive");
    const Eigen::Index dim = Eigen::Index(1) << L;
    std::vector<Eigen::Index> rev(static_cast<std::size_t>(dim));
    for (Eigen::Index b = 0; b < dim; ++b) {
        Eigen::Index r = 0;
        for (int j = 0; j < L; ++j)
            if ((b >> j) & 1) r |= Eigen::Index(1) << (L - 1 - j);
        rev[static_cast<std::size_t>(b)] = r;
    }
    return rev;
}

std::pair<ComplexMatrix, ComplexMatrix> parity_sectors(const ComplexMatrix& U,
                                                       const FieldConfig& cfg) {
    validate(cfg);
    const Eigen::Index dim = Eigen::Index(1) << cfg.L;
    if (U.rows() != dim || U.cols() != dim)
        throw std::invalid_argument("parity_sectors: dimension does not match L");
    const std::vector<Eigen::Index> rev = bit_reversal_permutation(cfg.L);

    double residual = 0.0;
    for (Eigen::Index c = 0; c < dim; ++c)
        for (Eigen::Index r = 0; r < dim; ++r)
            residual = std::max(residual, std::abs(U(rev[r], rev[c]) - U(r, c)));
    if (!(residual < 1e-10))
        throw std::invalid_argument("parity_sectors: reflection symmetry broken, ||RUR - U|| = " +
                                    std::to_string(residual));

    // Symmetric basis: fixed points as-is, pairs (e_b + e_{rb})/sqrt(2);
    // antisymmetric: (e_b - e_{rb})/sqrt(2). Each basis vector has at most two
    // nonzero components, so sector matrices are assembled by gathering.
    struct BasisVec {
        Eigen::Index i1, i2;  // i2 = -1 for fixed points
        double w1, w2;
    };
    std::vector<BasisVec> even, odd;
    const double rt = 1.0 / std::sqrt(2.0);
    for (Eigen::Index b = 0; b < dim; ++b) {
        const Eigen::Index rb = rev[static_cast<std::size_t>(b)];
        if (rb == b)
            even.push_back({b, -1, 1.0, 0.0});
        else if (b < rb) {
            even.push_back({b, rb, rt, rt});
            odd.push_back({b, rb, rt, -rt});
        }
    }

    auto project = [&](const std::vector<BasisVec>& basis) {
        const Eigen::Index d = static_cast<Eigen::Index>(basis.size());
        ComplexMatrix sector(d, d);
        ComplexVector col(dim);
        for (Eigen::Index j = 0; j < d; ++j) {
            const BasisVec& bj = basis[static_cast<std::size_t>(j)];
            col = bj.w1 * U.col(bj.i1);
            if (bj.i2 >= 0) col += bj.w2 * U.col(bj.i2);
            for (Eigen::Index i = 0; i < d; ++i) {
                const BasisVec& bi = basis[static_cast<std::size_t>(i)];
                cd v = bi.w1 * col(bi.i1);
                if (bi.i2 >= 0) v += bi.w2 * col(bi.i2);
                sector(i, j) = v;
            }
        }
        return sector;
    };

    return {project(even), project(odd)};
}

SpectralReport spacing_statistics(const std::vector<double>& phases) {
    if (phases.size() < 50)
        throw std::invalid_argument("spacing_statistics: need at least 50 phases");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> th = phases;
    for (double& t : th) {
        t = std::fmod(t, two_pi);
        if (t < 0) t += two_pi;
    }
    std::sort(th.begin(), th.end());
    const std::size_t d = th.size();
    const double scale = static_cast<double>(d) / two_pi;

    std::vector<double> s(d);
    for (std::size_t k = 0; k + 1 < d; ++k) s[k] = (th[k + 1] - th[k]) * scale;
    s[d - 1] = (th[0] + two_pi - th[d - 1]) * scale;  // cyclic wrap

    std::vector<double> ratios(d);
    for (std::size_t k = 0; k < d; ++k) {
        const double a = s[k], b = s[(k + 1) % d];
        const double hi = std::max(a, b);
        ratios[k] = (hi > 0.0) ? std::min(a, b) / hi : 1.0;
    }

    SpectralReport rep;
    rep.phases = std::move(th);
    rep.mean_ratio = pairwise_sum(ratios) / static_cast<double>(d);
    rep.spacings = std::move(s);
    rep.ratios = std::move(ratios);
    return rep;
}

std::vector<std::pair<double, double>> number_variance(const std::vector<double>& phases,
                                                       const std::vector<double>& r_values,
                                                       int origins) {
    if (phases.size() < 2) throw std::invalid_argument("number_variance: too few phases");
    if (origins < 1) throw std::invalid_argument("number_variance: origins must be positive");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double d = static_cast<double>(phases.size());

    // Unfolded positions on a circle of circumference d.
    std::vector<double> x(phases.size());
    for (std::size_t k = 0; k < phases.size(); ++k) {
        double t = std::fmod(phases[k], two_pi);
        if (t < 0) t += two_pi;
        x[k] = t * d / two_pi;
    }
    std::sort(x.begin(), x.end());

    auto count_below = [&x](double t) {
        return static_cast<double>(std::lower_bound(x.begin(), x.end(), t) - x.begin());
    };

    std::vector<std::pair<double, double>> out;
    out.reserve(r_values.size());
    for (double r : r_values) {
        if (!(r > 0.0) || r >= d)
            throw std::invalid_argument("number_variance: window width outside (0, span)");
        std::vector<double> dev(static_cast<std::size_t>(origins));
        for (int m = 0; m < origins; ++m) {
            const double o = d * static_cast<double>(m) / static_cast<double>(origins);
            const double hi = o + r;
            double cnt;
            if (hi <= d)
                cnt = count_below(hi) - count_below(o);
            else  // window wraps past the origin of the circle
                cnt = (d - count_below(o)) + count_below(hi - d);
            dev[static_cast<std::size_t>(m)] = (cnt - r) * (cnt - r);
        }
        out.emplace_back(r, pairwise_sum(dev) / static_cast<double>(origins));
    }
    return out;
}

double check_false_trs(const FieldConfig& cfg, bool identity_g) {
    validate(cfg);
    const ComplexMatrix U = build_floquet(cfg);
    const Eigen::Index dim = U.rows();
    ComplexVector g = ComplexVector::Ones(dim);
    if (!identity_g) {
        const std::vector<double> E0 = ising_energies(cfg);
        std::vector<double> theta(static_cast<std::size_t>(cfg.L));
        for (int j = 0; j < cfg.L; ++j)
            theta[static_cast<std::size_t>(j)] =
                std::atan2(cfg.hy[static_cast<std::size_t>(j)], cfg.hx[static_cast<std::size_t>(j)]);
        for (Eigen::Index b = 0; b < dim; ++b) {
            double rot = 0.0;
            for (int j = 1; j <= cfg.L; ++j) {
                const double z = 1.0 - 2.0 * static_cast<double>((b >> (cfg.L - j)) & 1);
                rot += theta[static_cast<std::size_t>(j - 1)] * z;
            }
            // The H0 phase enters with the opposite sign to the evolution
            // because the kick factor is applied after the Ising factor.
            g(b) = std::exp(cd(0.0, -rot)) * std::exp(cd(0.0, cfg.tau * E0[static_cast<std::size_t>(b)]));
        }
    }
    double residual = 0.0;
    for (Eigen::Index c = 0; c < dim; ++c)
        for (Eigen::Index r = 0; r < dim; ++r) {
            const cd lhs = g(r) * std::conj(U(r, c)) / g(c);
            const cd rhs = std::conj(U(c, r));
            residual = std::max(residual, std::abs(lhs - rhs));
        }
    return residual;
}

}  // namespace entpow
