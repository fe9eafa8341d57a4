#pragma once

#include <string>
#include <vector>

#include "entpow/tensor_core.hpp"

namespace entpow {

enum class Boundary { open, periodic };

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

// Kicked Ising chain parameters. Site convention: sites are 1-based and site 1
// is the most significant qubit of the computational index, so subsystem A
// (sites 1..L/2) is the high half of the index. z_j(b) = 1 - 2*bit_{L-j}(b).
struct FieldConfig {
    int L = 0;
    double tau = 0.0;
    std::vector<double> hx, hy, hz;
    Boundary boundary = Boundary::open;
    std::string preset;  // "set-i" | "set-ni" | "set-x" | "" for custom fields

    bool operator==(const FieldConfig&) const = default;
};

// Named field sets: set-i = (1, 0, 0), set-ni = (0.9045, 0.3457, 0.8090),
// set-x = (1, 0, 1), each homogeneous across sites.
FieldConfig preset_config(const std::string& name, int L, double tau,
                          Boundary boundary = Boundary::open);

void validate(const FieldConfig& cfg);

// Diagonal of H0 = sum_bonds sz sz + sum_j hz_j sz_j over the 2^L basis.
std::vector<double> ising_energies(const FieldConfig& cfg);

// e^{-iV tau} = kron_j [cos(h_j tau) I - i sin(h_j tau) (n_x sx + n_y sy)],
// h_j = |(hx_j, hy_j)|. Single-site terms commute, so the closed form is exact.
ComplexMatrix kick_operator(const FieldConfig& cfg);

// U = e^{-iV tau} e^{-iH0 tau}; the H0 factor is applied as column phases.
ComplexMatrix build_floquet(const FieldConfig& cfg);

// U^n by binary powering. n = 0 gives the identity.
ComplexMatrix floquet_power(const ComplexMatrix& U, long n);

// JSON (de)serialization lives in experiment.hpp with the other file formats.

}  // namespace entpow
