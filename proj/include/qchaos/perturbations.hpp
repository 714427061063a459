#pragma once

#include "qchaos/algorithms.hpp"
#include "qchaos/rng.hpp"
#include "qchaos/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qchaos {

enum class PerturbationKind { independent, digital, qft_phase };

const char* to_string(PerturbationKind kind);

// epsilon is in radians for rotation angles and a relative fraction for
// phase noise; valid range (0, 1].
struct PerturbationSpec {
    PerturbationKind kind;
    double epsilon;
    std::uint64_t seed;
};

void validate(const PerturbationSpec& spec);

// [[cos phi, sin phi], [-sin phi, cos phi]]
ComplexMatrix single_qubit_rotation(double phi);

// V = O(2, phi_0) (x) ... (x) O(2, phi_{n-1}), each angle uniform in
// [-eps/2, eps/2]; consumes n uniform draws, qubit 0 first.
ComplexMatrix random_rotation_layer(int n, double epsilon, RngStream& rng);

// U' = (DO)V_1 (DO)V_2 ... (DO)V_p H with one independent layer per
// factor. Layers are drawn V_1 first (n uniforms each) from
// RngStream(pert.seed). Throws KindMismatch unless pert.kind is
// independent.
ComplexMatrix perturbed_grover(const GroverSpec& spec, const PerturbationSpec& pert);

// One angle draw defines V_+ (n uniforms); V_- = V_+^{-1}. Returns all
// 2^p sign assignments in binary order: member b uses V_- at factor slot
// i (slot 1 = leftmost) iff bit (p-i) of b is set, so b = 0 is the
// all-plus branch and b = 2^p - 1 the all-minus one. Each member is
// (DO V_{s_1}) ... (DO V_{s_p}) H. Throws FamilyTooLarge for p > 12.
std::vector<ComplexMatrix> digital_grover_family(const GroverSpec& spec, double epsilon,
                                                 std::uint64_t seed);

// QFT circuit with every conditional phase pi/2^{k-j} replaced by
// pi/2^{k-j} * (1 + delta_{jk}), delta uniform in [-eps/2, eps/2] drawn
// independently per gate in (j ascending, k ascending) order.
ComplexMatrix perturbed_qft(int n, double epsilon, RngStream& rng);

} // namespace qchaos
