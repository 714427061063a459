#pragma once

#include "qchaos/types.hpp"

#include <optional>

namespace qchaos {

// Grover instance: n qubits, marked index xi, iteration count p.
// p defaults to grover_iterations(n) when not given.
struct GroverSpec {
    int n;
    int xi;
    int p;

    GroverSpec(int n_qubits, int marked, int iterations = 0);
};

struct QftSpec {
    int n;
    std::optional<int> cutoff; // keep only phase gates with k - j <= cutoff

    explicit QftSpec(int n_qubits, std::optional<int> gate_cutoff = std::nullopt);
};

double grover_theta(int n);      // asin(1/sqrt(N))
int grover_iterations(int n);    // floor(pi / (4 theta))

// H = H_0 (x) ... (x) H_{n-1}; every entry is +-1/sqrt(N).
ComplexMatrix hadamard_all(int n);

// Diagonal phase flip on the marked state: O_ii = 1 - 2*delta_{i,xi}.
ComplexMatrix oracle(int n, int xi);

// Inversion about the mean: D_ij = 2/N - delta_ij.
ComplexMatrix diffusion(int n);

// U_G = (DO)^p H, evaluated exactly (O negates one row of the running
// product, D replaces it by 2/N * column sums minus itself).
ComplexMatrix build_grover(const GroverSpec& spec);

// Gate-level transform: conditional phase gates S_{j,k} with phase
// pi/2^{k-j}, Hadamards, and the bit-reversal permutation applied first.
// Matches build_qft_closed entrywise.
ComplexMatrix build_qft_circuit(int n);

// Closed form U_{lk} = exp(i 2 pi l k / N) / sqrt(N).
ComplexMatrix build_qft_closed(int n);

// Same circuit with every S_{j,k} of span k - j > cutoff omitted.
ComplexMatrix build_approximate_qft(const QftSpec& spec);

// In-place left multiplication by gates embedded in the full register
// space; shared by the algorithm and perturbation builders.
namespace gates {

int bit_reverse(int index, int n);

// m <- (G_q (x) I) m for a one-qubit gate G acting on qubit q (MSB order).
void left_apply_single_qubit(ComplexMatrix& m, const Eigen::Matrix2cd& g, int qubit, int n);

// m <- S m where S multiplies rows with bits j and k both set by the phase.
void left_apply_conditional_phase(ComplexMatrix& m, int qubit_j, int qubit_k, double phase, int n);

// m <- F m, F the bit-reversal permutation.
void left_apply_bit_reversal(ComplexMatrix& m, int n);

void left_apply_oracle(ComplexMatrix& m, int xi);
void left_apply_diffusion(ComplexMatrix& m);

} // namespace gates

} // namespace qchaos
