#include "qchaos/algorithms.hpp"

#include "qchaos/errors.hpp"
#include "qchaos/linalg.hpp"

#include <cmath>
#include <string>

namespace qchaos {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
} // namespace

GroverSpec::GroverSpec(int n_qubits, int marked, int iterations)
    : n(n_qubits), xi(marked), p(iterations) {
    if (n < 2) throw DimensionMismatch("GroverSpec: need n >= 2, got " + std::to_string(n));
    if (xi < 0 || xi >= dim_for_qubits(n))
        throw IndexOutOfRange("GroverSpec: marked index " + std::to_string(xi) +
                              " outside [0, " + std::to_string(dim_for_qubits(n)) + ")");
    if (p == 0) p = grover_iterations(n);
    if (p < 1) throw DimensionMismatch("GroverSpec: need p >= 1");
}

QftSpec::QftSpec(int n_qubits, std::optional<int> gate_cutoff)
    : n(n_qubits), cutoff(gate_cutoff) {
    if (n < 1) throw DimensionMismatch("QftSpec: need n >= 1");
    if (cutoff && (*cutoff < 0 || *cutoff > n - 1))
        throw IndexOutOfRange("QftSpec: cutoff " + std::to_string(*cutoff) +
                              " outside [0, " + std::to_string(n - 1) + "]");
}

double grover_theta(int n) {
    return std::asin(1.0 / std::sqrt(static_cast<double>(dim_for_qubits(n))));
}

int grover_iterations(int n) {
    return static_cast<int>(std::floor(kPi / (4.0 * grover_theta(n))));
}

namespace gates {

int bit_reverse(int index, int n) {
    int out = 0;
    for (int b = 0; b < n; ++b) {
        out = (out << 1) | (index & 1);
        index >>= 1;
    }
    return out;
}

void left_apply_single_qubit(ComplexMatrix& m, const Eigen::Matrix2cd& g, int qubit, int n) {
    const int dim = static_cast<int>(m.rows());
    const int mask = 1 << (n - 1 - qubit); // qubit 0 = most significant bit
    for (int i0 = 0; i0 < dim; ++i0) {
        if (i0 & mask) continue;
        const int i1 = i0 | mask;
        const Eigen::RowVectorXcd a = m.row(i0);
        const Eigen::RowVectorXcd b = m.row(i1);
        m.row(i0) = g(0, 0) * a + g(0, 1) * b;
        m.row(i1) = g(1, 0) * a + g(1, 1) * b;
    }
}

void left_apply_conditional_phase(ComplexMatrix& m, int qubit_j, int qubit_k, double phase,
                                  int n) {
    const int dim = static_cast<int>(m.rows());
    const int mask = (1 << (n - 1 - qubit_j)) | (1 << (n - 1 - qubit_k));
    const Complex factor = std::polar(1.0, phase);
    for (int i = 0; i < dim; ++i)
        if ((i & mask) == mask) m.row(i) *= factor;
}

void left_apply_bit_reversal(ComplexMatrix& m, int n) {
    const int dim = static_cast<int>(m.rows());
    for (int i = 0; i < dim; ++i) {
        const int r = bit_reverse(i, n);
        if (r > i) m.row(i).swap(m.row(r));
    }
}

void left_apply_oracle(ComplexMatrix& m, int xi) { m.row(xi) = -m.row(xi); }

void left_apply_diffusion(ComplexMatrix& m) {
    const double scale = 2.0 / static_cast<double>(m.rows());
    const Eigen::RowVectorXcd col_means = scale * m.colwise().sum();
    m = -m;
    m.rowwise() += col_means;
}

} // namespace gates

ComplexMatrix hadamard_all(int n) {
    if (n < 1) throw DimensionMismatch("hadamard_all: need n >= 1");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    ComplexMatrix h1(2, 2);
    h1 << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
    ComplexMatrix out = h1;
    for (int i = 1; i < n; ++i) out = tensor_product(out, h1);
    return out;
}

ComplexMatrix oracle(int n, int xi) {
    const int dim = dim_for_qubits(n);
    if (xi < 0 || xi >= dim)
        throw IndexOutOfRange("oracle: marked index " + std::to_string(xi));
    ComplexMatrix o = ComplexMatrix::Identity(dim, dim);
    o(xi, xi) = -1.0;
    return o;
}

ComplexMatrix diffusion(int n) {
    if (n < 1) throw DimensionMismatch("diffusion: need n >= 1");
    const int dim = dim_for_qubits(n);
    ComplexMatrix d = ComplexMatrix::Constant(dim, dim, 2.0 / dim);
    d.diagonal().array() -= 1.0;
    return d;
}

ComplexMatrix build_grover(const GroverSpec& spec) {
    ComplexMatrix m = hadamard_all(spec.n);
    for (int i = 0; i < spec.p; ++i) {
        gates::left_apply_oracle(m, spec.xi);
        gates::left_apply_diffusion(m);
    }
    return m;
}

namespace {

// Shared builder: bit reversal first, then per qubit j (processed last to
// first so the product reads H_0 S_{0,1}...S_{0,n-1} H_1 ... H_{n-1} F)
// the phase gates S_{j,k} followed by H_j. phase_for lets callers drop or
// perturb individual gates.
template <typename PhaseFn>
ComplexMatrix qft_product(int n, PhaseFn&& phase_for) {
    const int dim = dim_for_qubits(n);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd h1;
    h1 << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;

    ComplexMatrix m = ComplexMatrix::Identity(dim, dim);
    gates::left_apply_bit_reversal(m, n);
    for (int j = n - 1; j >= 0; --j) {
        for (int k = n - 1; k > j; --k) {
            if (const auto phase = phase_for(j, k))
                gates::left_apply_conditional_phase(m, j, k, *phase, n);
        }
        gates::left_apply_single_qubit(m, h1, j, n);
    }
    return m;
}

} // namespace

ComplexMatrix build_qft_circuit(int n) {
    QftSpec spec(n);
    return qft_product(n, [&](int j, int k) -> std::optional<double> {
        return kPi / static_cast<double>(1 << (k - j));
    });
}

ComplexMatrix build_qft_closed(int n) {
    if (n < 1) throw DimensionMismatch("build_qft_closed: need n >= 1");
    const int dim = dim_for_qubits(n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    ComplexMatrix u(dim, dim);
    for (int l = 0; l < dim; ++l)
        for (int k = 0; k < dim; ++k) {
            const long long lk = static_cast<long long>(l) * k % dim;
            u(l, k) = norm * std::polar(1.0, 2.0 * kPi * static_cast<double>(lk) / dim);
        }
    return u;
}

ComplexMatrix build_approximate_qft(const QftSpec& spec) {
    const int m = spec.cutoff.value_or(spec.n - 1);
    return qft_product(spec.n, [&](int j, int k) -> std::optional<double> {
        if (k - j > m) return std::nullopt;
        return kPi / static_cast<double>(1 << (k - j));
    });
}

} // namespace qchaos
