#include "qchaos/perturbations.hpp"

#include "qchaos/errors.hpp"
#include "qchaos/linalg.hpp"

#include <cmath>
#include <optional>

namespace qchaos {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
} // namespace

const char* to_string(PerturbationKind kind) {
    switch (kind) {
        case PerturbationKind::independent: return "independent";
        case PerturbationKind::digital: return "digital";
        case PerturbationKind::qft_phase: return "qft-phase";
    }
    return "?";
}

void validate(const PerturbationSpec& spec) {
    if (!(spec.epsilon > 0.0) || spec.epsilon > 1.0)
        throw KindMismatch("perturbation strength must lie in (0, 1], got " +
                           std::to_string(spec.epsilon));
}

ComplexMatrix single_qubit_rotation(double phi) {
    ComplexMatrix r(2, 2);
    const double c = std::cos(phi), s = std::sin(phi);
    r << c, s, -s, c;
    return r;
}

ComplexMatrix random_rotation_layer(int n, double epsilon, RngStream& rng) {
    if (n < 1) throw DimensionMismatch("random_rotation_layer: need n >= 1");
    ComplexMatrix layer = single_qubit_rotation(rng.uniform(-epsilon / 2.0, epsilon / 2.0));
    for (int q = 1; q < n; ++q)
        layer = tensor_product(layer,
                               single_qubit_rotation(rng.uniform(-epsilon / 2.0, epsilon / 2.0)));
    return layer;
}

namespace {

// (DO V_1)(DO V_2)...(DO V_p) H, applied right to left.
ComplexMatrix grover_with_layers(const GroverSpec& spec,
                                 const std::vector<ComplexMatrix>& layers) {
    ComplexMatrix m = hadamard_all(spec.n);
    for (int i = spec.p - 1; i >= 0; --i) {
        m = layers[i] * m;
        gates::left_apply_oracle(m, spec.xi);
        gates::left_apply_diffusion(m);
    }
    return m;
}

} // namespace

ComplexMatrix perturbed_grover(const GroverSpec& spec, const PerturbationSpec& pert) {
    if (pert.kind != PerturbationKind::independent)
        throw KindMismatch(std::string("perturbed_grover expects the independent kind, got ") +
                           to_string(pert.kind));
    validate(pert);
    RngStream rng(pert.seed);
    std::vector<ComplexMatrix> layers;
    layers.reserve(spec.p);
    for (int i = 0; i < spec.p; ++i)
        layers.push_back(random_rotation_layer(spec.n, pert.epsilon, rng));
    return grover_with_layers(spec, layers);
}

std::vector<ComplexMatrix> digital_grover_family(const GroverSpec& spec, double epsilon,
                                                 std::uint64_t seed) {
    validate(PerturbationSpec{PerturbationKind::digital, epsilon, seed});
    if (spec.p > 12)
        throw FamilyTooLarge("digital family has 2^" + std::to_string(spec.p) + " members");

    RngStream rng(seed);
    const ComplexMatrix v_plus = random_rotation_layer(spec.n, epsilon, rng);
    const ComplexMatrix v_minus = v_plus.transpose(); // inverse of a real rotation

    const int members = 1 << spec.p;
    std::vector<ComplexMatrix> family;
    family.reserve(members);
    std::vector<ComplexMatrix> layers(spec.p);
    for (int b = 0; b < members; ++b) {
        for (int i = 0; i < spec.p; ++i) {
            const bool minus = (b >> (spec.p - 1 - i)) & 1;
            layers[i] = minus ? v_minus : v_plus;
        }
        family.push_back(grover_with_layers(spec, layers));
    }
    return family;
}

ComplexMatrix perturbed_qft(int n, double epsilon, RngStream& rng) {
    if (n < 2) throw DimensionMismatch("perturbed_qft: need n >= 2");
    validate(PerturbationSpec{PerturbationKind::qft_phase, epsilon, 0});

    // Draw order is fixed (j ascending, k ascending) regardless of the
    // order the circuit applies the gates in.
    std::vector<double> factors;
    factors.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 0; j < n - 1; ++j)
        for (int k = j + 1; k < n; ++k)
            factors.push_back(1.0 + rng.uniform(-epsilon / 2.0, epsilon / 2.0));

    auto gate_index = [n](int j, int k) {
        // offset of (j, k) in the (j asc, k asc) enumeration
        return j * (2 * n - j - 1) / 2 + (k - j - 1);
    };

    const int dim = dim_for_qubits(n);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd h1;
    h1 << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;

    ComplexMatrix m = ComplexMatrix::Identity(dim, dim);
    gates::left_apply_bit_reversal(m, n);
    for (int j = n - 1; j >= 0; --j) {
        for (int k = n - 1; k > j; --k) {
            const double phase =
                kPi / static_cast<double>(1 << (k - j)) * factors[gate_index(j, k)];
            gates::left_apply_conditional_phase(m, j, k, phase, n);
        }
        gates::left_apply_single_qubit(m, h1, j, n);
    }
    return m;
}

} // namespace qchaos
