#include "qchaos/dynamics.hpp"

#include "qchaos/errors.hpp"
#include "qchaos/linalg.hpp"
#include "qchaos/parallel.hpp"
#include "qchaos/perturbations.hpp"
#include "qchaos/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qchaos {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
} // namespace

OverlapSeries overlap_series(const ComplexMatrix& u, const ComplexMatrix& u_prime,
                             const StateVector& psi0, int k_max) {
    if (u.rows() != u_prime.rows() || u.cols() != psi0.size() || u_prime.cols() != psi0.size())
        throw DimensionMismatch("overlap_series: dimension mismatch");
    if (k_max < 1) throw DimensionMismatch("overlap_series: need k_max >= 1");

    OverlapSeries out;
    out.iterations.resize(k_max);
    out.fidelities.resize(k_max);
    StateVector a = psi0, b = psi0;
    for (int k = 1; k <= k_max; ++k) {
        a = u * a;
        b = u_prime * b;
        out.iterations[k - 1] = k;
        out.fidelities[k - 1] = std::norm(a.dot(b));
    }
    return out;
}

std::vector<std::pair<double, double>> fourier_magnitude(const OverlapSeries& series) {
    const int len = static_cast<int>(series.fidelities.size());
    if (len < 8) throw DimensionMismatch("fourier_magnitude: need series length >= 8");
    const double mean =
        std::accumulate(series.fidelities.begin(), series.fidelities.end(), 0.0) / len;

    std::vector<std::pair<double, double>> spectrum;
    spectrum.reserve(len / 2 + 1);
    for (int j = 0; j <= len / 2; ++j) {
        Complex acc = 0.0;
        for (int k = 0; k < len; ++k) {
            const double arg = -2.0 * kPi * j * k / len;
            acc += (series.fidelities[k] - mean) * std::polar(1.0, arg);
        }
        spectrum.emplace_back(static_cast<double>(j) / len, std::abs(acc));
    }
    return spectrum;
}

double spectral_top_mass_ratio(const std::vector<std::pair<double, double>>& spectrum,
                               int top_count) {
    std::vector<double> power;
    power.reserve(spectrum.size());
    for (const auto& [freq, mag] : spectrum)
        if (freq > 0.0) power.push_back(mag * mag);
    if (power.empty()) throw EmptySample("spectral_top_mass_ratio: no nonzero frequencies");
    std::sort(power.begin(), power.end(), std::greater<>());
    const double total = std::accumulate(power.begin(), power.end(), 0.0);
    if (total == 0.0) return 0.0;
    const int take = std::min<int>(top_count, static_cast<int>(power.size()));
    const double head = std::accumulate(power.begin(), power.begin() + take, 0.0);
    return head / total;
}

double angle(const StateVector& a, const StateVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("angle: dimension mismatch");
    const double na = a.norm(), nb = b.norm();
    if (na == 0.0 || nb == 0.0) throw ZeroVector("angle: zero vector");
    const double c = std::clamp(std::abs(a.dot(b)) / (na * nb), 0.0, 1.0);
    return std::acos(c);
}

namespace {

AngleEnsemble analyze_angles(const std::vector<StateVector>& states, int bins) {
    AngleEnsemble out;
    const std::size_t count = states.size();
    out.raw_angles.reserve(count * (count - 1) / 2);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t k = i + 1; k < count; ++k)
            out.raw_angles.push_back(angle(states[i], states[k]));

    out.mean_angle = std::accumulate(out.raw_angles.begin(), out.raw_angles.end(), 0.0) /
                     static_cast<double>(out.raw_angles.size());
    out.unfolded.reserve(out.raw_angles.size());
    for (double a : out.raw_angles) out.unfolded.push_back(a / out.mean_angle);
    out.histogram = make_histogram(out.unfolded, bins);
    return out;
}

} // namespace

AngleEnsemble angle_ensemble(const std::vector<ComplexMatrix>& matrices,
                             const StateVector& psi0, int bins) {
    if (matrices.size() < 2) throw TooFewMatrices("angle_ensemble: need at least 2 matrices");
    std::vector<StateVector> states;
    states.reserve(matrices.size());
    for (const auto& m : matrices) states.push_back(qchaos::apply(m, psi0));
    return analyze_angles(states, bins);
}

AngleEnsemble random_vector_baseline(int dim, int count, Field field, std::uint64_t seed,
                                     int bins) {
    if (count < 2) throw TooFewMatrices("random_vector_baseline: need count >= 2");
    std::vector<StateVector> states;
    states.reserve(count);
    for (int i = 0; i < count; ++i)
        states.push_back(random_state(dim, field, derive_seed(seed, i)));
    return analyze_angles(states, bins);
}

std::vector<ErrorSweepRow> matrix_error_sweep(const GroverSpec& spec,
                                              std::span<const double> epsilons,
                                              int samples_per_eps, std::uint64_t seed) {
    if (epsilons.empty()) throw EmptySample("matrix_error_sweep: no strengths given");
    if (samples_per_eps < 1)
        throw DimensionMismatch("matrix_error_sweep: need samples_per_eps >= 1");

    const ComplexMatrix base = build_grover(spec);
    const double base_mean = base.cwiseAbs().mean();

    const int total = static_cast<int>(epsilons.size()) * samples_per_eps;
    std::vector<double> errors(total);
    parallel_for(total, [&](int idx) {
        const double eps = epsilons[idx / samples_per_eps];
        const PerturbationSpec pert{PerturbationKind::independent, eps,
                                    derive_seed(seed, static_cast<std::uint64_t>(idx))};
        const ComplexMatrix perturbed = perturbed_grover(spec, pert);
        errors[idx] = (perturbed - base).cwiseAbs().mean() / base_mean;
    });

    std::vector<ErrorSweepRow> rows;
    rows.reserve(epsilons.size());
    for (std::size_t e = 0; e < epsilons.size(); ++e) {
        double sum = 0.0;
        for (int j = 0; j < samples_per_eps; ++j) sum += errors[e * samples_per_eps + j];
        rows.push_back({epsilons[e], sum / samples_per_eps});
    }
    return rows;
}

double log_log_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw DimensionMismatch("log_log_slope: need two samples of equal size >= 2");
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace qchaos
