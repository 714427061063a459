#pragma once

#include "qchaos/algorithms.hpp"
#include "qchaos/chaometrics.hpp"
#include "qchaos/types.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace qchaos {

struct OverlapSeries {
    std::vector<int> iterations;   // k = 1 .. k_max
    std::vector<double> fidelities;
};

// fidelity(k) = |<U^k psi0, U'^k psi0>|^2, by iterated state application.
OverlapSeries overlap_series(const ComplexMatrix& u, const ComplexMatrix& u_prime,
                             const StateVector& psi0, int k_max);

// Magnitudes of the DFT of the mean-removed fidelity sequence; one-sided,
// frequencies j / L in cycles per iteration for j = 0 .. floor(L/2).
std::vector<std::pair<double, double>> fourier_magnitude(const OverlapSeries& series);

// Share of total spectral power carried by the top_count largest
// nonzero-frequency components.
double spectral_top_mass_ratio(const std::vector<std::pair<double, double>>& spectrum,
                               int top_count = 3);

// alpha = arccos(|<a, b>| / (|a| |b|)) in [0, pi/2], argument clamped.
double angle(const StateVector& a, const StateVector& b);

struct AngleEnsemble {
    std::vector<double> raw_angles; // all pairs i < k
    double mean_angle = 0.0;
    std::vector<double> unfolded;   // raw / mean, mean exactly 1
    Histogram histogram;
};

// Propagates psi0 once by every matrix and analyzes all pairwise angles.
AngleEnsemble angle_ensemble(const std::vector<ComplexMatrix>& matrices,
                             const StateVector& psi0, int bins = 50);

// Same statistic over independent random states; member i is drawn from
// RngStream(derive_seed(seed, i)).
AngleEnsemble random_vector_baseline(int dim, int count, Field field, std::uint64_t seed,
                                     int bins = 50);

struct ErrorSweepRow {
    double epsilon;
    double normalized_error; // mean_ij |U'-U| / mean_ij |U|, averaged over samples
};

// Independent-kind perturbations; sample j of epsilon index e uses the
// derived seed stream e * samples_per_eps + j.
std::vector<ErrorSweepRow> matrix_error_sweep(const GroverSpec& spec,
                                              std::span<const double> epsilons,
                                              int samples_per_eps, std::uint64_t seed);

// Least-squares slope of log(y) against log(x).
double log_log_slope(std::span<const double> x, std::span<const double> y);

} // namespace qchaos
