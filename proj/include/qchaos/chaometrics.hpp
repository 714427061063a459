#pragma once

#include "qchaos/eig.hpp"
#include "qchaos/types.hpp"

#include <functional>
#include <span>
#include <vector>

namespace qchaos {

struct Histogram {
    std::vector<double> bin_edges; // bins + 1 ascending edges
    std::vector<double> densities; // normalized: sum(density * width) = 1
    std::size_t sample_count = 0;

    int bins() const { return static_cast<int>(densities.size()); }
    double bin_center(int i) const { return 0.5 * (bin_edges[i] + bin_edges[i + 1]); }
};

Histogram make_histogram(std::span<const double> values, int bins);

// Same statistic on caller-supplied edges (used to bin two samples onto a
// shared axis); values outside the edge range land in the end bins.
Histogram histogram_with_edges(std::span<const double> values, std::vector<double> edges);

// Mean-normalized nearest-neighbor eigenphase spacings,
// s_i = N (phi_{i+1} - phi_i) / (2 pi), including the circular wrap-around
// gap so a spectrum of size N yields exactly N spacings with mean 1.
struct SpacingSample {
    std::vector<double> spacings;
};

SpacingSample eigenphase_spacings(const EigenSystem& es);

// P(s) = (s pi / 2) exp(-s^2 pi / 4), the level-repulsion law of the
// orthogonal circular ensemble.
double wigner_dyson_pdf(double s);
double wigner_dyson_cdf(double s);

// P(s) = exp(-s): uncorrelated (integrable) spectra.
double poisson_pdf(double s);

// All N^2 rescaled intensities y = N |c|^2 of the eigenvector matrix.
double porter_thomas_pdf(double y); // exp(-y/2)/sqrt(2 pi y); domain y > 0
double porter_thomas_cdf(double y); // erf(sqrt(y/2))
std::vector<double> eigenvector_component_sample(const EigenSystem& es);

// Max over eigenvalues of the (complex-plane) distance to the nearest
// m-th root of unity.
double root_of_unity_defect(const EigenSystem& es, int m);

// One-sample Kolmogorov-Smirnov sup-distance against a cdf, and the
// two-sample variant between empirical distributions.
double ks_distance(std::span<const double> sample, const std::function<double(double)>& cdf);
double ks_distance_two_sample(std::span<const double> a, std::span<const double> b);

// Fixed multimodality rule: strict local maxima of the bin densities that
// exceed threshold_factor times the median bin density.
int count_pronounced_peaks(const Histogram& h, double threshold_factor = 2.0);

} // namespace qchaos
