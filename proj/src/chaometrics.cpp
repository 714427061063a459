#include "qchaos/chaometrics.hpp"

#include "qchaos/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qchaos {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
} // namespace

Histogram make_histogram(std::span<const double> values, int bins) {
    if (values.empty()) throw EmptySample("make_histogram: empty sample");
    if (bins < 1) throw DimensionMismatch("make_histogram: need bins >= 1");
    auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    double lo = *lo_it, hi = *hi_it;
    if (lo == hi) { // degenerate range, e.g. a single angle pair
        lo -= 0.5;
        hi += 0.5;
    }
    Histogram h;
    h.sample_count = values.size();
    h.bin_edges.resize(bins + 1);
    const double width = (hi - lo) / bins;
    for (int i = 0; i <= bins; ++i) h.bin_edges[i] = lo + width * i;
    h.bin_edges[bins] = hi;

    std::vector<std::size_t> counts(bins, 0);
    for (double v : values) {
        int b = static_cast<int>((v - lo) / width);
        b = std::clamp(b, 0, bins - 1);
        ++counts[b];
    }
    h.densities.resize(bins);
    const double total = static_cast<double>(values.size());
    for (int i = 0; i < bins; ++i) h.densities[i] = counts[i] / (total * width);
    return h;
}

Histogram histogram_with_edges(std::span<const double> values, std::vector<double> edges) {
    if (values.empty()) throw EmptySample("histogram_with_edges: empty sample");
    if (edges.size() < 2 || !std::is_sorted(edges.begin(), edges.end()))
        throw DimensionMismatch("histogram_with_edges: need ascending edges");
    const int bins = static_cast<int>(edges.size()) - 1;
    Histogram h;
    h.sample_count = values.size();
    h.bin_edges = std::move(edges);
    std::vector<std::size_t> counts(bins, 0);
    for (double v : values) {
        const auto it = std::upper_bound(h.bin_edges.begin(), h.bin_edges.end(), v);
        int b = static_cast<int>(it - h.bin_edges.begin()) - 1;
        b = std::clamp(b, 0, bins - 1);
        ++counts[b];
    }
    h.densities.resize(bins);
    const double total = static_cast<double>(values.size());
    for (int i = 0; i < bins; ++i)
        h.densities[i] = counts[i] / (total * (h.bin_edges[i + 1] - h.bin_edges[i]));
    return h;
}

SpacingSample eigenphase_spacings(const EigenSystem& es) {
    const int n = es.dim();
    if (n < 2) throw DimensionMismatch("eigenphase_spacings: need N >= 2");
    SpacingSample out;
    out.spacings.resize(n);
    const double scale = n / (2.0 * kPi);
    for (int i = 0; i + 1 < n; ++i) out.spacings[i] = scale * (es.phases[i + 1] - es.phases[i]);
    out.spacings[n - 1] = scale * (es.phases[0] + 2.0 * kPi - es.phases[n - 1]);
    return out;
}

double wigner_dyson_pdf(double s) {
    return 0.5 * kPi * s * std::exp(-0.25 * kPi * s * s);
}

double wigner_dyson_cdf(double s) {
    return 1.0 - std::exp(-0.25 * kPi * s * s);
}

double poisson_pdf(double s) { return std::exp(-s); }

double porter_thomas_pdf(double y) {
    if (y <= 0.0) throw std::domain_error("porter_thomas_pdf: need y > 0");
    return std::exp(-0.5 * y) / std::sqrt(2.0 * kPi * y);
}

double porter_thomas_cdf(double y) {
    if (y <= 0.0) return 0.0;
    return std::erf(std::sqrt(0.5 * y));
}

std::vector<double> eigenvector_component_sample(const EigenSystem& es) {
    const int n = es.dim();
    std::vector<double> ys;
    ys.reserve(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) ys.push_back(n * std::norm(es.vectors(i, j)));
    return ys;
}

double root_of_unity_defect(const EigenSystem& es, int m) {
    if (m < 1) throw DimensionMismatch("root_of_unity_defect: need m >= 1");
    double worst = 0.0;
    for (int i = 0; i < es.dim(); ++i) {
        const Complex lambda = std::polar(1.0, -es.phases[i]);
        double best = std::numeric_limits<double>::infinity();
        for (int r = 0; r < m; ++r)
            best = std::min(best, std::abs(lambda - std::polar(1.0, 2.0 * kPi * r / m)));
        worst = std::max(worst, best);
    }
    return worst;
}

double ks_distance(std::span<const double> sample, const std::function<double(double)>& cdf) {
    if (sample.empty()) throw EmptySample("ks_distance: empty sample");
    std::vector<double> sorted(sample.begin(), sample.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    return d;
}

double ks_distance_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw EmptySample("ks_distance_two_sample: empty sample");
    std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    double d = 0.0;
    std::size_t ia = 0, ib = 0;
    while (ia < sa.size() && ib < sb.size()) {
        const double x = std::min(sa[ia], sb[ib]);
        while (ia < sa.size() && sa[ia] <= x) ++ia;
        while (ib < sb.size() && sb[ib] <= x) ++ib;
        d = std::max(d, std::abs(static_cast<double>(ia) / sa.size() -
                                 static_cast<double>(ib) / sb.size()));
    }
    return d;
}

int count_pronounced_peaks(const Histogram& h, double threshold_factor) {
    std::vector<double> sorted = h.densities;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    const double median =
        (n % 2 == 1) ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    const double threshold = threshold_factor * median;

    int peaks = 0;
    const auto& d = h.densities;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] <= threshold) continue;
        const double left = (i > 0) ? d[i - 1] : -1.0;
        const double right = (i + 1 < d.size()) ? d[i + 1] : -1.0;
        if (d[i] > left && d[i] > right) ++peaks;
    }
    return peaks;
}

} // namespace qchaos
