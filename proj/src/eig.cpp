#include "qchaos/eig.hpp"

#include "qchaos/errors.hpp"
#include "qchaos/linalg.hpp"
#include "qchaos/rng.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qchaos {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// lambda = exp(-i phi)  =>  phi = -arg(lambda), folded into (-pi, pi].
double phase_of(const Complex& lambda) {
    double phi = -std::arg(lambda);
    if (phi <= -kPi) phi += 2.0 * kPi;
    return phi;
}

// Groups sorted phases into circularly-degenerate clusters: a break sits
// after position i when the gap to the next phase (cyclically) exceeds
// tol. No break at all means one fully degenerate cluster.
std::vector<std::vector<int>> circular_clusters(const Eigen::VectorXd& phases, double tol) {
    const int n = static_cast<int>(phases.size());
    std::vector<int> breaks;
    for (int i = 0; i < n; ++i) {
        const double gap = (i + 1 < n) ? phases[i + 1] - phases[i]
                                       : phases[0] + 2.0 * kPi - phases[n - 1];
        if (gap > tol) breaks.push_back(i);
    }
    std::vector<std::vector<int>> clusters;
    if (breaks.empty()) {
        clusters.emplace_back(n);
        std::iota(clusters.back().begin(), clusters.back().end(), 0);
        return clusters;
    }
    for (std::size_t b = 0; b < breaks.size(); ++b) {
        const int start = (breaks[(b + breaks.size() - 1) % breaks.size()] + 1) % n;
        const int end = breaks[b];
        std::vector<int> idx;
        for (int i = start; ; i = (i + 1) % n) {
            idx.push_back(i);
            if (i == end) break;
        }
        std::sort(idx.begin(), idx.end());
        clusters.push_back(std::move(idx));
    }
    std::sort(clusters.begin(), clusters.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return clusters;
}

// A subspace closed under complex conjugation admits a real orthonormal
// basis; detected by the rank of [Re B | Im B] and confirmed against the
// cluster projector.
bool try_realify(ComplexMatrix& basis) {
    const int k = static_cast<int>(basis.cols());
    RealMatrix ri(basis.rows(), 2 * k);
    ri.leftCols(k) = basis.real();
    ri.rightCols(k) = basis.imag();
    Eigen::BDCSVD<RealMatrix> svd(ri, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s[i] > 1e-8 * s[0]) ++rank;
    if (rank != k) return false;
    RealMatrix real_basis = svd.matrixU().leftCols(k);
    const ComplexMatrix p_old = basis * basis.adjoint();
    const ComplexMatrix p_new =
        (real_basis * real_basis.transpose()).cast<Complex>();
    if ((p_old - p_new).cwiseAbs().maxCoeff() > 1e-8) return false;
    basis = real_basis.cast<Complex>();
    return true;
}

// Deterministic cluster basis: greedy pivoted Gram-Schmidt on the columns
// of the projector, i.e. the orthonormal frame closest to the
// computational basis directions the subspace actually contains.
ComplexMatrix canonical_basis(const ComplexMatrix& basis) {
    const int k = static_cast<int>(basis.cols());
    ComplexMatrix residual = basis * basis.adjoint();
    ComplexMatrix out(basis.rows(), k);
    for (int c = 0; c < k; ++c) {
        Eigen::Index pivot = 0;
        residual.colwise().norm().maxCoeff(&pivot);
        StateVector v = residual.col(pivot);
        v /= v.norm();
        out.col(c) = v;
        residual -= v * (v.adjoint() * residual);
    }
    return out;
}

} // namespace

double default_degeneracy_tolerance(int dim) {
    return 1e-8 * 2.0 * kPi / static_cast<double>(dim);
}

EigenSystem eig_unitary(const ComplexMatrix& u, double degeneracy_tolerance,
                        std::uint64_t seed, ClusterBasis basis_choice) {
    const int n = static_cast<int>(u.rows());
    if (u.cols() != n || n < 1) throw DimensionMismatch("eig_unitary: non-square input");
    const double defect = unitarity_defect(u);
    if (defect > kUnitaryTolerance)
        throw NonUnitaryInput("eig_unitary: unitarity defect " + std::to_string(defect));
    if (degeneracy_tolerance <= 0.0) degeneracy_tolerance = default_degeneracy_tolerance(n);

    // For a unitary (normal) matrix the Schur form is diagonal up to
    // round-off, so the Schur vectors are an exactly orthonormal
    // eigenbasis once grouped by cluster.
    Eigen::ComplexSchur<ComplexMatrix> schur(u);
    if (schur.info() != Eigen::Success)
        throw NonUnitaryInput("eig_unitary: Schur decomposition failed");

    EigenSystem es;
    es.degeneracy_tolerance = degeneracy_tolerance;
    es.phases.resize(n);
    Eigen::VectorXd raw_phases(n);
    for (int i = 0; i < n; ++i) raw_phases[i] = phase_of(schur.matrixT()(i, i));

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return raw_phases[a] < raw_phases[b]; });

    es.vectors.resize(n, n);
    for (int i = 0; i < n; ++i) {
        es.phases[i] = raw_phases[order[i]];
        es.vectors.col(i) = schur.matrixU().col(order[i]);
    }

    es.clusters = circular_clusters(es.phases, degeneracy_tolerance);

    RngStream rng(seed);
    for (const auto& cluster : es.clusters) {
        const int k = static_cast<int>(cluster.size());
        if (k < 2) continue;
        ComplexMatrix basis(n, k);
        for (int c = 0; c < k; ++c) basis.col(c) = es.vectors.col(cluster[c]);

        const bool real_subspace = try_realify(basis);
        if (basis_choice == ClusterBasis::seeded_random) {
            if (real_subspace) {
                basis = basis * haar_orthogonal(k, rng).cast<Complex>();
            } else {
                basis = basis * haar_unitary(k, rng);
            }
        } else {
            basis = canonical_basis(basis);
        }
        for (int c = 0; c < k; ++c) es.vectors.col(cluster[c]) = basis.col(c);
    }
    return es;
}

} // namespace qchaos
