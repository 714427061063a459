#pragma once

#include "qchaos/types.hpp"

#include <cstdint>
#include <vector>

namespace qchaos {

// Unitary eigendecomposition with explicit handling of degenerate
// subspaces. Eigenvalues are written lambda_k = exp(-i * phases[k]) with
// phases ascending in (-pi, pi]; vectors.col(k) is the matching
// eigenvector. Phases closer than degeneracy_tolerance (circularly, so a
// cluster at eigenvalue -1 may straddle the -pi/+pi cut) form one cluster;
// each cluster's entry lists the member indices in ascending order.
struct EigenSystem {
    Eigen::VectorXd phases;
    ComplexMatrix vectors;
    std::vector<std::vector<int>> clusters;
    double degeneracy_tolerance = 0.0;

    int dim() const { return static_cast<int>(phases.size()); }
};

// Basis choice inside each degenerate cluster:
//   seeded_random - Haar-random rotation (orthogonal when the subspace is
//                   closed under conjugation and so admits a real basis,
//                   unitary otherwise), reproducible from the seed;
//   canonical     - deterministic, seed-independent basis obtained by
//                   pivoted Gram-Schmidt on the cluster projector's
//                   columns (maximally aligned with the computational
//                   basis).
enum class ClusterBasis { seeded_random, canonical };

// 1e-8 of the mean level spacing 2 pi / N, in phase units.
double default_degeneracy_tolerance(int dim);

// Throws NonUnitaryInput when unitarity_defect(u) > kUnitaryTolerance.
// Pass degeneracy_tolerance <= 0 to use the default.
// Seeded-random rotations consume, per cluster of size k > 1 in ascending
// order of first member index, k*k normal draws (real rotation) or 2*k*k
// (complex rotation) from RngStream(seed).
EigenSystem eig_unitary(const ComplexMatrix& u, double degeneracy_tolerance,
                        std::uint64_t seed,
                        ClusterBasis basis = ClusterBasis::seeded_random);

} // namespace qchaos
