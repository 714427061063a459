#pragma once

#include "qchaos/errors.hpp"
#include "qchaos/rng.hpp"
#include "qchaos/types.hpp"

#include <utility>

namespace qchaos {

// Kronecker product; the left factor is the most significant one, i.e.
// result[(iA*dimB + iB), (jA*dimB + jB)] = A(iA,jA) * B(iB,jB).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

StateVector apply(const ComplexMatrix& u, const StateVector& psi);

Complex inner(const StateVector& a, const StateVector& b);

// max_{ij} |(U^dagger U - I)_{ij}|
double unitarity_defect(const ComplexMatrix& u);

StateVector& normalize(StateVector& psi);

// i.i.d. standard-normal components (re then im per component for the
// complex field), then normalized. Consumes dim (real) or 2*dim (complex)
// normal draws from RngStream(seed).
StateVector random_state(int dim, Field field, std::uint64_t seed);

// Mean entrywise |(U + U^T)/2| and |(U - U^T)/2|.
std::pair<double, double> sym_antisym_split(const ComplexMatrix& u);

// Haar-distributed orthogonal/unitary matrices (Ginibre + QR with the
// R-diagonal phase fix). Entries drawn column-major; k*k normals for the
// orthogonal case, 2*k*k for the unitary one.
RealMatrix haar_orthogonal(int dim, RngStream& rng);
ComplexMatrix haar_unitary(int dim, RngStream& rng);

inline double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace qchaos
