#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace qchaos {

using Complex = std::complex<double>;

// Dense carriers for unitaries and register states. Conventions used
// throughout: basis index b = b_0 b_1 ... b_{n-1} with qubit 0 as the most
// significant bit; a unitary U has eigenvalues lambda = exp(-i*phi).
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

enum class Field { real, cplx };

constexpr double kUnitaryTolerance = 1e-10;

inline int dim_for_qubits(int n) { return 1 << n; }

} // namespace qchaos
