#include "qchaos/linalg.hpp"

#include <Eigen/QR>

#include <cmath>

namespace qchaos {

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Eigen::Index ra = a.rows(), ca = a.cols();
    const Eigen::Index rb = b.rows(), cb = b.cols();
    ComplexMatrix out(ra * rb, ca * cb);
    for (Eigen::Index i = 0; i < ra; ++i)
        for (Eigen::Index j = 0; j < ca; ++j)
            out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    return out;
}

StateVector apply(const ComplexMatrix& u, const StateVector& psi) {
    if (u.cols() != psi.size())
        throw DimensionMismatch("apply: matrix is " + std::to_string(u.rows()) + "x" +
                                std::to_string(u.cols()) + ", state has dim " +
                                std::to_string(psi.size()));
    return u * psi;
}

Complex inner(const StateVector& a, const StateVector& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("inner: dims " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
    return a.dot(b); // Eigen conjugates the left argument
}

double unitarity_defect(const ComplexMatrix& u) {
    if (u.rows() != u.cols()) throw DimensionMismatch("unitarity_defect: non-square input");
    ComplexMatrix g = u.adjoint() * u;
    g.diagonal().array() -= 1.0;
    return g.cwiseAbs().maxCoeff();
}

StateVector& normalize(StateVector& psi) {
    const double n = psi.norm();
    if (n == 0.0) throw ZeroVector("normalize: zero state");
    psi /= n;
    return psi;
}

StateVector random_state(int dim, Field field, std::uint64_t seed) {
    RngStream rng(seed);
    StateVector psi(dim);
    for (int i = 0; i < dim; ++i) {
        if (field == Field::cplx) {
            const double re = rng.normal();
            const double im = rng.normal();
            psi[i] = Complex(re, im);
        } else {
            psi[i] = Complex(rng.normal(), 0.0);
        }
    }
    return normalize(psi);
}

std::pair<double, double> sym_antisym_split(const ComplexMatrix& u) {
    if (u.rows() != u.cols()) throw DimensionMismatch("sym_antisym_split: non-square input");
    const double sym = (0.5 * (u + u.transpose())).cwiseAbs().mean();
    const double antisym = (0.5 * (u - u.transpose())).cwiseAbs().mean();
    return {sym, antisym};
}

RealMatrix haar_orthogonal(int dim, RngStream& rng) {
    RealMatrix g(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) g(i, j) = rng.normal();
    Eigen::HouseholderQR<RealMatrix> qr(g);
    RealMatrix q = qr.householderQ();
    const RealMatrix& r = qr.matrixQR();
    for (int k = 0; k < dim; ++k)
        if (r(k, k) < 0.0) q.col(k) = -q.col(k);
    return q;
}

ComplexMatrix haar_unitary(int dim, RngStream& rng) {
    ComplexMatrix g(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(i, j) = Complex(re, im);
        }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix& r = qr.matrixQR();
    for (int k = 0; k < dim; ++k) {
        const Complex d = r(k, k);
        const double a = std::abs(d);
        q.col(k) *= (a == 0.0) ? Complex(1.0, 0.0) : d / a;
    }
    return q;
}

} // namespace qchaos
