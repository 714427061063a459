#include <doctest.h>

#include "oracles.hpp"

#include "qchaos/algorithms.hpp"
#include "qchaos/chaometrics.hpp"
#include "qchaos/eig.hpp"
#include "qchaos/errors.hpp"
#include "qchaos/linalg.hpp"

#include <Eigen/SVD>

#include <cmath>

using namespace qchaos;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("hadamard_all") {
    const ComplexMatrix h1 = hadamard_all(1);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(h1(0, 0) - Complex(s)) < 1e-15);
    CHECK(std::abs(h1(1, 1) - Complex(-s)) < 1e-15);

    for (int n = 1; n <= 5; ++n) {
        const ComplexMatrix h = hadamard_all(n);
        const int dim = 1 << n;
        CHECK(max_abs(h * h - ComplexMatrix::Identity(dim, dim)) <= 1e-12);
        // uniform superposition from |0...0>
        StateVector e0 = StateVector::Zero(dim);
        e0[0] = 1.0;
        const StateVector s0 = qchaos::apply(h, e0);
        for (int i = 0; i < dim; ++i)
            CHECK(std::abs(s0[i] - Complex(1.0 / std::sqrt(dim))) < 1e-14);
        // every entry has magnitude 1/sqrt(N)
        CHECK(std::abs(h.cwiseAbs().maxCoeff() - 1.0 / std::sqrt(dim)) < 1e-15);
    }
}

TEST_CASE("oracle") {
    const ComplexMatrix o = oracle(2, 3);
    ComplexMatrix expect = ComplexMatrix::Identity(4, 4);
    expect(3, 3) = -1.0;
    CHECK(max_abs(o - expect) == 0.0);
    CHECK(max_abs(o * o - ComplexMatrix::Identity(4, 4)) == 0.0);

    StateVector marked = StateVector::Zero(4);
    marked[3] = 1.0;
    CHECK((qchaos::apply(o, marked) + marked).cwiseAbs().maxCoeff() == 0.0);

    CHECK_THROWS_AS(oracle(2, 4), IndexOutOfRange);
    CHECK_THROWS_AS(oracle(2, -1), IndexOutOfRange);
}

TEST_CASE("diffusion") {
    const ComplexMatrix d1 = diffusion(1);
    ComplexMatrix x(2, 2);
    x << 0, 1, 1, 0;
    CHECK(max_abs(d1 - x) == 0.0);

    for (int n = 1; n <= 8; ++n) {
        const ComplexMatrix d = diffusion(n);
        const int dim = 1 << n;
        CHECK(max_abs(d * d - ComplexMatrix::Identity(dim, dim)) <= 1e-12);
        CHECK(max_abs(d - d.transpose()) == 0.0);
        for (int i = 0; i < dim; ++i)
            CHECK(std::abs(d.row(i).sum() - Complex(1.0)) < 1e-12); // N*(2/N) - 1
    }
}

TEST_CASE("iteration count") {
    CHECK(grover_iterations(2) == 1); // theta = pi/6, pi/(4 theta) = 1.5
    CHECK(grover_iterations(5) == 4);
    CHECK(grover_iterations(7) == 8);
    CHECK(grover_theta(2) == doctest::Approx(kPi / 6.0).epsilon(1e-14));
}

TEST_CASE("build_grover: success amplitude matches the rotation-angle formula") {
    for (int n = 2; n <= 8; ++n) {
        const GroverSpec spec(n, 2);
        const ComplexMatrix u = build_grover(spec);
        const double theta = grover_theta(n);
        const double expected = std::pow(std::sin((2 * spec.p + 1) * theta), 2);
        CHECK(std::abs(std::norm(u(2, 0)) - expected) <= 1e-10);
        CHECK(unitarity_defect(u) <= 1e-10);
        CHECK(u.imag().cwiseAbs().maxCoeff() <= 1e-14);
    }
    CHECK(std::norm(build_grover(GroverSpec(2, 1))(1, 0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::norm(build_grover(GroverSpec(5, 2))(2, 0)) ==
          doctest::Approx(0.9991823155432941).epsilon(1e-10));
}

TEST_CASE("build_grover agrees with the literal operator product") {
    for (int n = 2; n <= 6; ++n) {
        const GroverSpec spec(n, 1);
        CHECK(max_abs(build_grover(spec) -
                      oracles::grover_literal_product(n, 1, spec.p)) <= 1e-12);
    }
}

TEST_CASE("build_grover first column matches independent state propagation") {
    const GroverSpec spec(6, 5);
    const ComplexMatrix u = build_grover(spec);
    const auto psi = oracles::grover_state_propagation(6, 5, spec.p);
    for (int i = 0; i < 64; ++i) CHECK(std::abs(u(i, 0) - Complex(psi[i])) <= 1e-12);
}

TEST_CASE("time-reversal covariance: almost-symmetric within measured envelopes") {
    for (int n = 4; n <= 8; ++n) {
        const int dim = 1 << n;
        auto [sym, antisym] = sym_antisym_split(build_grover(GroverSpec(n, 2)));
        CHECK(antisym <= 1.5 / dim);
        CHECK(sym >= 0.5 / std::sqrt(static_cast<double>(dim)));
    }
}

TEST_CASE("spectrum structure and sixth-root defect (recorded, not bounded)") {
    const EigenSystem es = eig_unitary(build_grover(GroverSpec(5, 2)), 0.0, 1);
    int far = 0;
    for (int i = 0; i < es.dim(); ++i) {
        const Complex lambda = std::polar(1.0, -es.phases[i]);
        if (std::abs(lambda - 1.0) > 1e-6 && std::abs(lambda + 1.0) > 1e-6) ++far;
    }
    CHECK(far <= 4);

    const double defect = root_of_unity_defect(es, 6);
    MESSAGE("sixth-root defect at n=5: ", defect);
    CHECK(defect < 1.0); // well inside the root spacing, value merely recorded
}

TEST_CASE("qft circuit equals the closed form for n = 1..8") {
    for (int n = 1; n <= 8; ++n) {
        const ComplexMatrix c = build_qft_circuit(n);
        const ComplexMatrix f = build_qft_closed(n);
        CHECK(max_abs(c - f) <= 1e-12);
        CHECK(unitarity_defect(c) <= 1e-12);
    }
    // n=1 has no phase gates or reversal: plain Hadamard
    CHECK(max_abs(build_qft_circuit(1) - hadamard_all(1)) <= 1e-15);
}

TEST_CASE("closed-form transform identities") {
    for (int n : {2, 3, 5, 7}) {
        const int dim = 1 << n;
        const ComplexMatrix u = build_qft_closed(n);
        CHECK(max_abs(u - u.transpose()) == 0.0); // symmetric by construction
        const ComplexMatrix u2 = u * u;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                const double expect = (i == (dim - j) % dim) ? 1.0 : 0.0;
                CHECK(std::abs(u2(i, j) - Complex(expect)) <= 1e-12);
            }
        CHECK(max_abs(u2 * u2 - ComplexMatrix::Identity(dim, dim)) <= 1e-12);
    }
}

TEST_CASE("approximate transform: cutoff semantics") {
    const int n = 5;
    const ComplexMatrix exact = build_qft_circuit(n);
    CHECK(max_abs(build_approximate_qft(QftSpec(n, n - 1)) - exact) == 0.0);

    // cutoff 0 drops every phase gate: Hadamards times the bit reversal
    ComplexMatrix expect = ComplexMatrix::Identity(1 << n, 1 << n);
    gates::left_apply_bit_reversal(expect, n);
    expect = hadamard_all(n) * expect;
    CHECK(max_abs(build_approximate_qft(QftSpec(n, 0)) - expect) <= 1e-12);

    CHECK_THROWS_AS(build_approximate_qft(QftSpec(5, 5)), IndexOutOfRange);
    CHECK_THROWS_AS(build_approximate_qft(QftSpec(5, -1)), IndexOutOfRange);
}

TEST_CASE("approximate transform error decreases with the kept gate span") {
    const int n = 6;
    const ComplexMatrix exact = build_qft_closed(n);
    double prev = 1e9;
    for (int m = 1; m <= n - 1; ++m) {
        Eigen::BDCSVD<ComplexMatrix> svd(build_approximate_qft(QftSpec(n, m)) - exact);
        const double err = svd.singularValues()(0);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev <= 1e-12); // full span reproduces the exact circuit
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(GroverSpec(1, 0), DimensionMismatch);
    CHECK_THROWS_AS(GroverSpec(3, 8), IndexOutOfRange);
    CHECK_THROWS_AS(QftSpec(0), DimensionMismatch);
    CHECK(GroverSpec(5, 2).p == 4);
    CHECK(GroverSpec(5, 2, 9).p == 9);
}
