#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "qikm/distance.hpp"
#include "test_util.hpp"

using namespace qikm;

namespace {

/// 1/2 ||rho - sigma||_tr for single-qubit pure states, via the eigenvalues
/// of the 2x2 Hermitian difference of density matrices.
double trace_distance_eigen_oracle(const QuantumState& a, const QuantumState& b) {
    std::array<std::array<Amplitude, 2>, 2> delta;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            delta[i][j] = a.amplitude(i) * std::conj(a.amplitude(j)) - b.amplitude(i) * std::conj(b.amplitude(j));

    // delta is Hermitian and traceless: eigenvalues +-sqrt(p^2 + |q|^2).
    const double p = delta[0][0].real();
    const double q2 = std::norm(delta[0][1]);
    const double lambda = std::sqrt(p * p + q2);
    return lambda;  // (|+l| + |-l|) / 2
}

}  // namespace

TEST_SUITE("distance") {

TEST_CASE("fidelity construction clamps tiny excursions and rejects junk") {
    CHECK(Fidelity(1.0 + 5e-11).value() == 1.0);
    CHECK(Fidelity(-5e-11).value() == 0.0);
    CHECK(Fidelity(0.25).value() == 0.25);
    CHECK_THROWS_AS(Fidelity(1.5), std::invalid_argument);
    CHECK_THROWS_AS(Fidelity(-0.1), std::invalid_argument);
}

TEST_CASE("angle fidelity closed form") {
    const std::vector<double> half{0.5};
    CHECK(fidelity_angle(half, half).value() == doctest::Approx(0.5).epsilon(1e-15));

    const std::vector<double> zeros{0.0, 0.0, 0.0};
    const std::vector<double> ones{1.0, 1.0, 1.0};
    CHECK(fidelity_angle(zeros, ones).value() == doctest::Approx(1.0).epsilon(1e-12));  // all diffs -1
    CHECK(fidelity_angle(ones, zeros).value() < 1e-12);                                 // a diff of +1

    CHECK_THROWS_AS(fidelity_angle(std::vector<double>{0.1}, std::vector<double>{0.1, 0.2}),
                    std::invalid_argument);
}

TEST_CASE("angle fidelity is asymmetric") {
    const std::vector<double> x{1.0}, c{0.0};
    CHECK(fidelity_angle(x, c).value() != fidelity_angle(c, x).value());
    CHECK(fidelity_angle(x, c).value() < 1e-12);
    CHECK(fidelity_angle(c, x).value() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("amplitude fidelity closed form") {
    const std::vector<double> v{0.3, 0.7};
    CHECK(fidelity_amplitude(v, v).value() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fidelity_amplitude({1.0, 0.0}, {0.0, 1.0}).value() == 0.0);
    CHECK(fidelity_amplitude({1.0, 1.0}, {1.0, 0.0}).value() == doctest::Approx(0.5).epsilon(1e-12));

    SUBCASE("zero-vector extension") {
        const std::vector<double> zero{0.0, 0.0};
        CHECK(fidelity_amplitude(zero, zero).value() == 1.0);
        CHECK(fidelity_amplitude(zero, v).value() == 0.0);
        CHECK(fidelity_amplitude(v, zero).value() == 0.0);
    }
}

TEST_CASE("hybrid fidelity closed form") {
    const std::vector<double> x{0.4, 0.6, 0.5};
    CHECK(fidelity_hybrid(x, x, {0, 1}).value() == doctest::Approx(0.5).epsilon(1e-12));

    // Orthogonal pair slices kill the product regardless of the rest.
    const std::vector<double> a{1.0, 0.0, 0.2};
    const std::vector<double> b{0.0, 1.0, 0.2};
    CHECK(fidelity_hybrid(a, b, {0, 1}).value() == 0.0);

    // Equal pair but a +1 difference in the remainder also gives zero.
    const std::vector<double> top{0.5, 0.5, 1.0};
    const std::vector<double> bottom{0.5, 0.5, 0.0};
    CHECK(fidelity_hybrid(top, bottom, {0, 1}).value() < 1e-12);
}

TEST_CASE("statevector oracle matches each closed form") {
    std::mt19937 gen(41);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    SUBCASE("angle") {
        for (int trial = 0; trial < 100; ++trial) {
            const int m = 1 + trial % 6;
            const auto x = qikm::test::random_scaled_vector(gen, m);
            const auto c = qikm::test::random_scaled_vector(gen, m);
            std::vector<double> diff(m);
            for (int k = 0; k < m; ++k) diff[k] = x[k] - c[k];
            const double oracle = fidelity_oracle(zero_state(m), encode_angle(diff)).value();
            CHECK(std::abs(fidelity_angle(x, c).value() - oracle) < 1e-12);
        }
    }

    SUBCASE("amplitude") {
        for (int trial = 0; trial < 100; ++trial) {
            const int m = 1 + trial % 8;
            auto x = qikm::test::random_scaled_vector(gen, m);
            auto c = qikm::test::random_scaled_vector(gen, m);
            x[0] += 0.1;  // keep both nonzero
            c[0] += 0.1;
            const double oracle = fidelity_oracle(encode_amplitude(c), encode_amplitude(x)).value();
            CHECK(std::abs(fidelity_amplitude(x, c).value() - oracle) < 1e-12);
        }
    }

    SUBCASE("hybrid") {
        for (int trial = 0; trial < 100; ++trial) {
            const int m = 3 + trial % 6;
            auto x = qikm::test::random_scaled_vector(gen, m);
            auto c = qikm::test::random_scaled_vector(gen, m);
            const int p0 = trial % m;
            const int p1 = (p0 + 1 + trial % (m - 1)) % m;
            x[p0] += 0.1;
            c[p0] += 0.1;

            std::vector<double> diff, zeros;
            for (int k = 0; k < m; ++k) {
                if (k == p0 || k == p1) continue;
                diff.push_back(x[k] - c[k]);
                zeros.push_back(-1.0);  // theta 0: reference stays |0...0>
            }
            const QuantumState sx = encode_hybrid(x, {p0, p1}, diff);
            const QuantumState sc = encode_hybrid(c, {p0, p1}, zeros);
            const double oracle = fidelity_oracle(sc, sx).value();
            CHECK(std::abs(fidelity_hybrid(x, c, {p0, p1}).value() - oracle) < 1e-12);
        }
    }
}

TEST_CASE("swap test probability and round trip") {
    CHECK(swap_test_p0(Fidelity(1.0)) == 1.0);
    CHECK(swap_test_p0(Fidelity(0.0)) == 0.5);
    CHECK(swap_test_p0(Fidelity(0.5)) == 0.75);

    for (int i = 0; i <= 100; ++i) {
        const double f = i / 100.0;
        CHECK(std::abs(2.0 * swap_test_p0(Fidelity(f)) - 1.0 - f) < 1e-12);
    }
}

TEST_CASE("bures distance values and monotonicity") {
    CHECK(bures_distance(Fidelity(1.0)) == doctest::Approx(0.0));
    CHECK(bures_distance(Fidelity(0.0)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(bures_distance(Fidelity(0.25)) == doctest::Approx(1.0).epsilon(1e-15));

    double prev = bures_distance(Fidelity(0.0));
    for (int i = 1; i <= 100; ++i) {
        const double cur = bures_distance(Fidelity(i / 100.0));
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("trace distance values and eigenvalue oracle") {
    CHECK(trace_distance_pure(Fidelity(1.0)) == doctest::Approx(0.0));
    CHECK(trace_distance_pure(Fidelity(0.0)) == doctest::Approx(1.0));
    CHECK(trace_distance_pure(Fidelity(0.75)) == doctest::Approx(0.5).epsilon(1e-15));

    std::mt19937 gen(43);
    for (int trial = 0; trial < 100; ++trial) {
        const QuantumState a = qikm::test::random_state(gen, 1);
        const QuantumState b = qikm::test::random_state(gen, 1);
        const double closed = trace_distance_pure(fidelity_oracle(a, b));
        CHECK(std::abs(closed - trace_distance_eigen_oracle(a, b)) < 1e-10);
    }
}

TEST_CASE("euclidean distance") {
    const std::vector<double> x{0.1, 0.2};
    CHECK(euclidean_distance(x, x) == 0.0);
    CHECK(euclidean_distance({0.0, 0.0}, {3.0, 4.0}) == doctest::Approx(5.0));
    CHECK_THROWS_AS(euclidean_distance(std::vector<double>{1.0}, std::vector<double>{1.0, 2.0}),
                    std::invalid_argument);

    std::mt19937 gen(47);
    std::uniform_real_distribution<double> value(-5.0, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> a(6), b(6);
        for (int k = 0; k < 6; ++k) {
            a[k] = value(gen);
            b[k] = value(gen);
        }
        double sum = 0.0;
        for (int k = 0; k < 6; ++k) sum += (a[k] - b[k]) * (a[k] - b[k]);
        CHECK(std::abs(euclidean_distance(a, b) - std::sqrt(sum)) < 1e-12);
    }
}

TEST_CASE("weighted quantum distance") {
    const std::vector<double> x{0.7};
    CHECK(quantum_distance(x, x, DistanceMode::QuantumAngle) == 0.0);

    // The stated form is asymmetric: fidelity vanishes at a +1 difference but
    // saturates at -1.
    CHECK(quantum_distance(std::vector<double>{1.0}, std::vector<double>{0.0}, DistanceMode::QuantumAngle) <
          1e-12);
    CHECK(quantum_distance(std::vector<double>{0.0}, std::vector<double>{1.0}, DistanceMode::QuantumAngle) ==
          doctest::Approx(2.0).epsilon(1e-12));

    CHECK(quantum_distance(std::vector<double>{1.0, 0.0}, std::vector<double>{0.0, 1.0},
                           DistanceMode::QuantumAmplitude) == 0.0);

    CHECK_THROWS_AS(quantum_distance(std::vector<double>{1.0, 0.0, 0.0}, std::vector<double>{0.0, 1.0, 0.0},
                                     DistanceMode::QuantumHybrid),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        quantum_distance(std::vector<double>{1.0}, std::vector<double>{0.0}, DistanceMode::ClassicalEuclidean),
        std::invalid_argument);
}

TEST_CASE("all fidelities stay inside [0, 1] on random scaled input") {
    std::mt19937 gen(53);
    for (int trial = 0; trial < 10000; ++trial) {
        const int m = 3 + trial % 5;
        const auto x = qikm::test::random_scaled_vector(gen, m);
        const auto c = qikm::test::random_scaled_vector(gen, m);
        for (double f : {fidelity_angle(x, c).value(), fidelity_amplitude(x, c).value(),
                         fidelity_hybrid(x, c, {0, 1}).value()}) {
            CHECK(f >= 0.0);
            CHECK(f <= 1.0);
        }
    }
}

TEST_CASE("bures and trace forms induce the same ordering") {
    std::mt19937 gen(59);
    AssignmentMetric bures{DistanceMode::QuantumAngle, DistanceForm::Bures, false, std::nullopt};
    AssignmentMetric trace{DistanceMode::QuantumAngle, DistanceForm::Trace, false, std::nullopt};
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = qikm::test::random_scaled_vector(gen, 4);
        const auto c1 = qikm::test::random_scaled_vector(gen, 4);
        const auto c2 = qikm::test::random_scaled_vector(gen, 4);
        const bool bures_prefers_c1 = assignment_distance(x, c1, bures) < assignment_distance(x, c2, bures);
        const bool trace_prefers_c1 = assignment_distance(x, c1, trace) < assignment_distance(x, c2, trace);
        CHECK(bures_prefers_c1 == trace_prefers_c1);
    }
}

TEST_CASE("assignment metric variants") {
    const std::vector<double> x{0.2, 0.8};
    const std::vector<double> c{0.5, 0.5};

    AssignmentMetric euclid;
    CHECK(assignment_distance(x, c, euclid) == doctest::Approx(euclidean_distance(x, c)));

    AssignmentMetric weighted{DistanceMode::QuantumAngle, DistanceForm::Weighted, false, std::nullopt};
    CHECK(assignment_distance(x, c, weighted) ==
          doctest::Approx(quantum_distance(x, c, DistanceMode::QuantumAngle)));

    AssignmentMetric dissim{DistanceMode::QuantumAngle, DistanceForm::Weighted, true, std::nullopt};
    const double f = fidelity_angle(x, c).value();
    CHECK(assignment_distance(x, c, dissim) ==
          doctest::Approx(2.0 * (1.0 - f) * euclidean_distance(x, c)));

    AssignmentMetric bures_form{DistanceMode::QuantumAngle, DistanceForm::Bures, false, std::nullopt};
    CHECK(assignment_distance(x, c, bures_form) == doctest::Approx(bures_distance(Fidelity(f))));
}

}  // TEST_SUITE
