#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "qfade/ansatz.hpp"
#include "support/dense_oracle.hpp"
#include "support/generators.hpp"

using namespace qfade;

TEST_CASE("param_count is 3 * qubits * depth") {
    CHECK(param_count({1, 1}) == 3);
    CHECK(param_count({4, 3}) == 36);
    CHECK(param_count({2, 5}) == 30);
}

TEST_CASE("layer layout: rotation triples then the CNOT ring") {
    const AnsatzSpec spec{2, 1};
    const Circuit circuit = ansatz_circuit(spec, ParameterVector(6, 0.1));
    REQUIRE(circuit.size() == 8);  // 6 rotations + 2 ring CNOTs

    const auto& g = circuit.gates();
    CHECK(g[0].kind == GateKind::RX);
    CHECK(g[1].kind == GateKind::RZ);
    CHECK(g[2].kind == GateKind::RX);
    CHECK(g[0].target == 0);
    CHECK(g[3].target == 1);
    CHECK(g[6].kind == GateKind::CNOT);
    CHECK(g[6].control == 0);
    CHECK(g[6].target == 1);
    CHECK(g[7].control == 1);
    CHECK(g[7].target == 0);
}

TEST_CASE("gate count formula across shapes") {
    auto count = [](int n, int d) {
        return ansatz_circuit({n, d}, ParameterVector(3 * n * d, 0.0)).size();
    };
    CHECK(count(1, 4) == 12);            // no entangler on one qubit
    CHECK(count(3, 2) == 3 * 3 * 2 + 6);  // ring of 3 per layer
    CHECK(count(4, 3) == 36 + 12);
}

TEST_CASE("zero-angle single-qubit ansatz acts as the identity") {
    std::mt19937_64 rng(8);
    const AnsatzSpec spec{1, 1};
    const Circuit circuit = ansatz_circuit(spec, ParameterVector(3, 0.0));
    for (int trial = 0; trial < 10; ++trial) {
        const StateVector input = qfade_test::random_state(rng, 1);
        StateVector state = input;
        state.apply(circuit);
        for (std::size_t k = 0; k < state.dim(); ++k) {
            CHECK(std::abs(state.amplitude(k) - input.amplitude(k)) <= 1e-12);
        }
    }
}

TEST_CASE("zero-angle multi-qubit ansatz fixes |0...0>") {
    const Circuit circuit = ansatz_circuit({3, 2}, ParameterVector(18, 0.0));
    StateVector state(3);
    state.apply(circuit);
    CHECK(std::abs(state.amplitude(0) - cdouble{1.0, 0.0}) <= 1e-12);
}

TEST_CASE("parameter vector length is enforced") {
    CHECK_THROWS_AS(ansatz_circuit({2, 1}, ParameterVector(5, 0.0)), ParamLengthMismatch);
    CHECK_THROWS_AS(ansatz_circuit({2, 1}, ParameterVector(7, 0.0)), ParamLengthMismatch);
}

TEST_CASE("random two-qubit ansatz matches the dense oracle") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        ParameterVector theta(6);
        for (double& t : theta) t = qfade_test::random_angle(rng);
        const Circuit circuit = ansatz_circuit({2, 1}, theta);

        StateVector state(2);
        state.apply(circuit);
        const auto expected =
            qfade_test::oracle_apply_circuit(circuit, StateVector(2).amplitudes());
        for (std::size_t k = 0; k < expected.size(); ++k) {
            CHECK(std::abs(state.amplitude(k) - expected[k]) < 1e-10);
        }
    }
}

TEST_CASE("ansatz preserves the state norm") {
    std::mt19937_64 rng(18);
    for (int trial = 0; trial < 10; ++trial) {
        const AnsatzSpec spec{3, 3};
        const Circuit circuit = ansatz_circuit(spec, init_params(spec, rng()));
        StateVector state = qfade_test::random_state(rng, 3);
        state.apply(circuit);
        CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("the rotation triple reaches <Z> = -1") {
    const Circuit circuit = ansatz_circuit({1, 1}, {std::numbers::pi, 0.0, 0.0});
    StateVector state(1);
    state.apply(circuit);
    CHECK(expectation_z(state, 0) == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("init_params is deterministic per seed") {
    const AnsatzSpec spec{3, 2};
    const ParameterVector a = init_params(spec, 7);
    const ParameterVector b = init_params(spec, 7);
    CHECK(a == b);

    const ParameterVector c = init_params(spec, 8);
    CHECK(a != c);
    CHECK(init_params(spec, 1) != init_params(spec, 2));
}

TEST_CASE("init_params draws lie in [0, 2*pi)") {
    const AnsatzSpec spec{4, 4};
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
        for (double value : init_params(spec, seed)) {
            CHECK(value >= 0.0);
            CHECK(value < 2.0 * std::numbers::pi);
        }
    }
}

TEST_CASE("init_params regression pin") {
    // Frozen output of the documented generator (mt19937_64 high bits);
    // a change here silently breaks every saved seed.
    const ParameterVector theta = init_params({1, 1}, 1);
    REQUIRE(theta.size() == 3);
    CHECK(theta[0] == doctest::Approx(5.702766003213854).epsilon(1e-15));
}
