// Copyright 2026 The decosim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "doctest.h"

#include "decosim/errors.hpp"
#include "decosim/metrics.hpp"
#include "decosim/state.hpp"
#include "helpers.hpp"

using namespace decosim;

TEST_CASE("ket places the amplitude at the big-endian index") {
    const StateVector zero = ket("0");
    CHECK(zero.n_qubits == 1);
    CHECK(zero.amplitudes[0] == Complex(1.0, 0.0));
    CHECK(zero.amplitudes[1] == Complex(0.0, 0.0));

    const StateVector six = ket("110");
    CHECK(six.dim() == 8);
    CHECK(six.amplitudes[6] == Complex(1.0, 0.0));

    const StateVector twenty_eight = ket("11100");
    CHECK(twenty_eight.dim() == 32);
    CHECK(twenty_eight.amplitudes[28] == Complex(1.0, 0.0));
    CHECK(twenty_eight.amplitudes.cwiseAbs().sum() == doctest::Approx(1.0));
}

TEST_CASE("ket rejects bad bitstrings") {
    CHECK_THROWS_AS(ket(""), ConfigError);
    CHECK_THROWS_AS(ket("10x"), ConfigError);
}

TEST_CASE("product_state basics") {
    SUBCASE("single basis pair equals ket") {
        const StateVector psi = product_state({{1.0, 0.0}});
        CHECK((psi.amplitudes - ket("0").amplitudes).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("Hadamard image of |0>") {
        const double s = 1.0 / std::sqrt(2.0);
        const StateVector psi = product_state({{s, s}});
        CHECK(std::abs(psi.amplitudes[0]) == doctest::Approx(0.7071).epsilon(1e-3));
        CHECK(std::abs(psi.amplitudes[1]) == doctest::Approx(0.7071).epsilon(1e-3));
    }
    SUBCASE("0.8|0> + 0.6|1>") {
        const StateVector psi = product_state({{0.8, 0.6}});
        CHECK(psi.amplitudes[0] == Complex(0.8, 0.0));
        CHECK(psi.amplitudes[1] == Complex(0.6, 0.0));
    }
    SUBCASE("unnormalized pair is rejected") {
        CHECK_THROWS_AS(product_state({{0.8, 0.7}}), ConfigError);
    }
}

TEST_CASE("product_state of basis pairs equals ket of the bitstring") {
    for (const char* bits : {"0", "101", "1100", "01011"}) {
        std::vector<std::pair<Complex, Complex>> pairs;
        for (const char* p = bits; *p; ++p) {
            pairs.emplace_back(*p == '0' ? 1.0 : 0.0, *p == '1' ? 1.0 : 0.0);
        }
        const StateVector via_product = product_state(pairs);
        const StateVector via_ket = ket(bits);
        CHECK((via_product.amplitudes - via_ket.amplitudes).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("density_from_ensemble on the printed pure state") {
    const DensityMatrix rho = density_from_ensemble({product_state({{0.8, 0.6}})}, {1.0});
    ComplexMatrix want(2, 2);
    want << 0.64, 0.48, 0.48, 0.36;
    CHECK(test_helpers::max_diff(rho.mat, want) <= 1e-15);
}

TEST_CASE("density_from_ensemble of an even mixture is maximally mixed") {
    const DensityMatrix rho = density_from_ensemble({ket("0"), ket("1")}, {0.5, 0.5});
    CHECK(test_helpers::max_diff(rho.mat, 0.5 * identity(2)) <= 1e-15);
}

TEST_CASE("density_from_ensemble basis projector") {
    const DensityMatrix rho = pure_density(ket("110"));
    for (Eigen::Index r = 0; r < 8; ++r) {
        for (Eigen::Index c = 0; c < 8; ++c) {
            const Complex want = (r == 6 && c == 6) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            CHECK(rho.mat(r, c) == want);
        }
    }
}

TEST_CASE("density_from_ensemble input validation") {
    CHECK_THROWS_AS(density_from_ensemble({ket("0"), ket("10")}, {0.5, 0.5}), ConfigError);
    CHECK_THROWS_AS(density_from_ensemble({ket("0")}, {0.9}), ConfigError);
    CHECK_THROWS_AS(density_from_ensemble({ket("0"), ket("1")}, {1.5, -0.5}), ConfigError);
}

TEST_CASE("validate reports deviations") {
    SUBCASE("maximally mixed passes with zero trace deviation") {
        const ValidationReport report = validate({1, 0.5 * identity(2)});
        CHECK(report.pass);
        CHECK(report.trace_deviation == doctest::Approx(0.0));
    }
    SUBCASE("rank-1 projector has minimum eigenvalue 0") {
        ComplexMatrix m(2, 2);
        m << 0.64, 0.48, 0.48, 0.36;
        const ValidationReport report = validate({1, m});
        CHECK(report.pass);
        CHECK(report.min_eigenvalue == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("trace violation fails") {
        ComplexMatrix m = ComplexMatrix::Zero(2, 2);
        m(0, 0) = 1.1;
        const ValidationReport report = validate({1, m});
        CHECK_FALSE(report.pass);
        CHECK(report.trace_deviation == doctest::Approx(0.1));
    }
}

TEST_CASE("purity of pure and mixed constructions") {
    std::mt19937 rng(21);
    const DensityMatrix pure = pure_density(test_helpers::random_pure(rng, 2));
    CHECK(purity(pure) == doctest::Approx(1.0).epsilon(1e-9));

    const DensityMatrix mixed = density_from_ensemble({ket("0"), ket("1")}, {0.5, 0.5});
    CHECK(purity(mixed) == doctest::Approx(0.5).epsilon(1e-12));
}
