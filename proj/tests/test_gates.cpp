// Copyright 2026 The qhomog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "naive.hpp"
#include "qhomog/error.hpp"
#include "qhomog/gates.hpp"

using namespace qhomog;

TEST_SUITE("gates") {
    TEST_CASE("coupling strength domain") {
        CHECK_NOTHROW(CouplingStrength{0.0});
        CHECK_NOTHROW(CouplingStrength{kHalfPi});
        CHECK_NOTHROW(CouplingStrength{kHalfPi + 1e-16});
        CHECK_THROWS_AS(CouplingStrength{-0.01}, Error);
        CHECK_THROWS_AS(CouplingStrength{1.6}, Error);
        CHECK_THROWS_AS(CouplingStrength{std::nan("")}, Error);
        CouplingStrength right(kHalfPi);
        CHECK(right.c() == 0.0);
        CHECK(right.s() == 1.0);
        CouplingStrength k(0.3);
        CHECK(k.c2() + k.s2() == doctest::Approx(1.0).epsilon(1e-15));
    }

    TEST_CASE("swap and pswap") {
        CHECK((swap_gate() - naive::swap4()).cwiseAbs().maxCoeff() == 0.0);
        for (double eta : {0.0, 0.2, std::numbers::pi / 4, 1.3, kHalfPi}) {
            CouplingStrength k(eta);
            naive::M expected = std::cos(eta) * naive::M::Identity(4, 4) +
                                naive::C(0, std::sin(eta)) * naive::swap4();
            CHECK((pswap(k) - expected).cwiseAbs().maxCoeff() < 1e-15);
            CHECK(is_unitary(pswap(k)));
        }
    }

    TEST_CASE("fredkin permutes |101> and |110> only") {
        ComplexMatrix f = cswap();
        CHECK(is_unitary(f));
        for (int i = 0; i < 8; i++) {
            int expected = i == 5 ? 6 : (i == 6 ? 5 : i);
            for (int j = 0; j < 8; j++) {
                CHECK(f(j, i) == Complex(j == expected ? 1.0 : 0.0, 0.0));
            }
        }
    }

    TEST_CASE("control state") {
        CouplingStrength k(0.4);
        ComplexMatrix ctl = control_state(k);
        CHECK(ctl(0, 0).real() == doctest::Approx(k.c2()));
        CHECK(ctl(1, 1).real() == doctest::Approx(k.s2()));
        CHECK(ctl(0, 1).real() == doctest::Approx(k.c() * k.s()));
        auto b = naive::bloch(ctl);
        BlochVector cb = control_bloch(k);
        CHECK(cb.x == doctest::Approx(b[0]));
        CHECK(cb.y == doctest::Approx(b[1]));
        CHECK(cb.z == doctest::Approx(b[2]));
        CHECK(cb.norm() == doctest::Approx(1.0));
    }

    TEST_CASE("gate identities") {
        ComplexMatrix sw = swap_gate();
        for (double eta : {0.1, 0.7, 1.2}) {
            ComplexMatrix p = pswap(CouplingStrength{eta});
            CHECK((p * sw - sw * p).cwiseAbs().maxCoeff() < 1e-15);
        }
        ComplexMatrix right = pswap(CouplingStrength{kHalfPi});
        CHECK((right - Complex(0, 1) * sw).cwiseAbs().maxCoeff() < 1e-15);

        ComplexMatrix f = cswap();
        CHECK(f.imag().cwiseAbs().maxCoeff() == 0.0);
        CHECK((f - f.transpose()).cwiseAbs().maxCoeff() == 0.0);
        CHECK((f * f - ComplexMatrix::Identity(8, 8)).cwiseAbs().maxCoeff() == 0.0);
    }

    TEST_CASE("control state is pure and |+> at pi/4") {
        for (double eta : {0.0, 0.3, std::numbers::pi / 4, kHalfPi}) {
            ComplexMatrix ctl = control_state(CouplingStrength{eta});
            CHECK((ctl * ctl).trace().real() == doctest::Approx(1.0).epsilon(1e-14));
        }
        BlochVector plus = control_bloch(CouplingStrength{std::numbers::pi / 4});
        CHECK(plus.x == doctest::Approx(1.0));
        CHECK(plus.z == doctest::Approx(0.0).epsilon(1e-15));
    }
}
