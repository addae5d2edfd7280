/*
   Copyright 2026 The sympcomp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sympcomp/matrix.hpp"

using namespace sympcomp;

namespace {

RingMatrix random_alternating(const Ring& r, std::size_t n, std::mt19937_64& rng) {
    RingMatrix m(r, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = RingElem::zero(r);
        for (std::size_t j = i + 1; j < n; ++j) {
            m.at(i, j) = RingElem::from_int(r, static_cast<long>(rng() % 19) - 9);
            m.at(j, i) = -m.at(i, j);
        }
    }
    return m;
}

RingMatrix random_square(const Ring& r, std::size_t n, std::mt19937_64& rng) {
    RingMatrix m(r, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = RingElem::from_int(r, static_cast<long>(rng() % 7) - 3);
    return m;
}

} // namespace

TEST_CASE("determinant basics") {
    Ring z = ring_ZZ();
    RingMatrix m = RingMatrix::from_rows(
        z, {{RingElem::from_int(z, 2), RingElem::from_int(z, 3)},
            {RingElem::from_int(z, 5), RingElem::from_int(z, 7)}});
    CHECK(m.det() == RingElem::from_int(z, -1));
    CHECK(RingMatrix::identity(z, 5).det().is_one());
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        RingMatrix a = random_square(z, 4, rng), b = random_square(z, 4, rng);
        CHECK((a * b).det() == a.det() * b.det());
    }
}

TEST_CASE("pfaffian squares to the determinant") {
    std::mt19937_64 rng(1);
    for (const Ring& r : {ring_ZZ(), ring_mod(101)})
        for (int t = 0; t < 25; ++t)
            for (std::size_t n : {2, 4, 6}) {
                RingMatrix m = random_alternating(r, n, rng);
                RingElem pf = m.pfaffian();
                CHECK(m.det() == pf * pf);
            }
}

TEST_CASE("pfaffian of the standard form is 1") {
    for (std::size_t k = 1; k <= 4; ++k) {
        CHECK(psi_form(ring_ZZ(), k).pfaffian().is_one());
        CHECK(psi_form(ring_mod(5), k).pfaffian().is_one());
    }
}

TEST_CASE("pfaffian congruence transport") {
    std::mt19937_64 rng(2);
    Ring r = ring_mod(101);
    for (int t = 0; t < 50; ++t) {
        RingMatrix v = random_alternating(r, 4, rng);
        RingMatrix phi = random_square(r, 4, rng);
        CHECK(congruence(v, phi).pfaffian() == v.pfaffian() * phi.det());
    }
}

TEST_CASE("symbolic pfaffian identity det = Pf^2") {
    std::vector<std::string> names{"a12", "a13", "a14", "a23", "a24", "a34"};
    Ring p = ring_poly(ring_QQ(), names);
    RingMatrix m(p, 4, 4);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        m.at(i, i) = RingElem::zero(p);
        for (std::size_t j = i + 1; j < 4; ++j) {
            m.at(i, j) = RingElem::variable(p, names[idx++]);
            m.at(j, i) = -m.at(i, j);
        }
    }
    RingElem pf = m.pfaffian();
    CHECK(pf == RingElem::variable(p, "a12") * RingElem::variable(p, "a34") -
                    RingElem::variable(p, "a13") * RingElem::variable(p, "a24") +
                    RingElem::variable(p, "a14") * RingElem::variable(p, "a23"));
    CHECK(m.det() == pf * pf);
}

TEST_CASE("inverse via adjugate") {
    std::mt19937_64 rng(3);
    Ring r = ring_mod(101);
    int done = 0;
    while (done < 10) {
        RingMatrix m = random_square(r, 4, rng);
        if (m.det().is_zero()) continue;
        CHECK((m * m.inverse()).is_identity());
        ++done;
    }
    Ring z = ring_ZZ();
    RingMatrix two(z, 2, 2);
    two.at(0, 0) = two.at(1, 1) = RingElem::from_int(z, 2);
    two.at(0, 1) = two.at(1, 0) = RingElem::zero(z);
    CHECK_THROWS(two.inverse()); // det 4 is not a unit of ZZ
}

TEST_CASE("alternating form caching and perp") {
    Ring z = ring_ZZ();
    AlternatingForm p2 = alternating_form(psi_form(z, 1));
    AlternatingForm p4 = perp_form(p2, p2);
    CHECK(p4.matrix == psi_form(z, 2));
    CHECK(p4.pfaffian.is_one());
    CHECK_THROWS_AS(alternating_form(RingMatrix::identity(z, 2)), NotAlternating);
    RingMatrix odd(z, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) odd.at(i, j) = RingElem::zero(z);
    CHECK_THROWS_AS(odd.pfaffian(), OddSize);
}

TEST_CASE("elementary matrices") {
    Ring z = ring_ZZ();
    RingElem l = RingElem::from_int(z, 5);
    RingMatrix e = elementary_matrix(z, 3, 1, 2, l);
    CHECK(e.at(0, 1) == l);
    CHECK(e.det().is_one());
    CHECK_THROWS_AS(elementary_matrix(z, 3, 2, 2, l), DiagonalIndex);
    std::vector<RingElem> v{RingElem::from_int(z, 1), RingElem::from_int(z, 0),
                            RingElem::from_int(z, 0)};
    // right action: v * e_12(5) adds 5*v1 to coordinate 2
    std::vector<RingElem> out = row_times(v, e);
    CHECK(out[1] == l);
}
