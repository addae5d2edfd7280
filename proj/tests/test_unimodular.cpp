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

#include "sympcomp/unimodular.hpp"

using namespace sympcomp;

namespace {

UnimodRow zrow(std::vector<long> v) {
    Ring z = ring_ZZ();
    std::vector<RingElem> out;
    for (long e : v) out.push_back(RingElem::from_int(z, e));
    return unimod_row(std::move(out));
}

} // namespace

TEST_CASE("row construction") {
    UnimodRow v = zrow({3, 5, 7});
    CHECK(dot(v.entries, v.witness).is_one());
    CHECK_THROWS_AS(zrow({2, 4, 6}), NotUnimodular);
    Ring z = ring_ZZ();
    CHECK_THROWS_AS(
        unimod_row({RingElem::from_int(z, 3), RingElem::from_int(z, 5)},
                   {RingElem::from_int(z, 1), RingElem::from_int(z, 1)}),
        WitnessBroken);
}

TEST_CASE("vaserstein matrix and read-off round trip") {
    std::mt19937_64 rng(21);
    Ring m = ring_mod(101);
    for (int t = 0; t < 50; ++t) {
        std::vector<RingElem> raw{RingElem::from_int(m, static_cast<long>(rng() % 101)),
                                  RingElem::from_int(m, static_cast<long>(rng() % 101)),
                                  RingElem::from_int(m, static_cast<long>(rng() % 101))};
        WitnessResult w = unimodularity_witness(raw);
        if (w.status != WitnessStatus::Found) continue;
        UnimodRow v = unimod_row(raw, w.cofactors);
        AlternatingForm vf = vaserstein_matrix(v, v.witness);
        CHECK(vf.pfaffian.is_one());
        auto [v2, w2] = vaserstein_readoff(vf);
        CHECK(v2.entries == v.entries);
        CHECK(w2 == v.witness);
        CHECK(vaserstein_matrix(v2, w2).matrix == vf.matrix);
    }
}

TEST_CASE("vaserstein of e1,e1 is the standard form") {
    Ring z = ring_ZZ();
    UnimodRow e1 = e1_row(z, 3);
    CHECK(vaserstein_matrix(e1, e1.entries).matrix == psi_form(z, 2));
}

TEST_CASE("power rows") {
    UnimodRow v = zrow({2, 3, 5});
    for (unsigned long n = 1; n <= 4; ++n) {
        UnimodRow p = power_row(v, n);
        CHECK(p.entries[0] == v.entries[0].pow(n));
        CHECK(p.entries[1] == v.entries[1]);
        CHECK(p.entries[2] == v.entries[2]);
        CHECK(dot(p.entries, p.witness).is_one());
    }
}

TEST_CASE("vaserstein composition") {
    Ring z = ring_ZZ();
    // (2,3,5) with witness (-1,1,0), composed with (2,1,1)
    UnimodRow v1 = unimod_row({RingElem::from_int(z, 2), RingElem::from_int(z, 3),
                               RingElem::from_int(z, 5)},
                              {RingElem::from_int(z, -1), RingElem::from_int(z, 1),
                               RingElem::from_int(z, 0)});
    UnimodRow v2 = zrow({2, 1, 1});
    UnimodRow v3 = vaserstein_compose(v1, v2);
    CHECK(v3.entries[0] == RingElem::from_int(z, 2));
    CHECK(v3.entries[1] == RingElem::from_int(z, 3));
    CHECK(v3.entries[2] == RingElem::from_int(z, 6));
    CHECK_THROWS_AS(vaserstein_compose(zrow({3, 5, 7}), zrow({2, 1, 1})),
                    FirstCoordMismatch);
}

TEST_CASE("completion records and products") {
    Ring z = ring_ZZ();
    UnimodRow e1 = e1_row(z, 3);
    CompletionRecord id = completion_record(e1, RingMatrix::identity(z, 3));
    CompletionRecord prod = vdk_product(id, id);
    CHECK(prod.matrix.is_identity());
    CHECK_THROWS_AS(completion_record(zrow({3, 5, 7}), RingMatrix::identity(z, 3)),
                    FirstCoordMismatch);
}

TEST_CASE("orbit tables over small modular rings") {
    Ring z5 = ring_mod(5);
    OrbitTable t2 = orbit_bfs(z5, 2, GeneratorSet::Elementary);
    // all unimodular pairs over a field form one orbit
    CHECK(t2.orbit_count == 1);
    std::size_t unimod = 0;
    for (auto rep : t2.rep) unimod += rep >= 0;
    CHECK(unimod == 24); // 25 - 1 (only (0,0) is non-unimodular over Z/5)

    OrbitTable t4e = orbit_bfs(z5, 4, GeneratorSet::Elementary);
    OrbitTable t4s = orbit_bfs(z5, 4, GeneratorSet::SymplecticElementary);
    CHECK(t4e.orbit_count == 1);
    CHECK(t4e.rep == t4s.rep);

    // representative is the lexicographically smallest member; with one
    // orbit that is (0,0,0,1)
    CHECK(t4e.rep[t4e.encode({2, 3, 1, 0})] == t4e.encode({0, 0, 0, 1}));
    CHECK(t4e.rep[t4e.encode({1, 0, 0, 0})] == t4e.encode({0, 0, 0, 1}));
}

TEST_CASE("orbit encode/decode round trip") {
    OrbitTable t;
    t.modulus = 7;
    t.length = 3;
    std::vector<long> row{4, 0, 6};
    CHECK(t.decode(t.encode(row)) == row);
    // first entry is the most significant digit: code order = lex order
    CHECK(t.encode({1, 0, 0}) > t.encode({0, 6, 6}));
}
