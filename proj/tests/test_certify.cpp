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

#include "sympcomp/certify.hpp"

using namespace sympcomp;

namespace {

nlohmann::json sp4_example() {
    Ring z = ring_ZZ();
    std::vector<RingElem> raw{RingElem::from_int(z, 3), RingElem::from_int(z, 2),
                              RingElem::from_int(z, 1), RingElem::zero(z)};
    UnimodRow v = unimod_row(raw);
    GroupWord red = symplectic_reduce(v);
    RingMatrix theta = eval_word(red, z).inverse();
    return sp4_certificate(v, theta, SearchParams{});
}

nlohmann::json witt_example() {
    Ring z = ring_ZZ();
    std::vector<RingElem> raw{RingElem::from_int(z, 3), RingElem::from_int(z, 5),
                              RingElem::from_int(z, 7)};
    UnimodRow v = unimod_row(raw);
    GroupWord red = elementary_reduce_row(v.entries);
    WittCertificate cert = trivialize(v, red, v.witness);
    return witt_certificate_json(cert, SearchParams{});
}

nlohmann::json orbit_example() {
    return orbit_certificate(orbit_bfs(ring_mod(5), 2, GeneratorSet::Elementary));
}

// flip one scalar leaf of the document; returns false if the path is absent
void corrupt_entry(nlohmann::json& j) {
    if (j.contains("theta"))
        j["theta"][1][1] = "987654321";
    else if (j.contains("word") && !j["word"].empty())
        j["word"][0][3] = "987654321";
    else if (j.contains("orbit_count"))
        j["orbit_count"] = j["orbit_count"].get<long>() + 1;
}

} // namespace

TEST_CASE("round trips verify") {
    for (nlohmann::json j : {sp4_example(), witt_example(), orbit_example()}) {
        VerifyOutcome out = verify_json_certificate(j);
        INFO(out.failure);
        CHECK(out.ok);
        // serialization round trip through text preserves validity
        VerifyOutcome again = verify_json_certificate(nlohmann::json::parse(j.dump()));
        CHECK(again.ok);
    }
}

TEST_CASE("corrupted certificates fail") {
    for (nlohmann::json j : {sp4_example(), witt_example(), orbit_example()}) {
        corrupt_entry(j);
        CHECK_FALSE(verify_json_certificate(j).ok);
    }
}

TEST_CASE("malformed documents are rejected not crashed") {
    CHECK_FALSE(verify_json_certificate(nlohmann::json::object()).ok);
    nlohmann::json j = sp4_example();
    j["ring"] = "ZZ/"; // unparsable ring text
    CHECK_FALSE(verify_json_certificate(j).ok);
    nlohmann::json k = sp4_example();
    k.erase("row");
    CHECK_FALSE(verify_json_certificate(k).ok);
    nlohmann::json w = witt_example();
    w["kind"] = "unknown-kind";
    CHECK_FALSE(verify_json_certificate(w).ok);
}

TEST_CASE("word and matrix json round trips") {
    Ring z = ring_ZZ();
    GroupWord w;
    w.size = 4;
    w.letters.push_back(Letter{Letter::Kind::E, 1, 2, RingElem::from_int(z, 3)});
    w.letters.push_back(Letter{Letter::Kind::SE, 3, 1, RingElem::from_int(z, -2)});
    GroupWord back = word_from_json(word_to_json(w), z, 4);
    CHECK(eval_word(back, z) == eval_word(w, z));
    REQUIRE(back.letters.size() == 2);
    CHECK(back.letters[1].kind == Letter::Kind::SE);

    RingMatrix m = psi_form(z, 2);
    CHECK(matrix_from_json(matrix_to_json(m), z) == m);
}
