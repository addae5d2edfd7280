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

#include "sympcomp/witt.hpp"

using namespace sympcomp;

namespace {

UnimodRow zrow(std::vector<long> v) {
    Ring z = ring_ZZ();
    std::vector<RingElem> out;
    for (long e : v) out.push_back(RingElem::from_int(z, e));
    return unimod_row(std::move(out));
}

} // namespace

TEST_CASE("verify certificate basics") {
    Ring z = ring_ZZ();
    AlternatingForm p2 = alternating_form(psi_form(z, 2));
    WittCertificate empty{p2, p2, 2, GroupWord{4, {}}};
    CHECK(verify_certificate(p2, p2, empty));
    // a lone mixed transvection (no mirror term) does not preserve psi_2
    WittCertificate bad{p2, p2, 2,
                        GroupWord{4, {Letter{Letter::Kind::E, 1, 3,
                                             RingElem::from_int(z, 3)}}}};
    CHECK_FALSE(verify_certificate(p2, p2, bad));
}

TEST_CASE("trivialize a witnessed form") {
    SUBCASE("v = w = e1 gives a word evaluating to the identity") {
        Ring z = ring_ZZ();
        UnimodRow e1 = e1_row(z, 3);
        WittCertificate cert = trivialize(e1, GroupWord{3, {}}, e1.entries);
        CHECK(eval_word(cert.word, z).is_identity());
        CHECK(cert.left.matrix == psi_form(z, 2));
        CHECK(verify_certificate(cert.left, cert.right, cert));
    }
    SUBCASE("v = e1 with a nontrivial witness") {
        Ring z = ring_ZZ();
        UnimodRow e1 = e1_row(z, 3);
        std::vector<RingElem> w{RingElem::from_int(z, 1), RingElem::from_int(z, 5),
                                RingElem::from_int(z, 7)};
        WittCertificate cert = trivialize(e1, GroupWord{3, {}}, w);
        CHECK(cert.word.letters.size() <= 4);
        CHECK(verify_certificate(cert.left, cert.right, cert));
    }
    SUBCASE("full chain over ZZ") {
        UnimodRow v = zrow({3, 5, 7});
        GroupWord red = elementary_reduce_row(v.entries);
        WittCertificate cert = trivialize(v, red, v.witness);
        CHECK(verify_certificate(cert.left, cert.right, cert));
        CHECK(cert.right.matrix == psi_form(v.ring(), 2));
    }
    SUBCASE("mismatched reduction word is rejected") {
        UnimodRow v = zrow({3, 5, 7});
        CHECK_THROWS_AS(trivialize(v, GroupWord{3, {}}, v.witness), ReductionMismatch);
    }
}

TEST_CASE("witness change by composition") {
    Ring z = ring_ZZ();
    UnimodRow v = zrow({3, 5, 7});
    std::vector<RingElem> w1 = v.witness;
    // second witness: w2 = w1 + (5,-3,0) stays a witness since 3*5-5*3 = 0
    std::vector<RingElem> w2{w1[0] + RingElem::from_int(z, 5),
                             w1[1] - RingElem::from_int(z, 3), w1[2]};
    REQUIRE(dot(v.entries, w2).is_one());
    WittCertificate cert = change_witness(v, w1, w2);
    CHECK(verify_certificate(cert.left, cert.right, cert));
    CHECK(cert.left.matrix == vaserstein_matrix(v, w1).matrix);
    CHECK(cert.right.matrix == vaserstein_matrix(v, w2).matrix);
}

TEST_CASE("find equivalence") {
    Ring z = ring_ZZ();
    AlternatingForm p2 = alternating_form(psi_form(z, 2));
    SUBCASE("identical forms") {
        WittCertificate cert = find_equivalence(p2, p2);
        CHECK(cert.word.letters.empty());
        CHECK(verify_certificate(p2, p2, cert));
    }
    SUBCASE("padding to a common size") {
        AlternatingForm p1 = alternating_form(psi_form(z, 1));
        WittCertificate cert = find_equivalence(p1, p2);
        CHECK(verify_certificate(p1, p2, cert));
    }
    SUBCASE("two vaserstein forms of equivalent rows") {
        UnimodRow v = zrow({3, 5, 7});
        AlternatingForm a = vaserstein_matrix(v, v.witness);
        WittCertificate cert = find_equivalence(a, p2);
        CHECK(verify_certificate(a, p2, cert));
    }
}

TEST_CASE("perp class and transport") {
    Ring z = ring_ZZ();
    WittClass c2 = witt_class(alternating_form(psi_form(z, 1)));
    WittClass c4 = perp_class(c2, c2);
    CHECK(c4.representative.matrix == psi_form(z, 2));
    CHECK(c4.representative.pfaffian.is_one());

    std::mt19937_64 rng(31);
    Ring m = ring_mod(101);
    for (int t = 0; t < 20; ++t) {
        RingMatrix phi(m, 4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                phi.at(i, j) = RingElem::from_int(m, static_cast<long>(rng() % 101));
        AlternatingForm v = alternating_form(psi_form(m, 2));
        AlternatingForm out = congruence_transport(v, phi);
        CHECK(out.pfaffian == v.pfaffian * phi.det());
        CHECK(out.matrix == congruence(v.matrix, phi));
    }
}

TEST_CASE("vaserstein rule at certificate level over Z/5") {
    Ring m = ring_mod(5);
    std::mt19937_64 rng(32);
    int done = 0;
    while (done < 10) {
        std::vector<RingElem> a{RingElem::from_int(m, static_cast<long>(rng() % 5)),
                                RingElem::from_int(m, static_cast<long>(rng() % 5)),
                                RingElem::from_int(m, static_cast<long>(rng() % 5))};
        std::vector<RingElem> b{a[0], RingElem::from_int(m, static_cast<long>(rng() % 5)),
                                RingElem::from_int(m, static_cast<long>(rng() % 5))};
        WitnessResult wa = unimodularity_witness(a), wb = unimodularity_witness(b);
        if (wa.status != WitnessStatus::Found || wb.status != WitnessStatus::Found)
            continue;
        UnimodRow v1 = unimod_row(a, wa.cofactors), v2 = unimod_row(b, wb.cofactors);
        UnimodRow v3 = vaserstein_compose(v1, v2);
        // all three certificates reach psi_2, hence all classes agree
        for (const UnimodRow& v : {v1, v2, v3}) {
            GroupWord red = elementary_reduce_row(v.entries);
            WittCertificate cert = trivialize(v, red, v.witness);
            CHECK(verify_certificate(cert.left, cert.right, cert));
            CHECK(cert.right.matrix == psi_form(m, 2));
        }
        ++done;
    }
}
