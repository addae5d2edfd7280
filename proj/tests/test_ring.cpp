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

#include "sympcomp/groebner.hpp"
#include "sympcomp/polyops.hpp"
#include "sympcomp/ring.hpp"

using namespace sympcomp;

TEST_CASE("extended gcd over ZZ") {
    Ring z = ring_ZZ();
    auto xgcd = [&z](long a, long b) {
        RingElem g, s, t;
        extended_gcd(RingElem::from_int(z, a), RingElem::from_int(z, b), g, s, t);
        CHECK(s * RingElem::from_int(z, a) + t * RingElem::from_int(z, b) == g);
        return g;
    };
    CHECK(xgcd(3, 5) == RingElem::one(z));
    CHECK(xgcd(0, 7) == RingElem::from_int(z, 7));
    CHECK(xgcd(4, 6) == RingElem::from_int(z, 2));
}

TEST_CASE("modular arithmetic and inverses") {
    Ring m = ring_mod(101);
    RingElem three = RingElem::from_int(m, 3);
    auto inv = three.inverse();
    REQUIRE(inv.has_value());
    CHECK((three * *inv).is_one());
    CHECK(RingElem::from_int(m, 101).is_zero());
    CHECK(RingElem::from_int(m, -1) == RingElem::from_int(m, 100));
}

TEST_CASE("quotient ring normal forms") {
    Ring p = ring_poly(ring_QQ(), {"x"});
    RingElem x = RingElem::variable(p, "x");
    Ring q = ring_quotient(p, {x.pow(3)});
    RingElem xq = RingElem::variable(q, "x");
    CHECK(xq.pow(3).is_zero());
    CHECK(xq.pow(5).is_zero());
    // (1+x)^{-1} = 1 - x + x^2 in QQ[x]/(x^3)
    RingElem one = RingElem::one(q);
    auto inv = (one + xq).inverse();
    REQUIRE(inv.has_value());
    CHECK(*inv == one - xq + xq * xq);
    CHECK(((one + xq) * *inv).is_one());
}

TEST_CASE("polynomial arithmetic is canonical") {
    Ring p = ring_poly(ring_QQ(), {"x", "y"});
    RingElem x = RingElem::variable(p, "x");
    RingElem y = RingElem::variable(p, "y");
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + y).pow(2) == x * x + RingElem::from_int(p, 2) * x * y + y * y);
    CHECK((x - x).is_zero());
    CHECK((x * y - y * x).is_zero());
}

TEST_CASE("groebner basis is deterministic and reduced") {
    Ring p = ring_poly(ring_QQ(), {"x", "y"});
    RingElem x = RingElem::variable(p, "x");
    RingElem y = RingElem::variable(p, "y");
    std::vector<RingElem> gens{x * x + y, x * y - RingElem::one(p)};
    GroebnerResult a = groebner_with_cofactors(gens, MonomialOrder::Grevlex);
    GroebnerResult b = groebner_with_cofactors({gens[1], gens[0]}, MonomialOrder::Grevlex);
    REQUIRE(a.basis.size() == b.basis.size());
    for (std::size_t i = 0; i < a.basis.size(); ++i) CHECK(a.basis[i] == b.basis[i]);
    // cofactor identity: basis[k] = sum cof[k][t] * gens[k-input order]
    for (std::size_t k = 0; k < a.basis.size(); ++k) {
        RingElem acc = RingElem::zero(p);
        for (std::size_t t = 0; t < gens.size(); ++t)
            acc = acc + a.cofactors[k][t] * gens[t];
        CHECK(acc == a.basis[k]);
    }
}

TEST_CASE("ideal membership with cofactors") {
    SUBCASE("over ZZ") {
        Ring z = ring_ZZ();
        WitnessResult w = ideal_membership({RingElem::from_int(z, 4), RingElem::from_int(z, 6)},
                                           RingElem::from_int(z, 10));
        REQUIRE(w.status == WitnessStatus::Found);
        CHECK(w.cofactors[0] * RingElem::from_int(z, 4) +
                  w.cofactors[1] * RingElem::from_int(z, 6) ==
              RingElem::from_int(z, 10));
        CHECK(ideal_membership({RingElem::from_int(z, 4), RingElem::from_int(z, 6)},
                               RingElem::from_int(z, 3))
                  .status == WitnessStatus::NotUnimodular);
    }
    SUBCASE("multivariate over QQ") {
        Ring p = ring_poly(ring_QQ(), {"x", "y"});
        RingElem x = RingElem::variable(p, "x");
        RingElem y = RingElem::variable(p, "y");
        WitnessResult w = ideal_membership({x, y}, x * x + x * y);
        REQUIRE(w.status == WitnessStatus::Found);
        CHECK(w.cofactors[0] * x + w.cofactors[1] * y == x * x + x * y);
        CHECK(ideal_membership({x, y}, RingElem::one(p)).status ==
              WitnessStatus::NotUnimodular);
    }
}

TEST_CASE("unimodularity witnesses") {
    Ring z = ring_ZZ();
    auto row = [&z](std::vector<long> v) {
        std::vector<RingElem> out;
        for (long e : v) out.push_back(RingElem::from_int(z, e));
        return out;
    };
    WitnessResult w = unimodularity_witness(row({3, 5, 7}));
    REQUIRE(w.status == WitnessStatus::Found);
    CHECK(dot(row({3, 5, 7}), w.cofactors).is_one());
    CHECK(unimodularity_witness(row({2, 4, 6})).status == WitnessStatus::NotUnimodular);
}

TEST_CASE("excision ring arithmetic") {
    Ring z = ring_ZZ();
    Ring c = ring_excision(z, {RingElem::from_int(z, 2)});
    auto pair = [&](long a, long i) {
        return RingElem::make_excision(c, RingElem::from_int(z, a), RingElem::from_int(z, i));
    };
    // worked product: (2,2)*(3,4) = (6, 2*4 + 3*2 + 2*4) = (6, 22)
    RingElem prod = pair(2, 2) * pair(3, 4);
    CHECK(prod.excision().base == RingElem::from_int(z, 6));
    CHECK(prod.excision().ideal == RingElem::from_int(z, 22));
    CHECK((pair(1, 0) * pair(5, 8)) == pair(5, 8));
    CHECK(pair(3, 2) + pair(4, -2) == pair(7, 0));
    CHECK(RingElem::one(c) == pair(1, 0));
    CHECK_THROWS_AS(pair(0, 3), LiftUnsupported);
}

TEST_CASE("canonical lift and reduction round trips") {
    Ring m = ring_mod(7);
    RingElem e = RingElem::from_int(m, 5);
    CHECK(reduce_into(m, canonical_lift(e)) == e);
    Ring p = ring_poly(ring_QQ(), {"x"});
    RingElem x = RingElem::variable(p, "x");
    Ring q = ring_quotient(p, {x.pow(2)});
    RingElem xq = RingElem::variable(q, "x");
    CHECK(reduce_into(q, canonical_lift(xq + RingElem::one(q))) == xq + RingElem::one(q));
    CHECK(reduce_into(q, x.pow(2) + x) == xq);
}

TEST_CASE("weighted degrees") {
    Ring p = ring_poly(ring_QQ(), {"x", "y"}, {1, 2});
    RingElem xy = RingElem::variable(p, "x") * RingElem::variable(p, "y");
    CHECK(weighted_degree(p, leading_term(xy, MonomialOrder::Grevlex).exps) == 3);
}
