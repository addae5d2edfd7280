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

#include "sympcomp/parse.hpp"
#include "sympcomp/polyops.hpp"

using namespace sympcomp;

TEST_CASE("ring grammar") {
    CHECK(parse_ring("ZZ")->kind == RingKind::Integers);
    CHECK(parse_ring("QQ")->kind == RingKind::Rationals);
    Ring m = parse_ring("ZZ/101");
    CHECK(m->kind == RingKind::Modular);
    CHECK(m->modulus == 101);

    Ring q = parse_ring("QQ[x]/(x^3)");
    CHECK(q->kind == RingKind::Quotient);
    CHECK(RingElem::variable(q, "x").pow(3).is_zero());

    Ring w = parse_ring("QQ[x:1,y:2]");
    CHECK(w->kind == RingKind::Polynomial);
    RingElem xy = RingElem::variable(w, "x") * RingElem::variable(w, "y");
    CHECK(weighted_degree(w, leading_term(xy, MonomialOrder::Grevlex).exps) == 3);

    Ring c = parse_ring("excision(ZZ, (2))");
    CHECK(c->kind == RingKind::Excision);
}

TEST_CASE("element grammar") {
    Ring z = ring_ZZ();
    CHECK(parse_element("-12", z) == RingElem::from_int(z, -12));
    CHECK(parse_element("2 + 3*4", z) == RingElem::from_int(z, 14));
    CHECK(parse_element("(2 + 3)*4", z) == RingElem::from_int(z, 20));

    Ring q = ring_QQ();
    CHECK(parse_element("3/4", q) == RingElem::rational(q, 3, 4));
    CHECK(parse_element("1/2 + 1/2", q).is_one());

    Ring p = ring_poly(ring_QQ(), {"x"});
    RingElem x = RingElem::variable(p, "x");
    CHECK(parse_element("x^2 - 2*x + 1", p) == (x - RingElem::one(p)).pow(2));
    // unary minus binds the whole power: -x^2 = -(x^2)
    CHECK(parse_element("-x^2", p) == -(x * x));

    Ring c = ring_excision(ring_ZZ(), {RingElem::from_int(ring_ZZ(), 2)});
    RingElem pr = parse_element("(3, 4)", c);
    CHECK(pr.excision().base == RingElem::from_int(ring_ZZ(), 3));
    CHECK(pr.excision().ideal == RingElem::from_int(ring_ZZ(), 4));
}

TEST_CASE("rows and matrices") {
    Ring z = ring_ZZ();
    std::vector<RingElem> row = parse_row("[3, 5, 7, 11]", z);
    REQUIRE(row.size() == 4);
    CHECK(row[3] == RingElem::from_int(z, 11));

    RingMatrix m = parse_matrix("[[0, 1], [-1, 0]]", z);
    CHECK(m == psi_form(z, 1));
}

TEST_CASE("parse errors carry offsets") {
    Ring z = ring_ZZ();
    CHECK_THROWS_AS(parse_ring("ZZ/"), ParseError);
    CHECK_THROWS_AS(parse_element("2 +", z), ParseError);
    CHECK_THROWS_AS(parse_element("2 2", z), ParseError); // trailing junk
    CHECK_THROWS_AS(parse_row("[1, 2", z), ParseError);
    try {
        parse_element("1 + @", z);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("offset") != std::string::npos);
    }
}

TEST_CASE("round trips through to_string") {
    Ring p = ring_poly(ring_QQ(), {"x", "y"});
    RingElem x = RingElem::variable(p, "x"), y = RingElem::variable(p, "y");
    RingElem e = x.pow(3) - RingElem::from_int(p, 2) * x * y +
                 RingElem::rational(p, 1, 2) * y - RingElem::one(p);
    CHECK(parse_element(e.to_string(), p) == e);

    Ring rings_to_check[] = {ring_ZZ(), ring_mod(7), p};
    for (const Ring& r : rings_to_check)
        CHECK(ring_to_string(parse_ring(ring_to_string(r))) == ring_to_string(r));
}
