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

#include "sympcomp/words.hpp"

using namespace sympcomp;

namespace {

Ring quotient_x3() {
    Ring p = ring_poly(ring_QQ(), {"x"});
    return ring_quotient(p, {RingElem::variable(p, "x").pow(3)});
}

RingElem random_elem(const Ring& r, std::mt19937_64& rng) {
    long a = static_cast<long>(rng() % 9) - 4;
    if (r->kind == RingKind::Quotient) {
        RingElem x = RingElem::variable(r, "x");
        long b = static_cast<long>(rng() % 5) - 2;
        return RingElem::from_int(r, a) + RingElem::from_int(r, b) * x;
    }
    return RingElem::from_int(r, a);
}

GroupWord random_e_word(const Ring& r, std::size_t size, std::size_t len,
                        std::mt19937_64& rng) {
    GroupWord w;
    w.size = size;
    while (w.letters.size() < len) {
        std::size_t i = 1 + rng() % size, j = 1 + rng() % size;
        if (i == j) continue;
        RingElem z = random_elem(r, rng);
        if (z.is_zero()) continue;
        w.letters.push_back(Letter{Letter::Kind::E, i, j, z});
    }
    return w;
}

} // namespace

TEST_CASE("sigma involution") {
    CHECK(sigma_index(1) == 2);
    CHECK(sigma_index(2) == 1);
    CHECK(sigma_index(3) == 4);
    CHECK(sigma_index(4) == 3);
}

TEST_CASE("se generators are symplectic") {
    std::mt19937_64 rng(11);
    for (const Ring& r : {ring_ZZ(), ring_mod(101), quotient_x3()})
        for (std::size_t two_n : {4, 6})
            for (int t = 0; t < 10; ++t) {
                std::size_t i = 1 + rng() % two_n, j = 1 + rng() % two_n;
                if (i == j) continue;
                RingElem z = random_elem(r, rng);
                CHECK(is_symplectic(se_generator(r, two_n, i, j, z)));
            }
}

TEST_CASE("pure and mixed se letters") {
    Ring z = ring_ZZ();
    RingElem l = RingElem::from_int(z, 3);
    // i = sigma(j): plain transvection
    CHECK(se_generator(z, 4, 2, 1, l) == elementary_matrix(z, 4, 2, 1, l));
    // mixed: carries the mirror entry at (sigma(j), sigma(i))
    RingMatrix m = se_generator(z, 4, 1, 3, l);
    CHECK(m.at(0, 2) == l);
    // mirror entry at (sigma(3), sigma(1)) = (4,2) carries -(-1)^{1+3} z = -z
    CHECK(m.at(3, 1) == -l);
}

TEST_CASE("word inverse and concat") {
    std::mt19937_64 rng(5);
    Ring r = ring_mod(101);
    for (int t = 0; t < 20; ++t) {
        GroupWord w = random_e_word(r, 4, 6, rng);
        CHECK((eval_word(w, r) * eval_word(inverse_word(w), r)).is_identity());
        GroupWord ww = concat(w, inverse_word(w));
        CHECK(eval_word(ww, r).is_identity());
    }
}

TEST_CASE("row action matches matrix action") {
    std::mt19937_64 rng(6);
    for (const Ring& r : {ring_ZZ(), ring_mod(101)})
        for (int t = 0; t < 20; ++t) {
            GroupWord w;
            w.size = 4;
            for (int k = 0; k < 5; ++k) {
                std::size_t i = 1 + rng() % 4, j = 1 + rng() % 4;
                if (i == j) continue;
                w.letters.push_back(
                    Letter{k % 2 ? Letter::Kind::SE : Letter::Kind::E, i, j,
                           random_elem(r, rng)});
            }
            std::vector<RingElem> v;
            for (int k = 0; k < 4; ++k) v.push_back(random_elem(r, rng));
            CHECK(apply_word(v, w) == row_times(v, eval_word(w, r)));
        }
}

TEST_CASE("elementary reduction engines") {
    std::mt19937_64 rng(7);
    auto check_ring = [&rng](const Ring& r) {
        for (int t = 0; t < 15; ++t) {
            GroupWord w = random_e_word(r, 4, 6, rng);
            std::vector<RingElem> e1{RingElem::one(r), RingElem::zero(r),
                                     RingElem::zero(r), RingElem::zero(r)};
            std::vector<RingElem> v = apply_word(e1, w);
            GroupWord red = elementary_reduce_row(v);
            CHECK(apply_word(v, red) == e1);
            GroupWord sred = symplectic_reduce_row(v);
            CHECK(sred.symplectic_only());
            CHECK(apply_word(v, sred) == e1);
        }
    };
    check_ring(ring_ZZ());
    check_ring(ring_mod(101));
    check_ring(ring_mod(12)); // composite modulus
    check_ring(quotient_x3());
    check_ring(ring_poly(ring_QQ(), {"x"}));
}

TEST_CASE("multivariate reduction is randomized but verified") {
    Ring p = ring_poly(ring_QQ(), {"x", "y"});
    RingElem x = RingElem::variable(p, "x"), y = RingElem::variable(p, "y");
    std::vector<RingElem> v{RingElem::one(p) + x, y, x * x, RingElem::zero(p)};
    std::vector<RingElem> e1{RingElem::one(p), RingElem::zero(p), RingElem::zero(p),
                             RingElem::zero(p)};
    GroupWord red = elementary_reduce_row(v);
    CHECK(apply_word(v, red) == e1);
    GroupWord sred = symplectic_reduce_row(v);
    CHECK(sred.symplectic_only());
    CHECK(apply_word(v, sred) == e1);
}

TEST_CASE("sl2 block words") {
    std::mt19937_64 rng(8);
    for (const Ring& r : {ring_ZZ(), ring_mod(101)})
        for (int t = 0; t < 15; ++t) {
            // random SL2 via a short product of triangular transvections
            RingMatrix n = RingMatrix::identity(r, 2);
            for (int k = 0; k < 4; ++k) {
                RingMatrix e = RingMatrix::identity(r, 2);
                e.at(k % 2, 1 - k % 2) = random_elem(r, rng);
                n = n * e;
            }
            GroupWord w = sl2_block_word(r, n.at(0, 0), n.at(0, 1), n.at(1, 0), n.at(1, 1));
            CHECK(w.symplectic_only());
            RingMatrix full = eval_word(w, r);
            CHECK(full.at(2, 2) == n.at(0, 0));
            CHECK(full.at(2, 3) == n.at(0, 1));
            CHECK(full.at(3, 2) == n.at(1, 0));
            CHECK(full.at(3, 3) == n.at(1, 1));
        }
}

TEST_CASE("esp factorization of symplectic matrices") {
    std::mt19937_64 rng(9);
    for (const Ring& r : {ring_ZZ(), ring_mod(101)})
        for (int t = 0; t < 10; ++t) {
            GroupWord w;
            w.size = 4;
            for (int k = 0; k < 6; ++k) {
                std::size_t i = 1 + rng() % 4, j = 1 + rng() % 4;
                if (i == j) continue;
                w.letters.push_back(Letter{Letter::Kind::SE, i, j, random_elem(r, rng)});
            }
            RingMatrix s = eval_word(w, r);
            GroupWord f = esp_factor(s);
            CHECK(f.symplectic_only());
            CHECK(eval_word(f, r) == s);
        }
}

TEST_CASE("symplectic patch") {
    std::mt19937_64 rng(10);
    for (const Ring& r : {ring_ZZ(), ring_mod(101)})
        for (int t = 0; t < 10; ++t) {
            GroupWord eps = random_e_word(r, 4, 6, rng);
            SymplecticPatch patch = symplectic_patch(eps, r);
            RingMatrix prod =
                eval_word(eps, r) *
                perp(RingMatrix::identity(r, 1), eval_word(patch.rho, r));
            CHECK(is_symplectic(prod));
            if (patch.esp_word) CHECK(eval_word(*patch.esp_word, r) == prod);
        }
}

TEST_CASE("sp transfer") {
    Ring r = ring_ZZ();
    std::mt19937_64 rng(12);
    GroupWord eps = random_e_word(r, 4, 5, rng);
    // a word fixing e1 transfers trivially
    GroupWord fix;
    fix.size = 4;
    fix.letters.push_back(Letter{Letter::Kind::E, 2, 3, RingElem::from_int(r, 4)});
    SpTransfer t0 = sp_transfer(fix, psi_form(r, 2), r);
    CHECK(t0.eta.is_identity());
    // general case: eta symplectic with matching first row
    SpTransfer t = sp_transfer(eps, psi_form(r, 2), r);
    std::vector<RingElem> e1{RingElem::one(r), RingElem::zero(r), RingElem::zero(r),
                             RingElem::zero(r)};
    CHECK(row_times(e1, t.eta) == apply_word(e1, eps));
    CHECK(sp_psi_member(t.eta, psi_form(r, 2)));
    CHECK(t.word.flavor() != WordFlavor::SymplecticOnly);
    CHECK(eval_word(t.word, r) == t.eta);
}

TEST_CASE("esp orbit words") {
    std::mt19937_64 rng(13);
    for (const Ring& r : {ring_ZZ(), ring_mod(101)})
        for (int t = 0; t < 10; ++t) {
            GroupWord setup = random_e_word(r, 4, 4, rng);
            std::vector<RingElem> e1{RingElem::one(r), RingElem::zero(r),
                                     RingElem::zero(r), RingElem::zero(r)};
            std::vector<RingElem> v = apply_word(e1, setup);
            GroupWord eps = random_e_word(r, 4, 4, rng);
            GroupWord mu = esp_orbit_word(v, eps);
            CHECK(mu.symplectic_only());
            CHECK(apply_word(v, mu) == apply_word(v, eps));
        }
}

TEST_CASE("relative congruence check") {
    Ring z = ring_ZZ();
    RingMatrix m = RingMatrix::identity(z, 2);
    m.at(0, 1) = RingElem::from_int(z, 4);
    CHECK(relative_congruent(m, {RingElem::from_int(z, 2)}));
    CHECK_FALSE(relative_congruent(m, {RingElem::from_int(z, 3)}));
}
