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

#include "sympcomp/groebner.hpp"

#include <algorithm>
#include <utility>

#include "sympcomp/polyops.hpp"

namespace sympcomp {

namespace {

struct Tracked {
    RingElem poly;
    std::vector<RingElem> cof; // poly = sum cof[j] * gens[j]
};

// remainder of f on division by the tracked set, cofactors carried along
Tracked reduce_tracked(const Tracked& f, const std::vector<Tracked>& basis, MonomialOrder order) {
    std::vector<RingElem> divisors;
    divisors.reserve(basis.size());
    for (const auto& b : basis) divisors.push_back(b.poly);
    std::vector<RingElem> q;
    Tracked out;
    out.poly = poly_reduce(f.poly, divisors, order, &q);
    out.cof = f.cof;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!q[i].is_zero())
            for (std::size_t j = 0; j < out.cof.size(); ++j)
                out.cof[j] = out.cof[j] - q[i] * basis[i].cof[j];
    return out;
}

Tracked make_monic(Tracked t, MonomialOrder order) {
    if (t.poly.is_zero()) return t;
    const Ring& r = t.poly.ring();
    RingElem lc = leading_term(t.poly, order).coeff;
    if (lc.is_one()) return t;
    RingElem scale = term_mul(RingElem::one(r), *lc.inverse(),
                              std::vector<int>(r->vars.size(), 0));
    t.poly = t.poly * scale;
    for (auto& c : t.cof) c = c * scale;
    return t;
}

} // namespace

GroebnerResult groebner_with_cofactors(const std::vector<RingElem>& gens, MonomialOrder order) {
    if (gens.empty()) return {};
    const Ring& r = gens.front().ring();
    if (r->kind != RingKind::Polynomial || !ring_is_field(r->base))
        throw UnsupportedCoefficients("Groebner bases need QQ or ZZ/p coefficients");
    for (const auto& g : gens) require_same_ring(g, gens.front());

    std::vector<Tracked> basis;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (gens[j].is_zero()) continue;
        Tracked t;
        t.poly = gens[j];
        t.cof.assign(gens.size(), RingElem::zero(r));
        t.cof[j] = RingElem::one(r);
        basis.push_back(make_monic(std::move(t), order));
    }
    if (basis.empty()) return {};

    // pairs processed in deterministic FIFO order
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    std::size_t head = 0;
    while (head < pairs.size()) {
        auto [i, j] = pairs[head++];
        const PolyTerm& li = leading_term(basis[i].poly, order);
        const PolyTerm& lj = leading_term(basis[j].poly, order);
        // product criterion: coprime leading monomials give a trivial pair
        bool coprime = true;
        for (std::size_t k = 0; k < li.exps.size(); ++k)
            if (li.exps[k] > 0 && lj.exps[k] > 0) { coprime = false; break; }
        if (coprime) continue;
        std::vector<int> l = monomial_lcm(li.exps, lj.exps);
        // leading coefficients are monic, so the S-polynomial needs no scaling
        Tracked s;
        s.poly = term_mul(basis[i].poly, RingElem::one(r->base), monomial_div(l, li.exps)) -
                 term_mul(basis[j].poly, RingElem::one(r->base), monomial_div(l, lj.exps));
        s.cof.assign(gens.size(), RingElem::zero(r));
        for (std::size_t k = 0; k < gens.size(); ++k) {
            RingElem a = term_mul(basis[i].cof[k], RingElem::one(r->base),
                                  monomial_div(l, li.exps));
            RingElem b = term_mul(basis[j].cof[k], RingElem::one(r->base),
                                  monomial_div(l, lj.exps));
            s.cof[k] = a - b;
        }
        Tracked rem = reduce_tracked(s, basis, order);
        if (rem.poly.is_zero()) continue;
        rem = make_monic(std::move(rem), order);
        std::size_t n = basis.size();
        basis.push_back(std::move(rem));
        for (std::size_t k = 0; k < n; ++k) pairs.emplace_back(k, n);
    }

    // minimalize: drop elements whose leading monomial is divisible by another's
    std::vector<Tracked> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& lti = leading_term(basis[i].poly, order);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const auto& ltj = leading_term(basis[j].poly, order);
            if (!monomial_divides(ltj.exps, lti.exps)) continue;
            if (ltj.exps == lti.exps && j > i) continue; // keep the earlier duplicate
            redundant = true;
            break;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // interreduce every element against the others (full reduction)
    std::vector<Tracked> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Tracked> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Tracked t = reduce_tracked(minimal[i], others, order);
        if (!t.poly.is_zero()) reduced.push_back(make_monic(std::move(t), order));
    }

    std::sort(reduced.begin(), reduced.end(), [order](const Tracked& a, const Tracked& b) {
        return monomial_cmp(leading_term(a.poly, order).exps, leading_term(b.poly, order).exps,
                            order) < 0;
    });

    GroebnerResult out;
    for (auto& t : reduced) {
        out.basis.push_back(t.poly);
        out.cofactors.push_back(t.cof);
    }
    return out;
}

} // namespace sympcomp
