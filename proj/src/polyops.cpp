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

#include "sympcomp/polyops.hpp"

#include <algorithm>
#include <numeric>

namespace sympcomp {

int monomial_cmp(const std::vector<int>& a, const std::vector<int>& b, MonomialOrder order) {
    if (order == MonomialOrder::Lex) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    }
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da > db ? 1 : -1;
    // equal degree: the monomial whose last nonzero difference entry is
    // negative is the larger one
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

bool monomial_divides(const std::vector<int>& d, const std::vector<int>& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

std::vector<int> monomial_mul(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

std::vector<int> monomial_div(const std::vector<int>& m, const std::vector<int>& d) {
    std::vector<int> r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = m[i] - d[i];
    return r;
}

std::vector<int> monomial_lcm(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

const PolyTerm& leading_term(const RingElem& f, MonomialOrder order) {
    const auto& terms = f.poly().terms;
    if (terms.empty()) throw Error("ZeroPolynomial", "leading term of zero");
    // storage is grevlex-descending, so the first term wins there directly
    if (order == MonomialOrder::Grevlex) return terms[0];
    const PolyTerm* best = &terms[0];
    for (const auto& t : terms)
        if (monomial_cmp(t.exps, best->exps, order) > 0) best = &t;
    return *best;
}

RingElem term_mul(const RingElem& f, const RingElem& coeff, const std::vector<int>& mono) {
    const Ring& r = f.ring();
    auto p = std::make_shared<PolyPayload>();
    p->terms.push_back({mono, coeff});
    return f * RingElem::make_poly(r, p);
}

RingElem poly_reduce(const RingElem& f, const std::vector<RingElem>& divisors,
                     MonomialOrder order, std::vector<RingElem>* quotients) {
    const Ring& r = f.ring();
    if (quotients) quotients->assign(divisors.size(), RingElem::zero(r));
    RingElem rem = RingElem::zero(r);
    RingElem work = f;
    while (!work.is_zero()) {
        const PolyTerm lt = leading_term(work, order);
        bool hit = false;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            if (divisors[k].is_zero()) continue;
            const PolyTerm& ld = leading_term(divisors[k], order);
            if (!monomial_divides(ld.exps, lt.exps)) continue;
            auto c = lt.coeff.divexact(ld.coeff);
            if (!c) {
                auto ci = ld.coeff.inverse();
                if (!ci) continue;
                c = lt.coeff * *ci;
            }
            std::vector<int> mono = monomial_div(lt.exps, ld.exps);
            if (quotients)
                (*quotients)[k] = (*quotients)[k] + term_mul(RingElem::one(r), *c, mono);
            work = work - term_mul(divisors[k], *c, mono);
            hit = true;
            break;
        }
        if (!hit) {
            RingElem piece = term_mul(RingElem::one(r), lt.coeff, lt.exps);
            rem = rem + piece;
            work = work - piece;
        }
    }
    return rem;
}

long weighted_degree(const Ring& poly_ring, const std::vector<int>& exps) {
    long d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i)
        d += static_cast<long>(exps[i]) * poly_ring->weights[i];
    return d;
}

int degree_in(const RingElem& f, std::size_t var_index) {
    int d = -1;
    for (const auto& t : f.poly().terms) d = std::max(d, t.exps[var_index]);
    return d;
}

RingElem substitute(const RingElem& f, std::size_t var_index, const RingElem& value) {
    const Ring& r = f.ring();
    RingElem out = RingElem::zero(r);
    for (const auto& t : f.poly().terms) {
        std::vector<int> rest = t.exps;
        int e = rest[var_index];
        rest[var_index] = 0;
        RingElem piece = term_mul(RingElem::one(r), t.coeff, rest);
        if (e > 0) piece = piece * value.pow(static_cast<unsigned long>(e));
        out = out + piece;
    }
    return out;
}

} // namespace sympcomp
