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

#include "sympcomp/graded.hpp"

#include <algorithm>

#include "sympcomp/polyops.hpp"

namespace sympcomp {

GradedElem grade_decompose(const RingElem& e) {
    GradedElem out;
    out.ring = e.ring();
    if (e.ring()->kind != RingKind::Polynomial) {
        // base rings are concentrated in degree 0
        if (!e.is_zero()) out.components.emplace(0, e);
        return out;
    }
    std::map<long, std::vector<PolyTerm>> buckets;
    for (const PolyTerm& t : e.poly().terms)
        buckets[weighted_degree(e.ring(), t.exps)].push_back(t);
    for (auto& [deg, terms] : buckets) {
        auto p = std::make_shared<PolyPayload>();
        p->terms = std::move(terms); // subsequence of a canonical list stays canonical
        out.components.emplace(deg, RingElem::make_poly(e.ring(), std::move(p)));
    }
    return out;
}

namespace {

bool has_var(const Ring& r, const std::string& name) {
    if (r->kind == RingKind::Polynomial) {
        if (std::find(r->vars.begin(), r->vars.end(), name) != r->vars.end()) return true;
        return has_var(r->base, name);
    }
    if (r->kind == RingKind::Quotient) return has_var(r->base, name);
    return false;
}

} // namespace

Ring homotopy_ring(const Ring& graded) {
    std::string name = "X";
    while (has_var(graded, name)) name += "_";
    return ring_poly(graded, {name});
}

RingElem swan_weibel(const GradedElem& e) {
    Ring ext = homotopy_ring(e.ring);
    auto p = std::make_shared<PolyPayload>();
    for (auto it = e.components.rbegin(); it != e.components.rend(); ++it) {
        if (it->second.is_zero()) continue;
        p->terms.push_back(PolyTerm{{static_cast<int>(it->first)}, it->second});
    }
    return RingElem::make_poly(ext, std::move(p));
}

RingElem swan_weibel(const RingElem& e) { return swan_weibel(grade_decompose(e)); }

RingMatrix swan_weibel_matrix(const RingMatrix& a) {
    return a.map_entries([](const RingElem& e) { return swan_weibel(e); });
}

RingElem eval_at(const RingElem& p, const RingElem& a) {
    if (ring_equal(p.ring(), a.ring())) return p;
    const Ring& pr = p.ring();
    if (pr->kind != RingKind::Polynomial || pr->vars.size() != 1 ||
        !ring_equal(pr->base, a.ring()))
        throw UnsupportedRing("eval_at needs a univariate polynomial over the point's ring");
    RingElem res = RingElem::zero(a.ring());
    for (const PolyTerm& t : p.poly().terms)
        res = res + t.coeff * a.pow(static_cast<unsigned long>(t.exps[0]));
    return res;
}

RingElem excision_hom(const RingElem& e) {
    if (e.ring()->kind != RingKind::Excision)
        throw UnsupportedRing("excision_hom needs an excision-ring element");
    return e.excision().base + e.excision().ideal;
}

UnimodRow lift_row(const UnimodRow& v, const Ring& excision) {
    if (excision->kind != RingKind::Excision)
        throw UnsupportedRing("lift target must be an excision ring");
    if (!ring_equal(excision->base, v.ring()))
        throw RingMismatch("row ring differs from the excision base ring");
    const Ring& r = v.ring();
    RingElem one = RingElem::one(r), zero = RingElem::zero(r);
    try {
        std::vector<RingElem> entries, witness;
        entries.push_back(RingElem::make_excision(excision, one, v.entries[0] - one));
        witness.push_back(RingElem::make_excision(excision, one, v.witness[0] - one));
        for (std::size_t k = 1; k < v.length(); ++k) {
            entries.push_back(RingElem::make_excision(excision, zero, v.entries[k]));
            witness.push_back(RingElem::make_excision(excision, v.witness[k], zero));
        }
        return unimod_row(std::move(entries), std::move(witness));
    } catch (const UndecidableHere& e) {
        throw LiftUnsupported(std::string("membership not certified: ") + e.what());
    }
}

RingMatrix project_matrix(const RingMatrix& alpha, ProjectionMode mode) {
    if (alpha.ring()->kind != RingKind::Excision)
        throw UnsupportedRing("project_matrix needs an excision-ring matrix");
    return alpha.map_entries([mode](const RingElem& e) {
        return mode == ProjectionMode::Base ? e.excision().base : excision_hom(e);
    });
}

} // namespace sympcomp
