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

#include "sympcomp/witt.hpp"

#include <deque>
#include <unordered_map>

namespace sympcomp {

WittClass witt_class(AlternatingForm representative) {
    if (!representative.pfaffian.is_one())
        throw PfaffianNotOne("class representatives must have pfaffian 1");
    return WittClass{std::move(representative)};
}

namespace {

RingMatrix padded(const AlternatingForm& f, std::size_t m) {
    std::size_t r = f.matrix.rows() / 2;
    if (r == m) return f.matrix;
    return perp(f.matrix, psi_form(f.matrix.ring(), m - r));
}

} // namespace

bool verify_certificate(const AlternatingForm& a, const AlternatingForm& b,
                        const WittCertificate& cert) {
    if (a.matrix != cert.left.matrix || b.matrix != cert.right.matrix) return false;
    std::size_t r = a.matrix.rows() / 2, s = b.matrix.rows() / 2;
    if (cert.m < r || cert.m < s || cert.word.size != 2 * cert.m) return false;
    const Ring& ring = a.matrix.ring();
    RingMatrix eps = eval_word(cert.word, ring);
    if (!eps.det().is_one()) return false;
    return padded(a, cert.m) == congruence(padded(b, cert.m), eps);
}

WittClass perp_class(const WittClass& a, const WittClass& b) {
    return witt_class(perp_form(a.representative, b.representative));
}

AlternatingForm congruence_transport(const AlternatingForm& v, const RingMatrix& phi) {
    return congruence_form(v, phi);
}

WittCertificate trivialize(const UnimodRow& v, const GroupWord& redword,
                           const std::vector<RingElem>& w) {
    const Ring& r = v.ring();
    if (redword.size != 3 || !redword.elementary_only())
        throw BadIndices("reduction word must be elementary of size 3");
    std::vector<RingElem> reduced = apply_word(v.entries, redword);
    if (reduced != e1_row(r, 3).entries)
        throw ReductionMismatch("redword does not carry v to e1");

    AlternatingForm vf = vaserstein_matrix(v, w);

    // g1 = 1 (+) eval(redword): size-4 letters with both indices shifted up
    GroupWord g;
    g.size = 4;
    for (const Letter& l : redword.letters)
        g.letters.push_back(Letter{Letter::Kind::E, l.i + 1, l.j + 1, l.z});
    RingMatrix transported = congruence(vf.matrix, eval_word(g, r));

    // transported = V(e1, w'') with w''_0 = pfaffian = 1
    RingElem w1pp = -transported.at(1, 3);
    RingElem w2pp = transported.at(1, 2);
    g.letters.push_back(Letter{Letter::Kind::E, 3, 2, w1pp});
    g.letters.push_back(Letter{Letter::Kind::E, 4, 2, w2pp});
    if (congruence(vf.matrix, eval_word(g, r)) != psi_form(r, 2))
        throw Error("Internal", "clearing schedule missed psi_2");

    // g^T V g = psi_2 means V = eps^T psi_2 eps with eps = g^{-1}
    WittCertificate cert{std::move(vf),
                         alternating_form(psi_form(r, 2)), 2, inverse_word(g)};
    if (!verify_certificate(cert.left, cert.right, cert))
        throw Error("Internal", "trivialization certificate does not replay");
    return cert;
}

WittCertificate change_witness(const UnimodRow& v, const std::vector<RingElem>& w,
                               const std::vector<RingElem>& wp, const SearchParams& sp) {
    GroupWord red;
    try {
        red = elementary_reduce_row(v.entries, sp);
    } catch (const ReductionUnavailable& e) {
        throw SearchFailed(std::string("no reduction word for v: ") + e.what());
    }
    WittCertificate c1 = trivialize(v, red, w);  // V(v,w)  = e1^T psi_2 e1
    WittCertificate c2 = trivialize(v, red, wp); // V(v,wp) = e2^T psi_2 e2
    // V(v,w) = (e2^{-1} e1)^T V(v,wp) (e2^{-1} e1)
    WittCertificate cert{c1.left, c2.left, 2,
                         concat(inverse_word(c2.word), c1.word)};
    if (!verify_certificate(cert.left, cert.right, cert))
        throw Error("Internal", "witness-change certificate does not replay");
    return cert;
}

namespace {

std::vector<RingElem> search_scalars(const Ring& r) {
    std::vector<RingElem> out;
    switch (r->kind) {
    case RingKind::Integers:
    case RingKind::Rationals:
        out.push_back(RingElem::one(r));
        out.push_back(-RingElem::one(r));
        break;
    case RingKind::Modular:
        for (mpz_class z = 1; z < r->modulus; ++z)
            out.push_back(RingElem::from_int(r, z));
        break;
    default:
        break; // no usable generating scalars; search degenerates
    }
    return out;
}

} // namespace

WittCertificate find_equivalence(const AlternatingForm& a, const AlternatingForm& b,
                                 const SearchParams& sp) {
    const Ring& ring = a.matrix.ring();
    std::size_t r = a.matrix.rows() / 2, s = b.matrix.rows() / 2;
    std::size_t m = r > s ? r : s;

    if (padded(a, m) == padded(b, m)) {
        WittCertificate cert{a, b, m, GroupWord{2 * m, {}}};
        return cert;
    }

    if (r == 2 && s == 2) {
        // both are Vaserstein forms of their read-off rows; compose two
        // trivializations through psi_2 when the rows reduce
        try {
            auto [va, wa] = vaserstein_readoff(a);
            auto [vb, wb] = vaserstein_readoff(b);
            GroupWord ra = elementary_reduce_row(va.entries, sp);
            GroupWord rb = elementary_reduce_row(vb.entries, sp);
            WittCertificate ca = trivialize(va, ra, wa);
            WittCertificate cb = trivialize(vb, rb, wb);
            WittCertificate cert{a, b, 2, concat(inverse_word(cb.word), ca.word)};
            if (verify_certificate(a, b, cert)) return cert;
        } catch (const Error&) {
            // fall through to the bounded search
        }
    }

    RingMatrix target = padded(b, m);
    RingMatrix start = padded(a, m);
    std::size_t n = 2 * m;
    std::vector<RingElem> scalars = search_scalars(ring);
    std::size_t explored = 0;
    if (!scalars.empty()) {
        struct State {
            RingMatrix form;
            GroupWord g; // start transported by g: g^T start g = form
        };
        std::deque<State> queue;
        std::unordered_map<std::string, bool> seen;
        queue.push_back(State{start, GroupWord{n, {}}});
        seen[start.to_string()] = true;
        while (!queue.empty() && explored < sp.budget) {
            State st = std::move(queue.front());
            queue.pop_front();
            ++explored;
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = 1; j <= n; ++j) {
                    if (i == j) continue;
                    for (const RingElem& z : scalars) {
                        Letter l{Letter::Kind::E, i, j, z};
                        RingMatrix next =
                            congruence(st.form, letter_matrix(ring, n, l));
                        std::string key = next.to_string();
                        if (seen.count(key)) continue;
                        seen[key] = true;
                        GroupWord g = st.g;
                        g.letters.push_back(l);
                        if (next == target) {
                            // g^T A' g = B' so A' = eps^T B' eps, eps = g^{-1}
                            WittCertificate cert{a, b, m, inverse_word(g)};
                            if (!verify_certificate(a, b, cert))
                                throw Error("Internal",
                                            "search certificate does not replay");
                            return cert;
                        }
                        queue.push_back(State{std::move(next), std::move(g)});
                    }
                }
        }
    }
    throw SearchFailed("no certificate within budget; explored " +
                       std::to_string(explored) + " states");
}

} // namespace sympcomp
