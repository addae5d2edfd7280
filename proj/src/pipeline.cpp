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

#include "sympcomp/pipeline.hpp"

#include "sympcomp/graded.hpp"

namespace sympcomp {

CompletionRecord swan_towber(const RingElem& p, const RingElem& q, const RingElem& r,
                             const RingElem& a, const RingElem& b, const RingElem& c) {
    const Ring& ring = a.ring();
    if (!(p * a + q * b + r * c).is_one())
        throw RelationBroken("p*a + q*b + r*c != 1");
    RingMatrix m = RingMatrix::from_rows(
        ring, {{a * a, b, c},
               {b + r * a, -(r * r) + p * r * b, -p + q * r - p * q * b},
               {c - q * a, p + q * r + p * r * c, -(q * q) - p * q * c}});
    // witness from squaring the Bezout relation:
    // 1 = (pa+qb+rc)^2 = p^2*a^2 + (2paq+q^2b+qrc)*b + (2par+qrb+r^2c)*c
    RingElem two = RingElem::from_int(ring, 2);
    std::vector<RingElem> witness{p * p, two * p * a * q + q * q * b + q * r * c,
                                  two * p * a * r + q * r * b + r * r * c};
    UnimodRow row = unimod_row({a * a, b, c}, witness);
    return completion_record(std::move(row), std::move(m));
}

CompletionRecord complete_row(const UnimodRow& v, const SearchParams& sp) {
    const Ring& r = v.ring();
    if (v.entries == e1_row(r, v.length()).entries)
        return completion_record(v, RingMatrix::identity(r, v.length()));
    try {
        GroupWord w = elementary_reduce_row(v.entries, sp);
        return completion_record(v, eval_word(w, r).inverse());
    } catch (const ReductionUnavailable&) {
        // fall through to the Swan-Towber shape
    }
    if (v.length() == 3 && r->kind == RingKind::Integers &&
        mpz_perfect_square_p(v.entries[0].int_value().get_mpz_t())) {
        mpz_class a_int;
        mpz_sqrt(a_int.get_mpz_t(), v.entries[0].int_value().get_mpz_t());
        RingElem a = RingElem::from_int(r, a_int);
        WitnessResult bez = unimodularity_witness({a, v.entries[1], v.entries[2]});
        if (bez.status == WitnessStatus::Found)
            return swan_towber(bez.cofactors[0], bez.cofactors[1], bez.cofactors[2], a,
                               v.entries[1], v.entries[2]);
    }
    throw NoStrategy("no completion strategy applies to this row");
}

GroupWord symplectic_reduce(const UnimodRow& v, const SearchParams& sp) {
    if (v.length() != 4) throw BadIndices("symplectic reduction needs length 4");
    return symplectic_reduce_row(v.entries, sp);
}

namespace {

RingMatrix one_perp(const RingMatrix& m) {
    return perp(RingMatrix::identity(m.ring(), 1), m);
}

} // namespace

PipelineTrace sp4_trace(const UnimodRow& v, const CompletionRecord& sigma,
                        const CompletionRecord& rho, const SearchParams& sp) {
    const Ring& r = v.ring();
    PipelineTrace t{v, sigma, {}, e1_row(r, 3), {}, rho, {}, {}, {}, {}, {}, {}, {}};
    auto step = [&t](const std::string& name, auto&& body) {
        try {
            body();
            t.checks.emplace_back(name, true);
        } catch (const Error& e) {
            t.checks.emplace_back(name, false);
            throw StepFailed(name, e.what());
        }
    };

    step("input", [&] {
        if (v.length() != 4 || sigma.matrix.rows() != 4 || rho.matrix.rows() != 3)
            throw BadIndices("need a length-4 row, a 4x4 sigma and a 3x3 rho");
        if (sigma.row.entries != v.entries)
            throw FirstCoordMismatch("sigma does not complete v");
    });

    AlternatingForm b_form;
    step("vaserstein-form", [&] {
        t.a_form = congruence_form(alternating_form(psi_form(r, 2)), sigma.matrix);
        auto ro = vaserstein_readoff(t.a_form);
        t.v_prime = std::move(ro.first);
        t.w_prime = std::move(ro.second);
        if (rho.row.entries != t.v_prime.entries)
            throw FirstCoordMismatch("rho does not complete the read-off row");
        b_form = congruence_form(alternating_form(psi_form(r, 2)), one_perp(rho.matrix));
    });

    RingMatrix eps;
    step("witt-certificate", [&] {
        GroupWord red = elementary_reduce_row(t.v_prime.entries, sp);
        WittCertificate ca = trivialize(t.v_prime, red, t.w_prime);
        auto rb = vaserstein_readoff(b_form); // read-off row is again v_prime
        WittCertificate cb = trivialize(rb.first, red, rb.second);
        t.eps_cert = WittCertificate{t.a_form, b_form, 2,
                                     concat(inverse_word(cb.word), ca.word)};
        if (!verify_certificate(t.a_form, b_form, t.eps_cert))
            throw Error("Internal", "composed certificate does not replay");
        eps = eval_word(t.eps_cert.word, r);
    });

    step("symplectic-patch", [&] {
        SymplecticPatch patch = symplectic_patch(t.eps_cert.word, r, sp);
        t.eps1 = patch.rho;
        t.delta1 = eps * one_perp(eval_word(t.eps1, r));
        if (!is_symplectic(t.delta1)) throw DecompositionFailed("delta1 not symplectic");
    });

    step("delta", [&] {
        t.delta = sigma.matrix * one_perp(eval_word(t.eps1, r)) * t.delta1.inverse() *
                  one_perp(rho.matrix).inverse();
        if (!is_symplectic(t.delta)) throw DecompositionFailed("delta not symplectic");
    });

    step("orbit-connector", [&] {
        RingMatrix dd1 = t.delta * t.delta1;
        UnimodRow u = unimod_row(dd1.row(0), dd1.inverse().transpose().row(0));
        GroupWord wu = elementary_reduce_row(u.entries, sp);
        GroupWord wv = elementary_reduce_row(v.entries, sp);
        GroupWord eps_prime = concat(wu, inverse_word(wv)); // u * eval = v
        if (apply_word(u.entries, eps_prime) != v.entries)
            throw RewriteFailed("elementary connector misses v");
        t.eps1_prime = esp_orbit_word(u.entries, eps_prime, sp);
    });

    step("theta", [&] {
        t.theta = t.delta * t.delta1 * eval_word(t.eps1_prime, r);
        if (!is_symplectic(t.theta)) throw DecompositionFailed("theta not symplectic");
        if (t.theta.row(0) != v.entries)
            throw FirstCoordMismatch("theta's first row is not v");
    });

    return t;
}

PipelineTrace sp4_trace(const UnimodRow& v, const SearchParams& sp) {
    CompletionRecord sigma = complete_row(v, sp);
    AlternatingForm a =
        congruence_form(alternating_form(psi_form(v.ring(), 2)), sigma.matrix);
    CompletionRecord rho = complete_row(vaserstein_readoff(a).first, sp);
    return sp4_trace(v, sigma, rho, sp);
}

namespace {

/// Residue ring R/I for the supported principal cases.
Ring residue_ring(const Ring& r, const std::vector<RingElem>& gens) {
    if (gens.size() != 1)
        throw LiftUnsupported("only principal ideals are supported here");
    if (r->kind == RingKind::Integers) {
        mpz_class n = abs(gens[0].int_value());
        if (n < 2) throw LiftUnsupported("need a proper nonzero ideal of ZZ");
        return ring_mod(n);
    }
    if (r->kind == RingKind::Polynomial && ring_is_field(r->base))
        return ring_quotient(r, gens);
    throw LiftUnsupported("no residue-ring factorization for " + ring_to_string(r));
}

} // namespace

RingMatrix relative_complete(const UnimodRow& v, const std::vector<RingElem>& ideal_gens,
                             const SearchParams& sp) {
    const Ring& r = v.ring();
    if (v.length() != 4) throw BadIndices("relative completion needs length 4");
    for (std::size_t k = 0; k < 4; ++k) {
        RingElem d = k == 0 ? v.entries[0] - RingElem::one(r) : v.entries[k];
        WitnessResult m = ideal_membership(ideal_gens, d);
        if (m.status == WitnessStatus::NotUnimodular)
            throw RelationBroken("row is not congruent to e1 modulo the ideal");
        if (m.status == WitnessStatus::Undecidable)
            throw UndecidableHere("cannot decide the congruence precondition");
    }
    if (v.entries == e1_row(r, 4).entries) return RingMatrix::identity(r, 4);

    Ring s = residue_ring(r, ideal_gens);

    // v * M = e1 over R; M mod I then has first row e1 over R/I
    RingMatrix m = eval_word(symplectic_reduce(v, sp), r);
    RingMatrix mbar = m.map_entries([&s](const RingElem& e) { return reduce_into(s, e); });

    // factor mbar into SE letters that fix the row e1: left-clear column 1
    // (letters se(i,1,*) never touch row 1), then the symplectic relations
    // force the remainder into I_2 (+) SL_2 on positions {3,4}
    GroupWord word_s;
    word_s.size = 4;
    RingMatrix n = mbar;
    auto lclear = [&](std::size_t i) {
        RingElem z = -n.at(i - 1, 0);
        if (z.is_zero()) return;
        n = se_generator(s, 4, i, 1, z) * n;
        word_s.letters.push_back(Letter{Letter::Kind::SE, i, 1, -z});
    };
    lclear(3);
    lclear(4);
    lclear(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            bool row_ok = (i == j) ? n.at(i, j).is_one() : n.at(i, j).is_zero();
            bool col_ok = (i == j) ? n.at(j, i).is_one() : n.at(j, i).is_zero();
            if (!row_ok || !col_ok)
                throw Error("Internal", "stabilizer clearing left a nonblock entry");
        }
    GroupWord block = sl2_block_word(s, n.at(2, 2), n.at(2, 3), n.at(3, 2), n.at(3, 3));
    word_s = concat(word_s, block);
    if (eval_word(word_s, s) != mbar)
        throw Error("Internal", "residue factorization does not replay");

    // canonical lift of every letter scalar back to R
    GroupWord word_r = word_s;
    for (Letter& l : word_r.letters) l.z = canonical_lift(l.z);
    RingMatrix s1 = eval_word(word_r, r);
    if (s1.row(0) != e1_row(r, 4).entries || !is_symplectic(s1))
        throw Error("Internal", "lifted stabilizer word lost its shape");

    // fiber pair (s1, m) over C = R (+) I; both components reduce to mbar
    Ring c = ring_excision(r, ideal_gens);
    RingMatrix sigma_tilde(c, 4, 4), sigma_bar(c, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            sigma_tilde.at(i, j) =
                RingElem::make_excision(c, s1.at(i, j), m.at(i, j) - s1.at(i, j));
            sigma_bar.at(i, j) =
                RingElem::make_excision(c, s1.at(i, j), RingElem::zero(r));
        }
    if (!is_symplectic(sigma_tilde))
        throw StepFailed("excision-lift", "lifted completion is not symplectic");
    UnimodRow vt = lift_row(v, c);
    if (row_times(vt.entries, sigma_tilde) != e1_row(c, 4).entries)
        throw StepFailed("excision-lift", "lifted row is not carried to e1");

    RingMatrix delta = sigma_tilde * sigma_bar.inverse();
    if (project_matrix(delta, ProjectionMode::Base) != RingMatrix::identity(r, 4))
        throw StepFailed("excision-delta", "delta is not the identity modulo 0 (+) I");

    RingMatrix theta = project_matrix(delta, ProjectionMode::Hom).inverse();
    if (theta.row(0) != v.entries || !is_symplectic(theta) ||
        !relative_congruent(theta, ideal_gens))
        throw StepFailed("projection", "projected completion fails verification");
    return theta;
}

RingMatrix graded_complete(const UnimodRow& v, const SearchParams& sp) {
    const Ring& r = v.ring();
    if (v.length() != 4) throw BadIndices("graded completion needs length 4");
    if (r->kind != RingKind::Polynomial || !ring_is_field(r->base))
        throw UnsupportedRing("need a graded polynomial ring over a field");
    if (v.entries == e1_row(r, 4).entries) return RingMatrix::identity(r, 4);

    // degree-0 specialization: evaluate the homotopy polynomial at 0
    RingElem zero = RingElem::zero(r);
    std::vector<RingElem> v0;
    for (const RingElem& e : v.entries) v0.push_back(eval_at(swan_weibel(e), zero));

    GroupWord w0 = symplectic_reduce_row(v0, sp);
    std::vector<RingElem> u = apply_word(v.entries, w0);
    // u's degree-0 part is e1, so its first entry has constant term 1
    GroupWord w1 = symplectic_reduce_row(u, sp);

    RingMatrix theta = (eval_word(w0, r) * eval_word(w1, r)).inverse();
    if (theta.row(0) != v.entries || !is_symplectic(theta))
        throw StepFailed("graded", "completion fails verification");
    return theta;
}

} // namespace sympcomp
