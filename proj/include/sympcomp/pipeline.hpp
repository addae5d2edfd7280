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

#ifndef SYMPCOMP_PIPELINE_HPP
#define SYMPCOMP_PIPELINE_HPP

#include "sympcomp/witt.hpp"

namespace sympcomp {

/// Determinant-1 completion of (a^2, b, c) from a Bezout relation
/// p*a + q*b + r*c = 1. Throws RelationBroken when the relation fails.
CompletionRecord swan_towber(const RingElem& p, const RingElem& q, const RingElem& r,
                             const RingElem& a, const RingElem& b, const RingElem& c);

/// Determinant-1 completion of any supported row: identity for e1, the
/// inverted reduction word when a reduction engine applies, the Swan-Towber
/// matrix for length-3 rows with a recognizable square first coordinate.
/// Throws NoStrategy when nothing applies.
CompletionRecord complete_row(const UnimodRow& v, const SearchParams& sp = {});

/// SE-only word with v * eval(word) = e1 for length-4 rows; eval(word)^{-1}
/// is then a symplectic completion of v.
GroupWord symplectic_reduce(const UnimodRow& v, const SearchParams& sp = {});

/// Full derivation trace for a symplectic completion built from an SL_4
/// completion sigma of v and an SL_3 completion rho of the read-off row v'.
/// Every intermediate identity is materialized and re-verified; `checks`
/// lists them in order with their outcomes (all true on a returned trace).
struct PipelineTrace {
    UnimodRow v;
    CompletionRecord sigma;
    AlternatingForm a_form;          // sigma^T psi_2 sigma
    UnimodRow v_prime;               // read-off row of a_form
    std::vector<RingElem> w_prime;   // read-off witness
    CompletionRecord rho;            // SL_3 completion of v_prime
    WittCertificate eps_cert;        // a_form = eps^T (1+rho)^T psi_2 (1+rho) eps
    GroupWord eps1;                  // size-3 patch word
    RingMatrix delta1;               // eval(eps) * (1 (+) eval(eps1)), symplectic
    RingMatrix delta;                // sigma * eps^{-1} * (1 (+) rho)^{-1}, symplectic
    GroupWord eps1_prime;            // SE word carrying e1*delta*delta1 to v
    RingMatrix theta;                // delta * delta1 * eval(eps1_prime)
    std::vector<std::pair<std::string, bool>> checks;
};

/// Throws StepFailed naming the first identity that cannot be constructed.
PipelineTrace sp4_trace(const UnimodRow& v, const CompletionRecord& sigma,
                        const CompletionRecord& rho, const SearchParams& sp = {});

/// Convenience variant: builds sigma and rho through complete_row.
PipelineTrace sp4_trace(const UnimodRow& v, const SearchParams& sp = {});

/// Symplectic Theta with e1*Theta = v and Theta congruent to the identity
/// modulo the ideal, for rows congruent to e1 modulo the ideal. Routed
/// through the excision ring R (+) I. Throws LiftUnsupported for ideals or
/// base rings without a usable residue-ring factorization.
RingMatrix relative_complete(const UnimodRow& v, const std::vector<RingElem>& ideal_gens,
                             const SearchParams& sp = {});

/// Symplectic Theta with e1*Theta = v over a graded polynomial ring whose
/// degree-0 part is a field: reduce the degree-0 specialization first, then
/// finish over the full ring.
RingMatrix graded_complete(const UnimodRow& v, const SearchParams& sp = {});

} // namespace sympcomp

#endif
