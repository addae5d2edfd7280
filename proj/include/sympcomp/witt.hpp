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

#ifndef SYMPCOMP_WITT_HPP
#define SYMPCOMP_WITT_HPP

#include "sympcomp/unimodular.hpp"

namespace sympcomp {

/// An equivalence class in the elementary symplectic Witt group, held by a
/// pfaffian-1 alternating representative.
struct WittClass {
    AlternatingForm representative;
};

WittClass witt_class(AlternatingForm representative);

/// Certificate that left ~ right: with both sides padded by standard forms
/// to the common size 2m and eps = eval(word),
///     left (+) psi_{m-r}  =  eps^T (right (+) psi_{m-s}) eps.
/// Equality in the group is always witnessed this way; there is no normal
/// form.
struct WittCertificate {
    AlternatingForm left;  // size 2r
    AlternatingForm right; // size 2s
    std::size_t m = 0;     // common half-size, m >= max(r, s)
    GroupWord word;        // elementary, size 2m, determinant 1
};

/// Replays the defining congruence exactly. Returns false when any part of
/// the identity fails; sizes inconsistent with m also yield false.
bool verify_certificate(const AlternatingForm& a, const AlternatingForm& b,
                        const WittCertificate& cert);

/// Orthogonal sum of representatives; pfaffians multiply to 1.
WittClass perp_class(const WittClass& a, const WittClass& b);

/// phi^T V phi with the cached pfaffian transported by det(phi).
AlternatingForm congruence_transport(const AlternatingForm& v, const RingMatrix& phi);

/// Certificate relating V(v,w) and psi_2, built from a word that reduces v
/// to e1: transport by (1 (+) eval(redword)) reaches V(e1,w'') whose first
/// residual entry is 1, then two explicit letters clear the rest.
/// Throws ReductionMismatch when redword does not reduce v.
WittCertificate trivialize(const UnimodRow& v, const GroupWord& redword,
                           const std::vector<RingElem>& w);

/// Certificate relating V(v,w) and V(v,wp), by composing two trivialization
/// certificates through psi_2. Throws SearchFailed when no reduction word
/// for v can be found within the budget.
WittCertificate change_witness(const UnimodRow& v, const std::vector<RingElem>& w,
                               const std::vector<RingElem>& wp,
                               const SearchParams& sp = {});

/// Certificate relating two pfaffian-1 forms: equality fast path, the
/// trivialization route for 4x4 forms, then a bounded breadth-first search
/// over elementary congruences. Throws SearchFailed carrying the number of
/// explored states when the budget runs out.
WittCertificate find_equivalence(const AlternatingForm& a, const AlternatingForm& b,
                                 const SearchParams& sp = {});

} // namespace sympcomp

#endif
