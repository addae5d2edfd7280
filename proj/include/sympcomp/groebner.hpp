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

#ifndef SYMPCOMP_GROEBNER_HPP
#define SYMPCOMP_GROEBNER_HPP

#include <vector>

#include "sympcomp/ring.hpp"

namespace sympcomp {

/// Reduced Groebner basis together with an expression of each basis element
/// in terms of the input generators: basis[i] = sum cofactors[i][j] * gens[j].
struct GroebnerResult {
    std::vector<RingElem> basis;
    std::vector<std::vector<RingElem>> cofactors;
};

/// Buchberger's algorithm over a polynomial ring with field coefficients
/// (QQ or ZZ/p). Deterministic: same input, same order, same output.
/// The returned basis is reduced and has monic leading coefficients, sorted
/// by increasing leading monomial.
GroebnerResult groebner_with_cofactors(const std::vector<RingElem>& gens, MonomialOrder order);

} // namespace sympcomp

#endif
