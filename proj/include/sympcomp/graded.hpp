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

#ifndef SYMPCOMP_GRADED_HPP
#define SYMPCOMP_GRADED_HPP

#include <map>

#include "sympcomp/unimodular.hpp"

namespace sympcomp {

/// Homogeneous decomposition of a polynomial-ring element. The components
/// sum to the element; each component is homogeneous of its key degree
/// under the ring's variable weights.
struct GradedElem {
    Ring ring;
    std::map<long, RingElem> components;
};

GradedElem grade_decompose(const RingElem& e);

/// The extension ring A[X] carrying the homotopy variable. The variable is
/// named "X", with underscores appended until the name is fresh in A.
Ring homotopy_ring(const Ring& graded);

/// r_0 + r_1 X + r_2 X^2 + ... in homotopy_ring(A). A ring homomorphism;
/// evaluation at 0 gives the degree-0 part, at 1 recovers the element.
RingElem swan_weibel(const GradedElem& e);
RingElem swan_weibel(const RingElem& e);

/// Entrywise homotopy map; multiplicative on matrix products.
RingMatrix swan_weibel_matrix(const RingMatrix& a);

/// Evaluates a univariate polynomial over A at a point of A. Elements of A
/// itself pass through unchanged.
RingElem eval_at(const RingElem& p, const RingElem& a);

/// The projection R (+) I -> R, (x,i) -> x + i. A ring homomorphism.
RingElem excision_hom(const RingElem& e);

/// Lift of a row congruent to e1 modulo I into the excision ring, with a
/// transported witness: (1 + i_1, i_2, ..., i_n) in pair coordinates.
/// Throws LiftUnsupported when a membership in I cannot be certified.
UnimodRow lift_row(const UnimodRow& v, const Ring& excision);

/// Base keeps only the R coordinate; Hom applies (x,i) -> x + i.
enum class ProjectionMode { Base, Hom };

/// Entrywise projection of a matrix over R (+) I back to R. Both modes are
/// ring homomorphisms, so symplectic matrices project to symplectic ones.
RingMatrix project_matrix(const RingMatrix& alpha, ProjectionMode mode);

} // namespace sympcomp

#endif
