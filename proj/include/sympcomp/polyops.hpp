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

#ifndef SYMPCOMP_POLYOPS_HPP
#define SYMPCOMP_POLYOPS_HPP

#include <vector>

#include "sympcomp/ring.hpp"

namespace sympcomp {

// Utilities on polynomial payloads of a fixed PolynomialRing. All inputs are
// elements of the same polynomial ring unless noted.

/// order-respecting comparison: negative / 0 / positive like strcmp.
int monomial_cmp(const std::vector<int>& a, const std::vector<int>& b, MonomialOrder order);

bool monomial_divides(const std::vector<int>& d, const std::vector<int>& m);
std::vector<int> monomial_mul(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> monomial_div(const std::vector<int>& m, const std::vector<int>& d);
std::vector<int> monomial_lcm(const std::vector<int>& a, const std::vector<int>& b);

/// Leading term of f under `order`; f must be nonzero.
const PolyTerm& leading_term(const RingElem& f, MonomialOrder order);

/// f * coeff * x^mono.
RingElem term_mul(const RingElem& f, const RingElem& coeff, const std::vector<int>& mono);

/// Multivariate division of f by divisors (field coefficients when any
/// divisor's leading coefficient must be inverted). Returns the remainder;
/// if quotients != nullptr it receives one quotient per divisor so that
/// f = sum q[k]*divisors[k] + remainder, exactly.
RingElem poly_reduce(const RingElem& f, const std::vector<RingElem>& divisors,
                     MonomialOrder order, std::vector<RingElem>* quotients = nullptr);

/// Total weighted degree of a monomial under the ring's variable weights.
long weighted_degree(const Ring& poly_ring, const std::vector<int>& exps);

/// Degree in a single variable (index into the ring's vars).
int degree_in(const RingElem& f, std::size_t var_index);

/// Substitute value for the variable at var_index (value lies in the same ring).
RingElem substitute(const RingElem& f, std::size_t var_index, const RingElem& value);

} // namespace sympcomp

#endif
