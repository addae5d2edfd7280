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

#ifndef SYMPCOMP_UNIMODULAR_HPP
#define SYMPCOMP_UNIMODULAR_HPP

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "sympcomp/matrix.hpp"
#include "sympcomp/words.hpp"

namespace sympcomp {

/// A row with a stored witness u satisfying entries . u^T = 1 exactly.
/// The identity is checked at construction and after every transformation.
struct UnimodRow {
    std::vector<RingElem> entries;
    std::vector<RingElem> witness;

    const Ring& ring() const { return entries.front().ring(); }
    std::size_t length() const { return entries.size(); }
};

/// Builds a row, computing a witness when none is supplied. Throws
/// NotUnimodular (proof-backed) or UndecidableHere.
UnimodRow unimod_row(std::vector<RingElem> entries, std::vector<RingElem> witness = {});

/// The standard basis row e1 of the given length.
UnimodRow e1_row(const Ring& r, std::size_t length);

/// A row together with a determinant-1 completion whose first row it is.
struct CompletionRecord {
    UnimodRow row;
    RingMatrix matrix;
};

CompletionRecord completion_record(UnimodRow row, RingMatrix matrix);

/// The 4x4 alternating pfaffian-1 matrix attached to a length-3 row and a
/// witness w with v.w^T = 1. Throws WitnessBroken when the pairing is not 1.
AlternatingForm vaserstein_matrix(const UnimodRow& v, const std::vector<RingElem>& w);

/// Inverse of the construction above: v = (V12,V13,V14), w = (V34,-V24,V23).
/// Requires pfaffian 1 (which equals v.w^T). Throws PfaffianNotOne.
std::pair<UnimodRow, std::vector<RingElem>> vaserstein_readoff(const AlternatingForm& v);

/// (v0^n, v1, v2) with a witness derived in closed form from v's witness.
UnimodRow power_row(const UnimodRow& v, unsigned long n);

/// Compose two length-3 rows sharing their first coordinate:
/// v3 = (a0, b1*a1 - b2*a2', b1*a2 + b2*a1') where (a0',a1',a2') is v1's
/// witness. Throws FirstCoordMismatch.
UnimodRow vaserstein_compose(const UnimodRow& v1, const UnimodRow& v2);

/// Record for e1 * (alpha * beta) with matrix alpha * beta.
CompletionRecord vdk_product(const CompletionRecord& a, const CompletionRecord& b);

/// Elementary word reducing the row to e1 (delegates to the engines).
GroupWord elementary_reduce(const UnimodRow& v, const SearchParams& sp = {});

enum class GeneratorSet { Elementary, SymplecticElementary };

/// Exact orbit partition of all unimodular rows of the given length over
/// ZZ/n under one generator set with all ring scalars. Deterministic; the
/// representative of each orbit is its lexicographically smallest row.
struct OrbitTable {
    mpz_class modulus;
    std::size_t length = 0;
    GeneratorSet generators = GeneratorSet::Elementary;
    /// rep[code] = code of the orbit representative, or -1 if the encoded
    /// row is not unimodular. Codes are base-n digits, first entry most
    /// significant (so code order is lexicographic row order).
    std::vector<std::int64_t> rep;
    std::size_t orbit_count = 0;

    std::int64_t encode(const std::vector<long>& row) const;
    std::vector<long> decode(std::int64_t code) const;
    void write_csv(std::ostream& os) const;
};

OrbitTable orbit_bfs(const Ring& ring, std::size_t length, GeneratorSet gens);

} // namespace sympcomp

#endif
