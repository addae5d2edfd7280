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

#ifndef SYMPCOMP_WORDS_HPP
#define SYMPCOMP_WORDS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "sympcomp/matrix.hpp"
#include "sympcomp/ring.hpp"

namespace sympcomp {

/// One generator letter. E(i,j,z) is the plain transvection I + z*E_ij.
/// SE(i,j,z) is the symplectic generator: equal to E(i,j,z) when i = sigma(j),
/// otherwise I + z*E_ij - (-1)^{i+j} z*E_{sigma(j),sigma(i)}.
struct Letter {
    enum class Kind { E, SE };
    Kind kind;
    std::size_t i, j; // 1-based, i != j
    RingElem z;
};

enum class WordFlavor { ElementaryOnly, SymplecticOnly, Mixed };

/// An ordered product of generator letters acting on rows from the right.
struct GroupWord {
    std::size_t size = 0; // matrix dimension the letters act on
    std::vector<Letter> letters;

    WordFlavor flavor() const;
    bool elementary_only() const { return flavor() != WordFlavor::SymplecticOnly || letters.empty(); }
    bool symplectic_only() const;
};

/// The pairing involution on indices: 2i <-> 2i-1 (1-based).
std::size_t sigma_index(std::size_t i);

/// Matrix of a single SE generator of size two_n.
RingMatrix se_generator(const Ring& r, std::size_t two_n, std::size_t i, std::size_t j,
                        const RingElem& z);

/// Matrix of any letter at the word's size.
RingMatrix letter_matrix(const Ring& r, std::size_t size, const Letter& l);

/// Left-to-right product of the letter matrices; empty word gives the identity.
RingMatrix eval_word(const GroupWord& w, const Ring& r);

/// Reversed word with negated scalars; eval(inverse) * eval(w) = I.
GroupWord inverse_word(const GroupWord& w);

GroupWord concat(const GroupWord& a, const GroupWord& b);

/// In-place right action of one letter on a row (row <- row * letter_matrix).
void apply_letter(std::vector<RingElem>& row, const Letter& l);

/// row * eval(w), computed letter-by-letter.
std::vector<RingElem> apply_word(std::vector<RingElem> row, const GroupWord& w);

/// alpha^T psi alpha = psi for the standard form of matching size.
bool is_symplectic(const RingMatrix& alpha);

/// det(alpha) = 1 and alpha^T psi alpha = psi for the given invertible form.
bool sp_psi_member(const RingMatrix& alpha, const RingMatrix& psi);

/// alpha = identity modulo the ideal generated by gens (entrywise membership).
/// Throws UndecidableHere when membership cannot be decided.
bool relative_congruent(const RingMatrix& alpha, const std::vector<RingElem>& gens);

/// Search/reproducibility knobs shared by all partial engines.
struct SearchParams {
    unsigned long seed = 0;
    unsigned long budget = 100000;
};

/// Word of E letters with row * eval(word) = e1. Supported rings: fields,
/// ZZ, ZZ/n, univariate polynomials over a field, multivariate polynomials
/// over a field (randomized), local quotients, and any ring where some
/// coordinate is a unit. Throws ReductionUnavailable otherwise.
GroupWord elementary_reduce_row(const std::vector<RingElem>& row, const SearchParams& sp = {});

/// Word of SE letters with row * eval(word) = e1, for rows of length 4.
/// Same ring coverage as elementary_reduce_row.
GroupWord symplectic_reduce_row(const std::vector<RingElem>& row, const SearchParams& sp = {});

/// SE word (letters on positions {3,4} only) evaluating to I2 (+) N for a
/// determinant-1 2x2 matrix N given by its entries {n11,n12;n21,n22}.
GroupWord sl2_block_word(const Ring& r, const RingElem& n11, const RingElem& n12,
                         const RingElem& n21, const RingElem& n22);

/// Factor a symplectic 4x4 matrix into SE letters exactly.
GroupWord esp_factor(const RingMatrix& s, const SearchParams& sp = {});

/// Given an elementary word eps of even size 4 whose congruence
/// eval(eps)^T psi eval(eps) is an alternating pfaffian-1 form, produce a
/// size-3 elementary word rho with eval(eps) * (1 (+) eval(rho)) symplectic.
/// The SE word reproducing that product is attached when factoring succeeds.
struct SymplecticPatch {
    GroupWord rho;                     // elementary, size 3
    std::optional<GroupWord> esp_word; // SE word for eval(eps)*(1 (+) eval(rho))
};
SymplecticPatch symplectic_patch(const GroupWord& eps, const Ring& r,
                                 const SearchParams& sp = {});

/// Matrix eta with e1 * eval(eps) = e1 * eta and eta in Sp_psi, delivered with
/// an elementary word evaluating to eta. Supported for psi equal to the
/// standard form; TransferFailed otherwise.
struct SpTransfer {
    RingMatrix eta;
    GroupWord word; // elementary letters, eval = eta
};
SpTransfer sp_transfer(const GroupWord& eps, const RingMatrix& psi, const Ring& r,
                       const SearchParams& sp = {});

/// SE-only word mu with v * eval(eps) = v * eval(mu) for unimodular v of
/// length 4. Throws RewriteFailed when either reduction engine fails.
GroupWord esp_orbit_word(const std::vector<RingElem>& v, const GroupWord& eps,
                         const SearchParams& sp = {});

} // namespace sympcomp

#endif
