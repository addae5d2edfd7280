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

#include "sympcomp/words.hpp"

namespace sympcomp {

WordFlavor GroupWord::flavor() const {
    bool has_e = false, has_se = false;
    for (const auto& l : letters)
        (l.kind == Letter::Kind::E ? has_e : has_se) = true;
    if (has_e && has_se) return WordFlavor::Mixed;
    if (has_se) return WordFlavor::SymplecticOnly;
    return WordFlavor::ElementaryOnly;
}

bool GroupWord::symplectic_only() const {
    for (const auto& l : letters)
        if (l.kind != Letter::Kind::SE) return false;
    return true;
}

std::size_t sigma_index(std::size_t i) { return (i % 2 == 0) ? i - 1 : i + 1; }

RingMatrix se_generator(const Ring& r, std::size_t two_n, std::size_t i, std::size_t j,
                        const RingElem& z) {
    if (i == j || i < 1 || j < 1 || i > two_n || j > two_n)
        throw BadIndices("se generator indices");
    if (two_n % 2 != 0) throw OddSize("se generator needs even size");
    RingMatrix m = RingMatrix::identity(r, two_n);
    m.at(i - 1, j - 1) = z;
    if (i != sigma_index(j)) {
        // mirror term -(-1)^{i+j} z at position (sigma(j), sigma(i))
        RingElem mz = ((i + j) % 2 == 0) ? -z : z;
        m.at(sigma_index(j) - 1, sigma_index(i) - 1) = mz;
    }
    return m;
}

RingMatrix letter_matrix(const Ring& r, std::size_t size, const Letter& l) {
    if (l.kind == Letter::Kind::E) return elementary_matrix(r, size, l.i, l.j, l.z);
    return se_generator(r, size, l.i, l.j, l.z);
}

RingMatrix eval_word(const GroupWord& w, const Ring& r) {
    RingMatrix acc = RingMatrix::identity(r, w.size);
    for (const auto& l : w.letters) acc = acc * letter_matrix(r, w.size, l);
    return acc;
}

GroupWord inverse_word(const GroupWord& w) {
    GroupWord out;
    out.size = w.size;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back({it->kind, it->i, it->j, -it->z});
    return out;
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
    if (a.size != b.size && !a.letters.empty() && !b.letters.empty())
        throw BadIndices("concatenating words of different sizes");
    GroupWord out;
    out.size = a.letters.empty() ? b.size : a.size;
    out.letters = a.letters;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

void apply_letter(std::vector<RingElem>& row, const Letter& l) {
    // (row * M)_j picks up z * row_i; the SE mirror touches position sigma(i)
    // from source sigma(j). Targets and sources never collide, but both
    // updates must read pre-update values.
    RingElem src_i = row[l.i - 1];
    if (l.kind == Letter::Kind::E || l.i == sigma_index(l.j)) {
        row[l.j - 1] = row[l.j - 1] + l.z * src_i;
        return;
    }
    RingElem src_sj = row[sigma_index(l.j) - 1];
    row[l.j - 1] = row[l.j - 1] + l.z * src_i;
    RingElem mz = ((l.i + l.j) % 2 == 0) ? -l.z : l.z;
    row[sigma_index(l.i) - 1] = row[sigma_index(l.i) - 1] + mz * src_sj;
}

std::vector<RingElem> apply_word(std::vector<RingElem> row, const GroupWord& w) {
    for (const auto& l : w.letters) apply_letter(row, l);
    return row;
}

bool is_symplectic(const RingMatrix& alpha) {
    if (alpha.rows() != alpha.cols() || alpha.rows() % 2 != 0) return false;
    RingMatrix psi = psi_form(alpha.ring(), alpha.rows() / 2);
    return congruence(psi, alpha) == psi;
}

bool sp_psi_member(const RingMatrix& alpha, const RingMatrix& psi) {
    if (alpha.rows() != psi.rows() || alpha.rows() != alpha.cols()) return false;
    if (!alpha.det().is_one()) return false;
    return congruence(psi, alpha) == psi;
}

bool relative_congruent(const RingMatrix& alpha, const std::vector<RingElem>& gens) {
    if (alpha.rows() != alpha.cols()) return false;
    RingMatrix diff = alpha - RingMatrix::identity(alpha.ring(), alpha.rows());
    for (std::size_t i = 0; i < diff.rows(); ++i)
        for (std::size_t j = 0; j < diff.cols(); ++j) {
            WitnessResult w = ideal_membership(gens, diff.at(i, j));
            if (w.status == WitnessStatus::Undecidable)
                throw UndecidableHere("entry membership for relative congruence");
            if (w.status != WitnessStatus::Found) return false;
        }
    return true;
}

} // namespace sympcomp
