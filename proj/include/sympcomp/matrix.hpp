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

#ifndef SYMPCOMP_MATRIX_HPP
#define SYMPCOMP_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "sympcomp/ring.hpp"

namespace sympcomp {

/// Dense matrix over a single ring. Entries are exact; all operations are
/// tolerance-zero.
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(const Ring& r, std::size_t rows, std::size_t cols);

    static RingMatrix identity(const Ring& r, std::size_t n);
    static RingMatrix from_rows(const Ring& r, std::vector<std::vector<RingElem>> rows);

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    RingElem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const RingElem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RingMatrix operator*(const RingMatrix& o) const;
    RingMatrix operator+(const RingMatrix& o) const;
    RingMatrix operator-(const RingMatrix& o) const;
    bool operator==(const RingMatrix& o) const;
    bool operator!=(const RingMatrix& o) const { return !(*this == o); }

    RingMatrix transpose() const;
    std::vector<RingElem> row(std::size_t i) const;

    bool is_identity() const;
    bool is_alternating() const; // skew-symmetric with zero diagonal

    /// Exact determinant: fraction-free Bareiss over domains, cofactor
    /// expansion elsewhere. Square matrices only.
    RingElem det() const;

    /// Pfaffian of an alternating matrix of even size (first-row expansion).
    /// Sign convention: pfaffian of the standard symplectic form is 1.
    RingElem pfaffian() const;

    /// Inverse through the adjugate; requires det to be a unit.
    RingMatrix inverse() const;

    /// Entrywise image under f (result ring is the ring of f's outputs).
    RingMatrix map_entries(const std::function<RingElem(const RingElem&)>& f) const;

    std::string to_string() const;

private:
    Ring ring_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<RingElem> data_;
};

/// An even-sized alternating matrix with its pfaffian cached at construction.
struct AlternatingForm {
    RingMatrix matrix;
    RingElem pfaffian;
};

/// Validates the shape and caches the pfaffian. Throws NotAlternating/OddSize.
AlternatingForm alternating_form(RingMatrix m);

/// Block diagonal sum of two forms; the cached pfaffians multiply.
AlternatingForm perp_form(const AlternatingForm& a, const AlternatingForm& b);

/// phi^T V phi with cached pfaffian pfaffian(V) * det(phi).
AlternatingForm congruence_form(const AlternatingForm& v, const RingMatrix& phi);

/// Block diagonal sum A (+) B.
RingMatrix perp(const RingMatrix& a, const RingMatrix& b);

/// The standard alternating form psi_r of size 2r: the orthogonal sum of r
/// copies of [[0,1],[-1,0]]. Its pfaffian is 1.
RingMatrix psi_form(const Ring& r, std::size_t half_rank);

/// Elementary matrix e_ij(lambda) = I + lambda*E_ij of size n, i != j, 1-based.
RingMatrix elementary_matrix(const Ring& r, std::size_t n, std::size_t i, std::size_t j,
                             const RingElem& lambda);

/// v * M for a row vector v.
std::vector<RingElem> row_times(const std::vector<RingElem>& v, const RingMatrix& m);

/// M^T * A * M (congruence transform).
RingMatrix congruence(const RingMatrix& a, const RingMatrix& m);

} // namespace sympcomp

#endif
