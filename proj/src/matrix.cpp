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

#include "sympcomp/matrix.hpp"

#include <sstream>

namespace sympcomp {

RingMatrix::RingMatrix(const Ring& r, std::size_t rows, std::size_t cols)
    : ring_(r), rows_(rows), cols_(cols), data_(rows * cols, RingElem::zero(r)) {}

RingMatrix RingMatrix::identity(const Ring& r, std::size_t n) {
    RingMatrix m(r, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RingElem::one(r);
    return m;
}

RingMatrix RingMatrix::from_rows(const Ring& r, std::vector<std::vector<RingElem>> rows) {
    if (rows.empty()) throw NonSquare("matrix needs at least one row");
    RingMatrix m(r, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw NonSquare("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) {
            if (!ring_equal(rows[i][j].ring(), r))
                throw RingMismatch("matrix entry outside the matrix ring");
            m.at(i, j) = std::move(rows[i][j]);
        }
    }
    return m;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
    if (!ring_equal(ring_, o.ring_)) throw RingMismatch("matrix product");
    if (cols_ != o.rows_) throw NonSquare("inner dimensions disagree");
    RingMatrix out(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const RingElem& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const RingElem& b = o.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) = out.at(i, j) + a * b;
            }
        }
    return out;
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
    if (!ring_equal(ring_, o.ring_) || rows_ != o.rows_ || cols_ != o.cols_)
        throw RingMismatch("matrix sum shape");
    RingMatrix out(ring_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const {
    if (!ring_equal(ring_, o.ring_) || rows_ != o.rows_ || cols_ != o.cols_)
        throw RingMismatch("matrix difference shape");
    RingMatrix out(ring_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
}

bool RingMatrix::operator==(const RingMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != o.data_[i]) return false;
    return true;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix out(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::vector<RingElem> RingMatrix::row(std::size_t i) const {
    std::vector<RingElem> r;
    r.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
}

bool RingMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

bool RingMatrix::is_alternating() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (!at(i, i).is_zero()) return false;
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    }
    return true;
}

namespace {

RingElem det_cofactor(const RingMatrix& m, std::vector<std::size_t> cols) {
    const Ring& r = m.ring();
    std::size_t row = m.rows() - cols.size();
    if (cols.size() == 1) return m.at(row, cols[0]);
    RingElem acc = RingElem::zero(r);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const RingElem& a = m.at(row, cols[k]);
        if (a.is_zero()) continue;
        std::vector<std::size_t> sub;
        sub.reserve(cols.size() - 1);
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != k) sub.push_back(cols[t]);
        RingElem term = a * det_cofactor(m, std::move(sub));
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

RingElem RingMatrix::det() const {
    if (rows_ != cols_) throw NonSquare("determinant of a non-square matrix");
    const Ring& r = ring_;
    std::size_t n = rows_;
    if (n == 0) return RingElem::one(r);
    if (!ring_is_domain(r)) {
        std::vector<std::size_t> cols(n);
        for (std::size_t j = 0; j < n; ++j) cols[j] = j;
        return det_cofactor(*this, std::move(cols));
    }
    // fraction-free Bareiss; every division below is exact in a domain
    RingMatrix w = *this;
    RingElem prev = RingElem::one(r);
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && w.at(p, k).is_zero()) ++p;
            if (p == n) return RingElem::zero(r);
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                RingElem num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                auto q = num.divexact(prev);
                if (!q) throw Error("BareissBroken", "inexact division in a domain");
                w.at(i, j) = *q;
            }
        prev = w.at(k, k);
    }
    RingElem d = w.at(n - 1, n - 1);
    return neg ? -d : d;
}

namespace {

RingElem pf_expand(const RingMatrix& m, std::vector<std::size_t> idx) {
    const Ring& r = m.ring();
    if (idx.empty()) return RingElem::one(r);
    RingElem acc = RingElem::zero(r);
    // expansion along the first remaining row: Pf(A) = sum_j (-1)^j A_{0,j} Pf(A
    // with rows/cols 0 and j removed), j running over the remaining indices
    for (std::size_t k = 1; k < idx.size(); ++k) {
        const RingElem& a = m.at(idx[0], idx[k]);
        if (a.is_zero()) continue;
        std::vector<std::size_t> sub;
        sub.reserve(idx.size() - 2);
        for (std::size_t t = 1; t < idx.size(); ++t)
            if (t != k) sub.push_back(idx[t]);
        RingElem term = a * pf_expand(m, std::move(sub));
        acc = (k % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

RingElem RingMatrix::pfaffian() const {
    if (rows_ != cols_) throw NonSquare("pfaffian of a non-square matrix");
    if (rows_ % 2 != 0) throw OddSize("pfaffian needs even size");
    if (!is_alternating()) throw NotAlternating("pfaffian of a non-alternating matrix");
    std::vector<std::size_t> idx(rows_);
    for (std::size_t i = 0; i < rows_; ++i) idx[i] = i;
    return pf_expand(*this, std::move(idx));
}

RingMatrix RingMatrix::inverse() const {
    if (rows_ != cols_) throw NonSquare("inverse of a non-square matrix");
    RingElem d = det();
    auto di = d.inverse();
    if (!di) throw Error("NotInvertible", "determinant " + d.to_string() + " is not a unit");
    std::size_t n = rows_;
    RingMatrix adj(ring_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // adj(j,i) = (-1)^{i+j} * minor(i,j)
            RingMatrix minor(ring_, n - 1, n - 1);
            for (std::size_t a = 0, ai = 0; a < n; ++a) {
                if (a == i) continue;
                for (std::size_t b = 0, bj = 0; b < n; ++b) {
                    if (b == j) continue;
                    minor.at(ai, bj) = at(a, b);
                    ++bj;
                }
                ++ai;
            }
            RingElem md = minor.det();
            adj.at(j, i) = ((i + j) % 2 == 0) ? md : -md;
        }
    RingMatrix out(ring_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = adj.at(i, j) * *di;
    return out;
}

RingMatrix RingMatrix::map_entries(const std::function<RingElem(const RingElem&)>& f) const {
    if (data_.empty()) throw NonSquare("map_entries on an empty matrix");
    RingElem first = f(data_[0]);
    RingMatrix out(first.ring(), rows_, cols_);
    out.at(0, 0) = first;
    for (std::size_t i = 1; i < data_.size(); ++i) out.data_[i] = f(data_[i]);
    return out;
}

std::string RingMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).to_string();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

AlternatingForm alternating_form(RingMatrix m) {
    RingElem pf = m.pfaffian(); // validates square, even, alternating
    return AlternatingForm{std::move(m), std::move(pf)};
}

AlternatingForm perp_form(const AlternatingForm& a, const AlternatingForm& b) {
    return AlternatingForm{perp(a.matrix, b.matrix), a.pfaffian * b.pfaffian};
}

AlternatingForm congruence_form(const AlternatingForm& v, const RingMatrix& phi) {
    AlternatingForm out{congruence(v.matrix, phi), v.pfaffian * phi.det()};
    if (out.matrix.pfaffian() != out.pfaffian)
        throw Error("PfaffianTransport", "congruence broke the pfaffian identity");
    return out;
}

RingMatrix perp(const RingMatrix& a, const RingMatrix& b) {
    if (!ring_equal(a.ring(), b.ring())) throw RingMismatch("block sum");
    RingMatrix out(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return out;
}

RingMatrix psi_form(const Ring& r, std::size_t half_rank) {
    RingMatrix out(r, 2 * half_rank, 2 * half_rank);
    for (std::size_t k = 0; k < half_rank; ++k) {
        out.at(2 * k, 2 * k + 1) = RingElem::one(r);
        out.at(2 * k + 1, 2 * k) = -RingElem::one(r);
    }
    return out;
}

RingMatrix elementary_matrix(const Ring& r, std::size_t n, std::size_t i, std::size_t j,
                             const RingElem& lambda) {
    if (i == j) throw DiagonalIndex("elementary matrix needs i != j");
    if (i < 1 || j < 1 || i > n || j > n) throw BadIndices("elementary index out of range");
    RingMatrix m = RingMatrix::identity(r, n);
    m.at(i - 1, j - 1) = lambda;
    return m;
}

std::vector<RingElem> row_times(const std::vector<RingElem>& v, const RingMatrix& m) {
    if (v.size() != m.rows()) throw NonSquare("row length does not match matrix rows");
    std::vector<RingElem> out(m.cols(), RingElem::zero(m.ring()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[j] = out[j] + v[i] * m.at(i, j);
    }
    return out;
}

RingMatrix congruence(const RingMatrix& a, const RingMatrix& m) {
    return m.transpose() * a * m;
}

} // namespace sympcomp
