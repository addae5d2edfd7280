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

#include "sympcomp/unimodular.hpp"

#include <deque>
#include <numeric>

namespace sympcomp {

UnimodRow unimod_row(std::vector<RingElem> entries, std::vector<RingElem> witness) {
    if (entries.size() < 2) throw BadIndices("rows need at least two entries");
    for (const auto& e : entries) require_same_ring(e, entries.front());
    if (witness.empty()) {
        WitnessResult w = unimodularity_witness(entries);
        if (w.status == WitnessStatus::NotUnimodular)
            throw NotUnimodular("entries do not generate the unit ideal");
        if (w.status == WitnessStatus::Undecidable)
            throw UndecidableHere("no witness procedure for " +
                                  ring_to_string(entries.front().ring()));
        witness = std::move(w.cofactors);
    }
    if (witness.size() != entries.size() || !dot(entries, witness).is_one())
        throw WitnessBroken("stored witness does not pair to 1");
    return UnimodRow{std::move(entries), std::move(witness)};
}

UnimodRow e1_row(const Ring& r, std::size_t length) {
    std::vector<RingElem> e(length, RingElem::zero(r));
    e[0] = RingElem::one(r);
    return UnimodRow{e, e};
}

CompletionRecord completion_record(UnimodRow row, RingMatrix matrix) {
    if (matrix.rows() != matrix.cols() || matrix.rows() != row.length())
        throw NonSquare("completion matrix size must match the row length");
    if (matrix.row(0) != row.entries)
        throw FirstCoordMismatch("first matrix row differs from the row");
    if (!matrix.det().is_one())
        throw Error("DeterminantNotOne", "completion must have determinant 1");
    return CompletionRecord{std::move(row), std::move(matrix)};
}

AlternatingForm vaserstein_matrix(const UnimodRow& v, const std::vector<RingElem>& w) {
    if (v.length() != 3 || w.size() != 3) throw BadIndices("length-3 rows required");
    const Ring& r = v.ring();
    if (!dot(v.entries, w).is_one()) throw WitnessBroken("v . w^T != 1");
    const RingElem &v0 = v.entries[0], &v1 = v.entries[1], &v2 = v.entries[2];
    const RingElem &w0 = w[0], &w1 = w[1], &w2 = w[2];
    RingElem z = RingElem::zero(r);
    RingMatrix m = RingMatrix::from_rows(
        r, {{z, v0, v1, v2},
            {-v0, z, w2, -w1},
            {-v1, -w2, z, w0},
            {-v2, w1, -w0, z}});
    AlternatingForm out = alternating_form(std::move(m));
    if (!out.pfaffian.is_one())
        throw Error("PfaffianBroken", "pairing 1 must force pfaffian 1");
    return out;
}

std::pair<UnimodRow, std::vector<RingElem>> vaserstein_readoff(const AlternatingForm& vf) {
    const RingMatrix& m = vf.matrix;
    if (m.rows() != 4) throw BadIndices("read-off needs a 4x4 form");
    if (!vf.pfaffian.is_one()) throw PfaffianNotOne("read-off needs pfaffian 1");
    std::vector<RingElem> v{m.at(0, 1), m.at(0, 2), m.at(0, 3)};
    std::vector<RingElem> w{m.at(2, 3), -m.at(1, 3), m.at(1, 2)};
    // the pfaffian expands to exactly v . w^T, so w is a witness
    UnimodRow row = unimod_row(v, w);
    return {std::move(row), std::move(w)};
}

UnimodRow power_row(const UnimodRow& v, unsigned long n) {
    if (v.length() != 3) throw BadIndices("power rows are defined for length 3");
    if (n == 0) throw BadIndices("the exponent must be positive");
    const Ring& r = v.ring();
    // with s = u1 v1 + u2 v2 we have (v0 u0)^n = (1-s)^n = 1 - s*q(s) where
    // q(s) = sum_{k=1..n} C(n,k) (-1)^{k-1} s^{k-1}; hence
    // (v0^n, v1, v2) . (u0^n, q u1, q u2)^T = 1
    RingElem s = v.witness[1] * v.entries[1] + v.witness[2] * v.entries[2];
    RingElem q = RingElem::zero(r);
    RingElem spow = RingElem::one(r);
    for (unsigned long k = 1; k <= n; ++k) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, k);
        if (k % 2 == 0) binom = -binom;
        q = q + RingElem::from_int(r, binom) * spow;
        if (k < n) spow = spow * s;
    }
    std::vector<RingElem> entries{v.entries[0].pow(n), v.entries[1], v.entries[2]};
    std::vector<RingElem> witness{v.witness[0].pow(n), q * v.witness[1], q * v.witness[2]};
    return unimod_row(std::move(entries), std::move(witness));
}

UnimodRow vaserstein_compose(const UnimodRow& v1, const UnimodRow& v2) {
    if (v1.length() != 3 || v2.length() != 3) throw BadIndices("length-3 rows required");
    require_same_ring(v1.entries[0], v2.entries[0]);
    if (v1.entries[0] != v2.entries[0])
        throw FirstCoordMismatch("rows must share their first coordinate");
    const RingElem &a1 = v1.entries[1], &a2 = v1.entries[2];
    const RingElem &a1p = v1.witness[1], &a2p = v1.witness[2];
    const RingElem &b1 = v2.entries[1], &b2 = v2.entries[2];
    std::vector<RingElem> entries{v1.entries[0], b1 * a1 - b2 * a2p, b1 * a2 + b2 * a1p};
    return unimod_row(std::move(entries));
}

CompletionRecord vdk_product(const CompletionRecord& a, const CompletionRecord& b) {
    if (!ring_equal(a.matrix.ring(), b.matrix.ring()))
        throw RingMismatch("records over different rings");
    if (a.matrix.rows() != b.matrix.rows()) throw NonSquare("records of different sizes");
    RingMatrix prod = a.matrix * b.matrix;
    UnimodRow row = unimod_row(prod.row(0));
    return completion_record(std::move(row), std::move(prod));
}

GroupWord elementary_reduce(const UnimodRow& v, const SearchParams& sp) {
    return elementary_reduce_row(v.entries, sp);
}

// ------------------------------------------------------------------ orbits

std::int64_t OrbitTable::encode(const std::vector<long>& row) const {
    long n = static_cast<long>(modulus.get_si());
    std::int64_t code = 0;
    for (long d : row) code = code * n + d;
    return code;
}

std::vector<long> OrbitTable::decode(std::int64_t code) const {
    long n = static_cast<long>(modulus.get_si());
    std::vector<long> row(length, 0);
    for (std::size_t k = length; k-- > 0;) {
        row[k] = static_cast<long>(code % n);
        code /= n;
    }
    return row;
}

void OrbitTable::write_csv(std::ostream& os) const {
    os << "row,representative\n";
    for (std::size_t code = 0; code < rep.size(); ++code) {
        if (rep[code] < 0) continue;
        auto row = decode(static_cast<std::int64_t>(code));
        auto rrow = decode(rep[code]);
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
        os << ",";
        for (std::size_t k = 0; k < rrow.size(); ++k) os << (k ? " " : "") << rrow[k];
        os << "\n";
    }
}

namespace {

long gcd_long(long a, long b) {
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

OrbitTable orbit_bfs(const Ring& ring, std::size_t length, GeneratorSet gens) {
    if (ring->kind != RingKind::Modular)
        throw UnsupportedRing("orbit enumeration needs a finite ring ZZ/n");
    if (gens == GeneratorSet::SymplecticElementary && length % 2 != 0)
        throw OddSize("symplectic generators need even length");
    long n = static_cast<long>(ring->modulus.get_si());
    double total = 1;
    for (std::size_t k = 0; k < length; ++k) total *= static_cast<double>(n);
    if (total > 1e7) throw Error("BudgetExceeded", "state space larger than 10^7");
    std::size_t space = 1;
    for (std::size_t k = 0; k < length; ++k) space *= static_cast<std::size_t>(n);

    OrbitTable table;
    table.modulus = ring->modulus;
    table.length = length;
    table.generators = gens;
    table.rep.assign(space, -1);

    // precompute unimodularity: gcd(entries..., n) == 1
    std::vector<char> unimod(space, 0);
    {
        std::vector<long> row(length, 0);
        for (std::size_t code = 0; code < space; ++code) {
            long g = n;
            std::size_t c = code;
            for (std::size_t k = length; k-- > 0;) {
                row[k] = static_cast<long>(c % n);
                c /= n;
            }
            for (long d : row) g = gcd_long(g, d);
            unimod[code] = (g == 1);
        }
    }

    // strides: digit k has weight n^(length-1-k)
    std::vector<std::int64_t> stride(length, 1);
    for (std::size_t k = length; k-- > 1;) stride[k - 1] = stride[k] * n;

    std::vector<long> row(length);
    std::vector<long> next(length);
    std::deque<std::int64_t> queue;
    for (std::size_t start = 0; start < space; ++start) {
        if (!unimod[start] || table.rep[start] >= 0) continue;
        ++table.orbit_count;
        table.rep[start] = static_cast<std::int64_t>(start);
        queue.clear();
        queue.push_back(static_cast<std::int64_t>(start));
        while (!queue.empty()) {
            std::int64_t code = queue.front();
            queue.pop_front();
            // decode once per popped state
            std::int64_t c = code;
            for (std::size_t k = length; k-- > 0;) {
                row[k] = static_cast<long>(c % n);
                c /= n;
            }
            for (std::size_t i = 1; i <= length; ++i)
                for (std::size_t j = 1; j <= length; ++j) {
                    if (i == j) continue;
                    for (long z = 1; z < n; ++z) {
                        next = row;
                        next[j - 1] = (next[j - 1] + z * next[i - 1]) % n;
                        if (gens == GeneratorSet::SymplecticElementary) {
                            std::size_t si = sigma_index(i), sj = sigma_index(j);
                            if (i != sj) {
                                long mz = ((i + j) % 2 == 0) ? (n - z) % n : z;
                                // mirror reads the pre-update source sigma(j)
                                next[si - 1] =
                                    (next[si - 1] + mz * row[sj - 1]) % n;
                            }
                        }
                        std::int64_t ncode = 0;
                        for (std::size_t k = 0; k < length; ++k)
                            ncode = ncode * n + next[k];
                        if (table.rep[ncode] < 0) {
                            table.rep[ncode] = static_cast<std::int64_t>(start);
                            queue.push_back(ncode);
                        }
                    }
                }
        }
    }
    return table;
}

} // namespace sympcomp
