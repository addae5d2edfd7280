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

// Row-reduction engines over the supported rings, and the word-rewriting
// operations built on them. Every engine re-checks its defining identity on
// the working row before returning; a wrong word is impossible to emit.

#include <algorithm>
#include <random>

#include "sympcomp/polyops.hpp"
#include "sympcomp/words.hpp"

namespace sympcomp {

namespace {

bool row_is_e1(const std::vector<RingElem>& c) {
    if (!c[0].is_one()) return false;
    for (std::size_t k = 1; k < c.size(); ++k)
        if (!c[k].is_zero()) return false;
    return true;
}

std::optional<RingElem> try_unit(const RingElem& e) {
    try {
        return e.inverse();
    } catch (const UndecidableHere&) {
        return std::nullopt;
    }
}

// working row + accumulated word; every emitted letter is applied immediately
struct Worker {
    std::vector<RingElem> c;
    GroupWord w;
    Letter::Kind kind;

    Worker(std::vector<RingElem> row, Letter::Kind k) : c(std::move(row)), kind(k) {
        w.size = c.size();
    }
    void emit(std::size_t i, std::size_t j, const RingElem& z) {
        if (z.is_zero()) return;
        Letter l{kind, i, j, z};
        apply_letter(c, l);
        w.letters.push_back(l);
    }
};

bool euclid_supported(const Ring& r) {
    if (r->kind == RingKind::Integers) return true;
    return r->kind == RingKind::Polynomial && r->vars.size() == 1 && ring_is_field(r->base);
}

// floor quotient over ZZ; polynomial quotient over k[x]
RingElem euclid_quo(const RingElem& a, const RingElem& b) {
    const Ring& r = a.ring();
    if (r->kind == RingKind::Integers) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a.int_value().get_mpz_t(), b.int_value().get_mpz_t());
        return RingElem::from_int(r, q);
    }
    std::vector<RingElem> q;
    poly_reduce(a, {b}, MonomialOrder::Lex, &q);
    return q[0];
}

// reduce (c[a-1], c[b-1]) to (gcd, 0) by pair operations; positions 1-based.
// Callers guarantee that letters between a and b have no side effects on the
// working row (pure pairs, or mirror sources currently zero).
void euclid_pair(Worker& wk, std::size_t a, std::size_t b) {
    RingElem one = RingElem::one(wk.c[0].ring());
    std::size_t x = a, y = b;
    for (int guard = 0; guard < 100000; ++guard) {
        if (wk.c[y - 1].is_zero()) break;
        if (wk.c[x - 1].is_zero()) {
            wk.emit(y, x, one);
            wk.emit(x, y, -one);
            break;
        }
        RingElem q = euclid_quo(wk.c[x - 1], wk.c[y - 1]);
        wk.emit(y, x, -q);
        if (wk.c[x - 1].is_zero()) {
            wk.emit(y, x, one);
            wk.emit(x, y, -one);
            break;
        }
        std::swap(x, y);
    }
    // ensure the gcd ended at position a
    if (wk.c[a - 1].is_zero() && !wk.c[b - 1].is_zero()) {
        wk.emit(b, a, one);
        wk.emit(a, b, -one);
    }
}

// turn (u, 0, ..., 0) with u a unit into e1 using the scratch position `s`
void unit_fix(Worker& wk, std::size_t s, const RingElem& inv) {
    RingElem u = wk.c[0];
    if (u.is_one()) return;
    RingElem one = RingElem::one(u.ring());
    wk.emit(1, s, inv * (one - u)); // scratch becomes 1-u
    wk.emit(s, 1, one);             // first coordinate becomes 1
    wk.emit(1, s, u - one);         // scratch back to 0
}

// --------------------------------------------------------- elementary engine

// clear every coordinate except the first, which must be 1
void clear_tail_elementary(Worker& wk) {
    for (std::size_t j = 2; j <= wk.c.size(); ++j) wk.emit(1, j, -wk.c[j - 1]);
}

// random polynomial of total degree <= d over the coefficient field
RingElem random_poly(const Ring& r, int d, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    RingElem acc = RingElem::zero(r);
    std::size_t nv = r->vars.size();
    std::vector<int> exps(nv, 0);
    // enumerate exponent tuples of total degree <= d
    while (true) {
        long total = 0;
        for (int e : exps) total += e;
        if (total <= d) {
            int cv = coeff(rng);
            if (cv != 0)
                acc = acc + term_mul(RingElem::one(r), RingElem::from_int(r->base, cv), exps);
        }
        std::size_t k = 0;
        while (k < nv) {
            if (++exps[k] <= d) break;
            exps[k] = 0;
            ++k;
        }
        if (k == nv) break;
    }
    return acc;
}

// multivariate strategy: make the tail unimodular with random multiples of
// the first coordinate, then lift 1 into the first coordinate via cofactors
bool stable_range_elementary(Worker& wk, const SearchParams& sp) {
    const Ring& r = wk.c[0].ring();
    std::mt19937_64 rng(sp.seed);
    std::size_t n = wk.c.size();
    unsigned long attempts = std::max<unsigned long>(20, sp.budget / 1000);
    for (unsigned long att = 0; att < attempts; ++att) {
        int d = static_cast<int>(att / 10);
        std::vector<RingElem> h;
        std::vector<RingElem> tail;
        for (std::size_t j = 2; j <= n; ++j) {
            RingElem hj = (att == 0) ? RingElem::zero(r) : random_poly(r, d, rng);
            h.push_back(hj);
            tail.push_back(wk.c[j - 1] + hj * wk.c[0]);
        }
        WitnessResult wit = unimodularity_witness(tail);
        if (wit.status != WitnessStatus::Found) continue;
        for (std::size_t j = 2; j <= n; ++j) wk.emit(1, j, h[j - 2]);
        RingElem target = RingElem::one(r) - wk.c[0];
        WitnessResult mem = ideal_membership(tail, target);
        if (mem.status != WitnessStatus::Found)
            throw Error("Internal", "cofactor lift failed after unimodular tail");
        for (std::size_t j = 2; j <= n; ++j) wk.emit(j, 1, mem.cofactors[j - 2]);
        if (!wk.c[0].is_one()) throw Error("Internal", "stable-range pivot not 1");
        clear_tail_elementary(wk);
        return true;
    }
    return false;
}

GroupWord modular_replay(const std::vector<RingElem>& row, Letter::Kind kind,
                         bool symplectic_schedule);

GroupWord elementary_reduce_impl(const std::vector<RingElem>& row, const SearchParams& sp) {
    const Ring& r = row.front().ring();
    Worker wk(row, Letter::Kind::E);
    if (row_is_e1(wk.c)) return wk.w;

    // unit-pivot strategy
    for (std::size_t k = 1; k <= wk.c.size(); ++k) {
        auto inv = try_unit(wk.c[k - 1]);
        if (!inv) continue;
        if (k == 1) {
            for (std::size_t j = 2; j <= wk.c.size(); ++j) wk.emit(1, j, -(*inv) * wk.c[j - 1]);
            unit_fix(wk, 2, *inv);
        } else {
            wk.emit(k, 1, (RingElem::one(r) - wk.c[0]) * *inv);
            clear_tail_elementary(wk);
        }
        if (!row_is_e1(wk.c)) throw Error("Internal", "unit pivot left a nonstandard row");
        return wk.w;
    }

    WitnessResult wit = unimodularity_witness(row);
    if (wit.status == WitnessStatus::NotUnimodular)
        throw NotUnimodular("row has no unimodularity witness");

    if (euclid_supported(r)) {
        for (std::size_t j = 2; j <= wk.c.size(); ++j) euclid_pair(wk, 1, j);
        auto inv = try_unit(wk.c[0]);
        if (!inv) throw NotUnimodular("gcd of the row entries is not a unit");
        unit_fix(wk, 2, *inv);
        if (!row_is_e1(wk.c)) throw Error("Internal", "euclid schedule left a nonstandard row");
        return wk.w;
    }
    if (r->kind == RingKind::Modular)
        return modular_replay(row, Letter::Kind::E, false);
    if (r->kind == RingKind::Polynomial && ring_is_field(r->base)) {
        if (stable_range_elementary(wk, sp)) {
            if (!row_is_e1(wk.c)) throw Error("Internal", "stable range left a nonstandard row");
            return wk.w;
        }
        throw ReductionUnavailable("randomized shortening exhausted its budget");
    }
    throw ReductionUnavailable("no reduction strategy for " + ring_to_string(r));
}

// --------------------------------------------------------- symplectic engine

// with the first coordinate equal to 1, clear positions 4, 3, 2 in that
// order: the mirror effect of SE(1,3) lands on position 2 scaled by the
// (already cleared) position 4, and SE(1,2) is mirror-free
void clear_tail_symplectic(Worker& wk) {
    wk.emit(1, 4, -wk.c[3]);
    wk.emit(1, 3, -wk.c[2]);
    wk.emit(1, 2, -wk.c[1]);
}

bool symplectic_unit_pivot(Worker& wk) {
    const Ring& r = wk.c[0].ring();
    for (std::size_t k = 1; k <= 4; ++k) {
        auto inv = try_unit(wk.c[k - 1]);
        if (!inv) continue;
        if (k == 1) {
            wk.emit(1, 4, -(*inv) * wk.c[3]);
            wk.emit(1, 3, -(*inv) * wk.c[2]);
            wk.emit(1, 2, -(*inv) * wk.c[1]);
            unit_fix(wk, 2, *inv);
        } else {
            wk.emit(k, 1, (RingElem::one(r) - wk.c[0]) * *inv);
            clear_tail_symplectic(wk);
        }
        if (!row_is_e1(wk.c)) throw Error("Internal", "symplectic unit pivot failed");
        return true;
    }
    return false;
}

bool stable_range_symplectic(Worker& wk, const SearchParams& sp) {
    const Ring& r = wk.c[0].ring();
    std::mt19937_64 rng(sp.seed);
    unsigned long attempts = std::max<unsigned long>(20, sp.budget / 1000);
    for (unsigned long att = 0; att < attempts; ++att) {
        int d = static_cast<int>(att / 10);
        // propose SE(1,j) multipliers, apply on a scratch copy, test the tail
        std::vector<RingElem> h;
        for (int j = 0; j < 3; ++j)
            h.push_back(att == 0 ? RingElem::zero(r) : random_poly(r, d, rng));
        Worker trial(wk.c, Letter::Kind::SE);
        trial.emit(1, 2, h[0]);
        trial.emit(1, 3, h[1]);
        trial.emit(1, 4, h[2]);
        std::vector<RingElem> tail{trial.c[1], trial.c[2], trial.c[3]};
        WitnessResult wit = unimodularity_witness(tail);
        if (wit.status != WitnessStatus::Found) continue;
        wk.emit(1, 2, h[0]);
        wk.emit(1, 3, h[1]);
        wk.emit(1, 4, h[2]);
        RingElem target = RingElem::one(r) - wk.c[0];
        WitnessResult mem = ideal_membership(tail, target);
        if (mem.status != WitnessStatus::Found)
            throw Error("Internal", "cofactor lift failed after unimodular tail");
        const RingElem& z2 = mem.cofactors[0];
        const RingElem& z3 = mem.cofactors[1];
        const RingElem& z4 = mem.cofactors[2];
        // the mirror of SE(3,1) perturbs position 4 by -z3*c2 before SE(4,1)
        // reads it; a final SE(2,1, z3*z4) cancels the perturbation exactly
        wk.emit(2, 1, z2);
        wk.emit(3, 1, z3);
        wk.emit(4, 1, z4);
        wk.emit(2, 1, z3 * z4);
        if (!wk.c[0].is_one()) throw Error("Internal", "symplectic stable-range pivot not 1");
        clear_tail_symplectic(wk);
        return true;
    }
    return false;
}

GroupWord symplectic_reduce_impl(const std::vector<RingElem>& row, const SearchParams& sp) {
    const Ring& r = row.front().ring();
    Worker wk(row, Letter::Kind::SE);
    if (row_is_e1(wk.c)) return wk.w;

    if (symplectic_unit_pivot(wk)) return wk.w;

    WitnessResult wit = unimodularity_witness(row);
    if (wit.status == WitnessStatus::NotUnimodular)
        throw NotUnimodular("row has no unimodularity witness");

    if (euclid_supported(r)) {
        euclid_pair(wk, 1, 2); // pure pair
        euclid_pair(wk, 3, 4); // pure pair
        // positions 2 and 4 are now zero, so the mirrors of SE(1,3)/SE(3,1)
        // vanish and the cross pair behaves like a plain pair
        euclid_pair(wk, 1, 3);
        auto inv = try_unit(wk.c[0]);
        if (!inv) throw NotUnimodular("gcd of the row entries is not a unit");
        unit_fix(wk, 2, *inv);
        if (!row_is_e1(wk.c)) throw Error("Internal", "symplectic euclid failed");
        return wk.w;
    }
    if (r->kind == RingKind::Modular)
        return modular_replay(row, Letter::Kind::SE, true);
    if (r->kind == RingKind::Polynomial && ring_is_field(r->base)) {
        if (stable_range_symplectic(wk, sp)) {
            if (!row_is_e1(wk.c)) throw Error("Internal", "symplectic stable range failed");
            return wk.w;
        }
        throw ReductionUnavailable("randomized shortening exhausted its budget");
    }
    throw ReductionUnavailable("no symplectic reduction strategy for " + ring_to_string(r));
}

// Z/n strategy: run the integer schedule on canonical lifts (their gcd is a
// unit mod n because the row is unimodular), then replay the letters mod n
GroupWord modular_replay(const std::vector<RingElem>& row, Letter::Kind kind,
                         bool symplectic_schedule) {
    const Ring& rmod = row.front().ring();
    Ring z = ring_ZZ();
    std::vector<RingElem> lifted;
    for (const auto& e : row) lifted.push_back(canonical_lift(e));
    Worker lw(lifted, kind);
    if (symplectic_schedule) {
        euclid_pair(lw, 1, 2);
        euclid_pair(lw, 3, 4);
        euclid_pair(lw, 1, 3);
    } else {
        for (std::size_t j = 2; j <= lw.c.size(); ++j) euclid_pair(lw, 1, j);
    }
    Worker wk(row, kind);
    for (const auto& l : lw.w.letters) wk.emit(l.i, l.j, reduce_into(rmod, l.z));
    auto inv = try_unit(wk.c[0]);
    if (!inv) throw NotUnimodular("entry gcd is not invertible modulo n");
    unit_fix(wk, 2, *inv);
    if (!row_is_e1(wk.c)) throw Error("Internal", "modular replay failed");
    (void)z;
    return wk.w;
}

void validate_row(const std::vector<RingElem>& row, std::size_t need) {
    if (row.size() < 2 || (need && row.size() != need))
        throw BadIndices("row length unsupported by this engine");
    for (const auto& e : row) require_same_ring(e, row.front());
}

} // namespace

GroupWord elementary_reduce_row(const std::vector<RingElem>& row, const SearchParams& sp) {
    validate_row(row, 0);
    GroupWord w = elementary_reduce_impl(row, sp);
    if (!row_is_e1(apply_word(row, w)))
        throw Error("Internal", "reduction postcondition failed");
    return w;
}

GroupWord symplectic_reduce_row(const std::vector<RingElem>& row, const SearchParams& sp) {
    validate_row(row, 4);
    GroupWord w = symplectic_reduce_impl(row, sp);
    if (!w.symplectic_only() || !row_is_e1(apply_word(row, w)))
        throw Error("Internal", "symplectic reduction postcondition failed");
    return w;
}

// ------------------------------------------------------------ SL2 block word

namespace {

// 2x2 state reduced by left transvections; the emitted word letters are the
// inverses in application order, so eval(word) reproduces the input block
struct Sl2State {
    RingElem a, b, c, d;
    std::vector<Letter> word; // SE letters on positions {3,4}

    // left-multiply by e12(z): row1 += z*row2; word letter is the inverse
    void l12(const RingElem& z) {
        if (z.is_zero()) return;
        a = a + z * c;
        b = b + z * d;
        word.push_back({Letter::Kind::SE, 3, 4, -z});
    }
    void l21(const RingElem& z) {
        if (z.is_zero()) return;
        c = c + z * a;
        d = d + z * b;
        word.push_back({Letter::Kind::SE, 4, 3, -z});
    }
};

void sl2_reduce_unit_column(Sl2State& s) {
    // entry c is a unit (or will be made one by callers); drive to identity
    RingElem one = RingElem::one(s.a.ring());
    auto cinv = s.c.inverse();
    if (!cinv) throw DecompositionFailed("SL2 pivot is not a unit");
    s.l12((one - s.a) * *cinv); // a = 1
    s.l21(-s.c);                // c = 0, d = det = 1
    if (!s.d.is_one()) throw DecompositionFailed("SL2 block has determinant != 1");
    s.l12(-s.b);
}

void sl2_reduce(Sl2State& s) {
    const Ring& r = s.a.ring();
    RingElem one = RingElem::one(r);
    if (s.a.is_one() && s.b.is_zero() && s.c.is_zero() && s.d.is_one()) return;
    if (try_unit(s.c)) {
        sl2_reduce_unit_column(s);
        return;
    }
    if (euclid_supported(r) || r->kind == RingKind::Modular) {
        // gcd of the first column is a unit (determinant 1); run the integer
        // or polynomial euclid on the column, lifting mod-n scalars
        bool modular = r->kind == RingKind::Modular;
        RingElem la = modular ? canonical_lift(s.a) : s.a;
        RingElem lc = modular ? canonical_lift(s.c) : s.c;
        for (int guard = 0; guard < 100000 && !lc.is_zero(); ++guard) {
            if (la.is_zero()) {
                s.l12(one);
                la = la + lc;
                continue;
            }
            RingElem q = euclid_quo(la, lc);
            RingElem step = -q;
            s.l12(modular ? reduce_into(r, step) : step);
            la = la - q * lc;
            std::swap(la, lc);
            // mirror the swap on the live state by swapping roles next round;
            // simplest is to swap rows explicitly with three transvections
            s.l21(one);
            s.l12(-one);
            s.l21(one);
            // rows are now exchanged with a sign: (row1,row2) -> (-row2,row1)
            la = -la;
        }
        if (!lc.is_zero()) throw DecompositionFailed("SL2 euclid did not terminate");
        // state now has c divisible by the modulus (or zero); a is a unit
        if (!try_unit(s.a)) throw DecompositionFailed("SL2 gcd is not a unit");
        if (!s.c.is_zero()) {
            auto ainv = s.a.inverse();
            s.l21(-(s.c * *ainv));
        }
        // a unit, c = 0: make c a unit and finish with the generic path
        s.l21(one);
        sl2_reduce_unit_column(s);
        return;
    }
    if (try_unit(s.a)) {
        s.l21(one); // c + a: unit in a local ring, nonzero in a field
        if (!try_unit(s.c)) throw DecompositionFailed("SL2 column has no unit pivot");
        sl2_reduce_unit_column(s);
        return;
    }
    throw DecompositionFailed("no SL2 factorization strategy for " + ring_to_string(r));
}

} // namespace

GroupWord sl2_block_word(const Ring& r, const RingElem& n11, const RingElem& n12,
                         const RingElem& n21, const RingElem& n22) {
    Sl2State s{n11, n12, n21, n22, {}};
    sl2_reduce(s);
    GroupWord w;
    w.size = 4;
    w.letters = std::move(s.word);
    // the collected letters reduce N to I from the left; the word read in
    // order therefore multiplies back to N
    RingMatrix m = eval_word(w, r);
    if (!(m.at(2, 2) == n11 && m.at(2, 3) == n12 && m.at(3, 2) == n21 && m.at(3, 3) == n22) ||
        !m.at(0, 0).is_one() || !m.at(1, 1).is_one())
        throw DecompositionFailed("SL2 word replay mismatch");
    return w;
}

// -------------------------------------------------------------- esp_factor

GroupWord esp_factor(const RingMatrix& s, const SearchParams& sp) {
    const Ring& r = s.ring();
    if (s.rows() != 4 || s.cols() != 4) throw BadIndices("only 4x4 symplectic factoring");
    if (!is_symplectic(s)) throw DecompositionFailed("input is not symplectic");

    GroupWord mu = symplectic_reduce_row(s.row(0), sp);
    RingMatrix sp1 = s * eval_word(mu, r); // first row e1

    // left-clear the first column with row-e1 stabilizer letters; mirrors of
    // SE(3,1) and SE(4,1) only touch rows 2..4
    std::vector<Letter> stab; // inverses, in application order
    RingMatrix m = sp1;
    auto lmul = [&](std::size_t i, std::size_t j, const RingElem& z) {
        if (z.is_zero()) return;
        m = se_generator(r, 4, i, j, z) * m;
        stab.push_back({Letter::Kind::SE, i, j, -z});
    };
    lmul(3, 1, -m.at(2, 0));
    lmul(4, 1, -m.at(3, 0));
    lmul(2, 1, -m.at(1, 0));
    // the symplectic relations now force the identity on rows/cols 1 and 2
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 2; ++l)
            if ((k == l ? !m.at(k, l).is_one() : !m.at(k, l).is_zero()) ||
                (k == l ? !m.at(l, k).is_one() : !m.at(l, k).is_zero()))
                throw DecompositionFailed("stabilizer clearing left a nonstandard block");

    GroupWord block = sl2_block_word(r, m.at(2, 2), m.at(2, 3), m.at(3, 2), m.at(3, 3));

    GroupWord out;
    out.size = 4;
    out.letters = std::move(stab);
    out = concat(out, block);
    out = concat(out, inverse_word(mu));
    if (eval_word(out, r) != s) throw DecompositionFailed("factor replay mismatch");
    return out;
}

// --------------------------------------------------------- symplectic_patch

SymplecticPatch symplectic_patch(const GroupWord& eps, const Ring& r, const SearchParams& sp) {
    if (eps.size != 4)
        throw DecompositionFailed("only size-4 elementary words are supported");
    for (const auto& l : eps.letters)
        if (l.kind != Letter::Kind::E)
            throw BadIndices("patch input must be elementary-only");

    RingMatrix m = eval_word(eps, r);
    RingMatrix psi = psi_form(r, 2);
    RingMatrix a = congruence(psi, m); // alternating with pfaffian det(m) = 1

    // first row of the form, dropping the leading zero
    std::vector<RingElem> vprime{a.at(0, 1), a.at(0, 2), a.at(0, 3)};
    GroupWord red3 = elementary_reduce_row(vprime, sp);
    RingMatrix r3 = eval_word(red3, r);
    RingMatrix t = perp(RingMatrix::identity(r, 1), r3);
    RingMatrix a2 = congruence(a, t);
    if (!a2.at(0, 1).is_one())
        throw DecompositionFailed("row reduction did not normalize the form");
    // read off the secondary row; its first entry equals the pfaffian, 1
    RingElem w1 = -a2.at(1, 3);
    RingElem w2 = a2.at(1, 2);

    GroupWord rho = red3;
    GroupWord clearing;
    clearing.size = 3;
    if (!w1.is_zero()) clearing.letters.push_back({Letter::Kind::E, 2, 1, w1});
    if (!w2.is_zero()) clearing.letters.push_back({Letter::Kind::E, 3, 1, w2});
    rho = concat(rho, clearing);

    RingMatrix prod = m * perp(RingMatrix::identity(r, 1), eval_word(rho, r));
    if (!is_symplectic(prod))
        throw DecompositionFailed("patched product is not symplectic");

    SymplecticPatch out;
    out.rho = rho;
    try {
        out.esp_word = esp_factor(prod, sp);
    } catch (const Error&) {
        out.esp_word = std::nullopt;
    }
    return out;
}

// ------------------------------------------------------------- sp_transfer

SpTransfer sp_transfer(const GroupWord& eps, const RingMatrix& psi, const Ring& r,
                       const SearchParams& sp) {
    std::size_t n = eps.size;
    if (psi.rows() != n) throw TransferFailed("form size does not match the word size");
    std::vector<RingElem> e1(n, RingElem::zero(r));
    e1[0] = RingElem::one(r);
    std::vector<RingElem> v = apply_word(e1, eps);

    SpTransfer out;
    if (v == e1) {
        out.eta = RingMatrix::identity(r, n);
        out.word.size = n;
        return out;
    }
    if (n != 4 || psi != psi_form(r, 2))
        throw TransferFailed("only the standard 4x4 form is supported");

    GroupWord mu = inverse_word(symplectic_reduce_row(v, sp));
    out.eta = eval_word(mu, r);
    // expand each SE letter into its one or two commuting elementary factors
    out.word.size = 4;
    for (const auto& l : mu.letters) {
        out.word.letters.push_back({Letter::Kind::E, l.i, l.j, l.z});
        if (l.i != sigma_index(l.j)) {
            RingElem mz = ((l.i + l.j) % 2 == 0) ? -l.z : l.z;
            out.word.letters.push_back(
                {Letter::Kind::E, sigma_index(l.j), sigma_index(l.i), mz});
        }
    }
    if (eval_word(out.word, r) != out.eta)
        throw TransferFailed("elementary expansion mismatch");
    std::vector<RingElem> via = apply_word(e1, out.word);
    if (via != v || !sp_psi_member(out.eta, psi))
        throw TransferFailed("transfer postcondition failed");
    return out;
}

// ---------------------------------------------------------- esp_orbit_word

GroupWord esp_orbit_word(const std::vector<RingElem>& v, const GroupWord& eps,
                         const SearchParams& sp) {
    if (v.size() != 4) throw BadIndices("orbit rewriting needs rows of length 4");
    std::vector<RingElem> t = apply_word(v, eps);
    GroupWord mu;
    try {
        mu = concat(symplectic_reduce_row(v, sp), inverse_word(symplectic_reduce_row(t, sp)));
    } catch (const ReductionUnavailable& e) {
        throw RewriteFailed(e.what());
    }
    if (apply_word(v, mu) != t) throw RewriteFailed("orbit rewriting postcondition failed");
    return mu;
}

} // namespace sympcomp
