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

#ifndef SYMPCOMP_RING_HPP
#define SYMPCOMP_RING_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sympcomp/errors.hpp"

namespace sympcomp {

class RingDesc;
using Ring = std::shared_ptr<const RingDesc>;

enum class RingKind {
    Integers,   // ZZ
    Rationals,  // QQ
    Modular,    // ZZ/n, n >= 2
    Polynomial, // base[x1,...,xk], optional positive weights per variable
    Quotient,   // poly-ring / (relations), relations stored as a reduced Groebner basis
    Excision,   // base (+) I, pairs (a,i) with (a,i)(b,j) = (ab, aj+ib+ij)
};

enum class MonomialOrder { Grevlex, Lex };

class RingElem;
struct PolyPayload;
struct ExcisionPayload;

/// Immutable description of one of the supported commutative rings.
/// Construct only through the factory functions below; they enforce the
/// descriptor invariants (modulus >= 2, unique variable names, reduced
/// Groebner relations, field coefficients for quotients).
class RingDesc {
public:
    RingKind kind;
    mpz_class modulus;              // Modular
    Ring base;                      // Polynomial / Quotient (the poly ring) / Excision
    std::vector<std::string> vars;  // Polynomial
    std::vector<int> weights;       // Polynomial, one positive weight per variable
    std::vector<RingElem> relations; // Quotient: reduced GB over `base`
    MonomialOrder order = MonomialOrder::Grevlex; // Quotient reduction order
    std::vector<RingElem> ideal_gens; // Excision: generators of I inside `base`

    RingDesc() = default;
    ~RingDesc();
};

Ring ring_ZZ();
Ring ring_QQ();
Ring ring_mod(const mpz_class& n);
/// base[vars] with weights (empty weights = all 1).
Ring ring_poly(const Ring& base, std::vector<std::string> vars, std::vector<int> weights = {});
/// poly_ring / (relations); computes the reduced Groebner basis of the
/// relations in the given order. Coefficients must form a field (QQ or ZZ/p).
Ring ring_quotient(const Ring& poly_ring, const std::vector<RingElem>& relations,
                   MonomialOrder order = MonomialOrder::Grevlex);
/// base (+) I for I = (ideal_gens) in base.
Ring ring_excision(const Ring& base, const std::vector<RingElem>& ideal_gens);

bool ring_equal(const Ring& a, const Ring& b);
bool ring_is_field(const Ring& r);
/// Integral domain with computable exact division (Bareiss-eligible).
bool ring_is_domain(const Ring& r);
std::string ring_to_string(const Ring& r);

/// An exact ring element in canonical form. Equal elements always have
/// identical payloads, so operator== is structural.
class RingElem {
public:
    RingElem() = default;

    static RingElem zero(const Ring& r);
    static RingElem one(const Ring& r);
    static RingElem from_int(const Ring& r, const mpz_class& n);
    static RingElem from_int(const Ring& r, long n) { return from_int(r, mpz_class(n)); }
    static RingElem rational(const Ring& r, const mpz_class& num, const mpz_class& den);
    /// The named variable, looked up through nested polynomial rings.
    static RingElem variable(const Ring& r, const std::string& name);
    /// Raw polynomial payload (terms already canonical); internal use.
    static RingElem make_poly(const Ring& r, std::shared_ptr<const PolyPayload> p);
    static RingElem make_excision(const Ring& r, const RingElem& base_part,
                                  const RingElem& ideal_part);

    const Ring& ring() const { return ring_; }
    bool valid() const { return ring_ != nullptr; }
    bool is_zero() const;
    bool is_one() const;

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    RingElem operator-() const;
    bool operator==(const RingElem& o) const;
    bool operator!=(const RingElem& o) const { return !(*this == o); }

    RingElem pow(unsigned long e) const;

    /// Re-canonicalizes the payload from scratch; idempotent by construction.
    RingElem normalize() const;

    /// Multiplicative inverse, when this element is a unit and the ring can decide.
    std::optional<RingElem> inverse() const;
    /// Exact quotient this / d when it exists and is computable.
    std::optional<RingElem> divexact(const RingElem& d) const;

    std::string to_string() const;

    // Payload accessors (throw on kind mismatch).
    const mpz_class& int_value() const;       // Integers / Modular residue
    const mpq_class& rat_value() const;       // Rationals
    const PolyPayload& poly() const;          // Polynomial / Quotient representative
    const ExcisionPayload& excision() const;  // Excision

private:
    Ring ring_;
    std::variant<std::monostate, mpz_class, mpq_class,
                 std::shared_ptr<const PolyPayload>,
                 std::shared_ptr<const ExcisionPayload>>
        v_;

    friend struct ElemOps;
};

/// One multivariate term: exponents per ring variable, coefficient in the base ring.
struct PolyTerm {
    std::vector<int> exps;
    RingElem coeff;
};

/// Terms sorted grevlex-descending, no zero coefficients. Empty = 0.
struct PolyPayload {
    std::vector<PolyTerm> terms;
};

/// (base, ideal) pair; membership of `ideal` in I is witnessed by `cof`
/// when available: ideal = sum cof[k] * gens[k].
struct ExcisionPayload {
    RingElem base;
    RingElem ideal;
    std::vector<RingElem> cof;
};

// --- Euclidean / witness machinery -------------------------------------

/// g = gcd(a,b) (canonical associate), s*a + t*b = g.
/// Supported: Integers; univariate polynomials over a field.
void extended_gcd(const RingElem& a, const RingElem& b, RingElem& g, RingElem& s, RingElem& t);

enum class WitnessStatus { Found, NotUnimodular, Undecidable };

struct WitnessResult {
    WitnessStatus status = WitnessStatus::Undecidable;
    std::vector<RingElem> cofactors; // valid when status == Found
};

/// Looks for u with row . u^T = 1. NotUnimodular is a proof-backed verdict
/// on rings with a decision procedure; Undecidable otherwise.
WitnessResult unimodularity_witness(const std::vector<RingElem>& row);

/// Cofactors c with target = sum c[k]*gens[k], when membership is decidable.
WitnessResult ideal_membership(const std::vector<RingElem>& gens, const RingElem& target);

// --- small helpers ------------------------------------------------------

inline void require_same_ring(const RingElem& a, const RingElem& b) {
    if (!ring_equal(a.ring(), b.ring()))
        throw RingMismatch("elements of " + ring_to_string(a.ring()) + " and " +
                           ring_to_string(b.ring()));
}

/// Dot product of two equal-length rows.
RingElem dot(const std::vector<RingElem>& a, const std::vector<RingElem>& b);

/// Canonical lift of an element of ZZ/n or of a quotient ring back to the
/// covering ring (ZZ, or the polynomial ring). Identity elsewhere.
RingElem canonical_lift(const RingElem& e);

/// Image of e under the covering map ZZ -> ZZ/n or poly -> quotient.
RingElem reduce_into(const Ring& target, const RingElem& e);

} // namespace sympcomp

#endif
