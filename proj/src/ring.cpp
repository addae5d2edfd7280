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

#include "sympcomp/ring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "sympcomp/groebner.hpp"
#include "sympcomp/polyops.hpp"

namespace sympcomp {

RingDesc::~RingDesc() = default;

// ---------------------------------------------------------------- factories

Ring ring_ZZ() {
    static Ring r = [] {
        auto d = std::make_shared<RingDesc>();
        d->kind = RingKind::Integers;
        return d;
    }();
    return r;
}

Ring ring_QQ() {
    static Ring r = [] {
        auto d = std::make_shared<RingDesc>();
        d->kind = RingKind::Rationals;
        return d;
    }();
    return r;
}

Ring ring_mod(const mpz_class& n) {
    if (n < 2)
        throw InvalidDescriptor("modulus must be >= 2, got " + n.get_str());
    auto d = std::make_shared<RingDesc>();
    d->kind = RingKind::Modular;
    d->modulus = n;
    return d;
}

Ring ring_poly(const Ring& base, std::vector<std::string> vars, std::vector<int> weights) {
    if (vars.empty())
        throw InvalidDescriptor("polynomial ring needs at least one variable");
    std::set<std::string> names;
    for (const auto& v : vars) {
        if (!names.insert(v).second)
            throw InvalidDescriptor("duplicate variable name " + v);
        // variable names must also be fresh w.r.t. nested base rings
        const RingDesc* b = base.get();
        while (b) {
            if (b->kind == RingKind::Polynomial &&
                std::find(b->vars.begin(), b->vars.end(), v) != b->vars.end())
                throw InvalidDescriptor("variable " + v + " shadows a base-ring variable");
            b = b->base ? b->base.get() : nullptr;
        }
    }
    if (weights.empty())
        weights.assign(vars.size(), 1);
    if (weights.size() != vars.size())
        throw InvalidDescriptor("one weight per variable required");
    for (int w : weights)
        if (w < 0) throw InvalidDescriptor("negative variable weight");
    auto d = std::make_shared<RingDesc>();
    d->kind = RingKind::Polynomial;
    d->base = base;
    d->vars = std::move(vars);
    d->weights = std::move(weights);
    return d;
}

static bool modulus_is_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool ring_is_field(const Ring& r) {
    switch (r->kind) {
    case RingKind::Rationals: return true;
    case RingKind::Modular: return modulus_is_prime(r->modulus);
    default: return false;
    }
}

Ring ring_quotient(const Ring& poly_ring, const std::vector<RingElem>& relations,
                   MonomialOrder order) {
    if (poly_ring->kind != RingKind::Polynomial)
        throw InvalidDescriptor("quotient base must be a polynomial ring");
    if (!ring_is_field(poly_ring->base))
        throw UnsupportedCoefficients(
            "quotient relations need field coefficients (QQ or ZZ/p, p prime)");
    if (relations.empty())
        throw InvalidDescriptor("quotient needs at least one relation");
    for (const auto& f : relations) {
        if (!ring_equal(f.ring(), poly_ring))
            throw RingMismatch("relation not in the quotient's polynomial ring");
        if (f.is_zero())
            throw InvalidDescriptor("zero relation");
    }
    GroebnerResult gb = groebner_with_cofactors(relations, order);
    // A unit in the ideal would make the quotient the zero ring.
    for (const auto& g : gb.basis)
        if (!g.is_zero() && g.poly().terms.size() == 1 &&
            std::all_of(g.poly().terms[0].exps.begin(), g.poly().terms[0].exps.end(),
                        [](int e) { return e == 0; }))
            throw InvalidDescriptor("relations generate the unit ideal (zero ring)");
    auto d = std::make_shared<RingDesc>();
    d->kind = RingKind::Quotient;
    d->base = poly_ring;
    d->relations = gb.basis;
    d->order = order;
    return d;
}

Ring ring_excision(const Ring& base, const std::vector<RingElem>& ideal_gens) {
    if (ideal_gens.empty())
        throw InvalidDescriptor("excision ring needs ideal generators");
    for (const auto& g : ideal_gens)
        if (!ring_equal(g.ring(), base))
            throw RingMismatch("ideal generator not in the base ring");
    auto d = std::make_shared<RingDesc>();
    d->kind = RingKind::Excision;
    d->base = base;
    d->ideal_gens = ideal_gens;
    return d;
}

bool ring_equal(const Ring& a, const Ring& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case RingKind::Integers:
    case RingKind::Rationals:
        return true;
    case RingKind::Modular:
        return a->modulus == b->modulus;
    case RingKind::Polynomial:
        return a->vars == b->vars && a->weights == b->weights && ring_equal(a->base, b->base);
    case RingKind::Quotient: {
        if (!ring_equal(a->base, b->base) || a->order != b->order) return false;
        if (a->relations.size() != b->relations.size()) return false;
        for (std::size_t i = 0; i < a->relations.size(); ++i)
            if (a->relations[i] != b->relations[i]) return false;
        return true;
    }
    case RingKind::Excision: {
        if (!ring_equal(a->base, b->base)) return false;
        if (a->ideal_gens.size() != b->ideal_gens.size()) return false;
        for (std::size_t i = 0; i < a->ideal_gens.size(); ++i)
            if (a->ideal_gens[i] != b->ideal_gens[i]) return false;
        return true;
    }
    }
    return false;
}

bool ring_is_domain(const Ring& r) {
    switch (r->kind) {
    case RingKind::Integers:
    case RingKind::Rationals:
        return true;
    case RingKind::Modular:
        return modulus_is_prime(r->modulus);
    case RingKind::Polynomial:
        return ring_is_domain(r->base);
    default:
        return false;
    }
}

std::string ring_to_string(const Ring& r) {
    if (!r) return "<null>";
    switch (r->kind) {
    case RingKind::Integers: return "ZZ";
    case RingKind::Rationals: return "QQ";
    case RingKind::Modular: return "ZZ/" + r->modulus.get_str();
    case RingKind::Polynomial: {
        std::string s = ring_to_string(r->base) + "[";
        bool weighted = false;
        for (int w : r->weights)
            if (w != 1) weighted = true;
        for (std::size_t i = 0; i < r->vars.size(); ++i) {
            if (i) s += ",";
            s += r->vars[i];
            if (weighted) s += ":" + std::to_string(r->weights[i]);
        }
        return s + "]";
    }
    case RingKind::Quotient: {
        std::string s = ring_to_string(r->base) + "/(";
        for (std::size_t i = 0; i < r->relations.size(); ++i) {
            if (i) s += ",";
            s += r->relations[i].to_string();
        }
        return s + ")";
    }
    case RingKind::Excision: {
        std::string s = "excision(" + ring_to_string(r->base) + ",(";
        for (std::size_t i = 0; i < r->ideal_gens.size(); ++i) {
            if (i) s += ",";
            s += r->ideal_gens[i].to_string();
        }
        return s + "))";
    }
    }
    return "<?>";
}

// --------------------------------------------------------------- elem: core

struct ElemOps {
    static RingElem raw_int(const Ring& r, mpz_class v) {
        RingElem e;
        e.ring_ = r;
        e.v_ = std::move(v);
        return e;
    }
    static RingElem raw_rat(const Ring& r, mpq_class v) {
        RingElem e;
        e.ring_ = r;
        e.v_ = std::move(v);
        return e;
    }
    static RingElem raw_poly(const Ring& r, std::shared_ptr<const PolyPayload> p) {
        RingElem e;
        e.ring_ = r;
        e.v_ = std::move(p);
        return e;
    }
    static RingElem raw_exc(const Ring& r, std::shared_ptr<const ExcisionPayload> p) {
        RingElem e;
        e.ring_ = r;
        e.v_ = std::move(p);
        return e;
    }
};

namespace {

// The polynomial ring whose payload conventions an element of `r` follows
// (for Quotient, the covering polynomial ring).
const Ring& payload_poly_ring(const Ring& r) {
    return r->kind == RingKind::Quotient ? r->base : r;
}

// grevlex-descending comparator used for canonical term storage
struct StoreCmp {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        return monomial_cmp(a, b, MonomialOrder::Grevlex) > 0;
    }
};

using TermMap = std::map<std::vector<int>, RingElem, StoreCmp>;

std::shared_ptr<const PolyPayload> payload_from_map(TermMap&& m) {
    auto p = std::make_shared<PolyPayload>();
    for (auto& [exps, c] : m)
        if (!c.is_zero()) p->terms.push_back({exps, c});
    return p;
}

TermMap map_from_payload(const PolyPayload& p) {
    TermMap m;
    for (const auto& t : p.terms) m.emplace(t.exps, t.coeff);
    return m;
}

RingElem reduce_quotient_payload(const Ring& q, std::shared_ptr<const PolyPayload> p) {
    RingElem rep = ElemOps::raw_poly(q->base, std::move(p));
    RingElem nf = poly_reduce(rep, q->relations, q->order);
    return RingElem::make_poly(q, std::make_shared<PolyPayload>(nf.poly()));
}

} // namespace

RingElem RingElem::make_poly(const Ring& r, std::shared_ptr<const PolyPayload> p) {
    return ElemOps::raw_poly(r, std::move(p));
}

RingElem RingElem::zero(const Ring& r) {
    switch (r->kind) {
    case RingKind::Integers:
    case RingKind::Modular:
        return ElemOps::raw_int(r, 0);
    case RingKind::Rationals:
        return ElemOps::raw_rat(r, 0);
    case RingKind::Polynomial:
    case RingKind::Quotient:
        return ElemOps::raw_poly(r, std::make_shared<PolyPayload>());
    case RingKind::Excision: {
        auto p = std::make_shared<ExcisionPayload>();
        p->base = RingElem::zero(r->base);
        p->ideal = RingElem::zero(r->base);
        p->cof.assign(r->ideal_gens.size(), RingElem::zero(r->base));
        return ElemOps::raw_exc(r, p);
    }
    }
    throw UnsupportedRing("zero");
}

RingElem RingElem::one(const Ring& r) { return from_int(r, 1); }

RingElem RingElem::from_int(const Ring& r, const mpz_class& n) {
    switch (r->kind) {
    case RingKind::Integers:
        return ElemOps::raw_int(r, n);
    case RingKind::Modular: {
        mpz_class v;
        mpz_mod(v.get_mpz_t(), n.get_mpz_t(), r->modulus.get_mpz_t());
        return ElemOps::raw_int(r, v);
    }
    case RingKind::Rationals:
        return ElemOps::raw_rat(r, mpq_class(n));
    case RingKind::Polynomial: {
        if (n == 0) return zero(r);
        auto p = std::make_shared<PolyPayload>();
        RingElem c = from_int(r->base, n);
        if (c.is_zero()) return zero(r);
        p->terms.push_back({std::vector<int>(r->vars.size(), 0), c});
        return ElemOps::raw_poly(r, p);
    }
    case RingKind::Quotient: {
        RingElem rep = from_int(r->base, n);
        return reduce_quotient_payload(r, std::make_shared<PolyPayload>(rep.poly()));
    }
    case RingKind::Excision: {
        auto p = std::make_shared<ExcisionPayload>();
        p->base = from_int(r->base, n);
        p->ideal = RingElem::zero(r->base);
        p->cof.assign(r->ideal_gens.size(), RingElem::zero(r->base));
        return ElemOps::raw_exc(r, p);
    }
    }
    throw UnsupportedRing("from_int");
}

RingElem RingElem::rational(const Ring& r, const mpz_class& num, const mpz_class& den) {
    if (r->kind != RingKind::Rationals) {
        if (den == 0) throw Error("DivisionByZero", "zero denominator");
        RingElem d = from_int(r, den);
        auto inv = d.inverse();
        if (!inv) throw UnsupportedRing("fraction in " + ring_to_string(r));
        return from_int(r, num) * *inv;
    }
    if (den == 0) throw Error("DivisionByZero", "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return ElemOps::raw_rat(r, q);
}

RingElem RingElem::variable(const Ring& r, const std::string& name) {
    switch (r->kind) {
    case RingKind::Polynomial: {
        auto it = std::find(r->vars.begin(), r->vars.end(), name);
        if (it != r->vars.end()) {
            auto p = std::make_shared<PolyPayload>();
            std::vector<int> exps(r->vars.size(), 0);
            exps[it - r->vars.begin()] = 1;
            p->terms.push_back({exps, RingElem::one(r->base)});
            return ElemOps::raw_poly(r, p);
        }
        // A variable of a nested base ring appears as a constant coefficient.
        RingElem c = variable(r->base, name);
        auto p = std::make_shared<PolyPayload>();
        p->terms.push_back({std::vector<int>(r->vars.size(), 0), c});
        return ElemOps::raw_poly(r, p);
    }
    case RingKind::Quotient: {
        RingElem v = variable(r->base, name);
        return reduce_quotient_payload(r, std::make_shared<PolyPayload>(v.poly()));
    }
    default:
        throw InvalidDescriptor("no variable " + name + " in " + ring_to_string(r));
    }
}

RingElem RingElem::make_excision(const Ring& r, const RingElem& base_part,
                                 const RingElem& ideal_part) {
    if (r->kind != RingKind::Excision) throw UnsupportedRing("make_excision");
    if (!ring_equal(base_part.ring(), r->base) || !ring_equal(ideal_part.ring(), r->base))
        throw RingMismatch("excision components must lie in the base ring");
    auto p = std::make_shared<ExcisionPayload>();
    p->base = base_part;
    p->ideal = ideal_part;
    WitnessResult w = ideal_membership(r->ideal_gens, ideal_part);
    if (w.status == WitnessStatus::Found)
        p->cof = w.cofactors;
    else if (w.status == WitnessStatus::NotUnimodular)
        throw LiftUnsupported("ideal part is provably outside the ideal");
    else
        throw UndecidableHere("cannot witness ideal membership of " + ideal_part.to_string());
    return ElemOps::raw_exc(r, p);
}

const mpz_class& RingElem::int_value() const {
    if (auto* p = std::get_if<mpz_class>(&v_)) return *p;
    throw UnsupportedRing("int_value on " + ring_to_string(ring_));
}
const mpq_class& RingElem::rat_value() const {
    if (auto* p = std::get_if<mpq_class>(&v_)) return *p;
    throw UnsupportedRing("rat_value on " + ring_to_string(ring_));
}
const PolyPayload& RingElem::poly() const {
    if (auto* p = std::get_if<std::shared_ptr<const PolyPayload>>(&v_)) return **p;
    throw UnsupportedRing("poly payload on " + ring_to_string(ring_));
}
const ExcisionPayload& RingElem::excision() const {
    if (auto* p = std::get_if<std::shared_ptr<const ExcisionPayload>>(&v_)) return **p;
    throw UnsupportedRing("excision payload on " + ring_to_string(ring_));
}

bool RingElem::is_zero() const {
    switch (ring_->kind) {
    case RingKind::Integers:
    case RingKind::Modular:
        return int_value() == 0;
    case RingKind::Rationals:
        return rat_value() == 0;
    case RingKind::Polynomial:
    case RingKind::Quotient:
        return poly().terms.empty();
    case RingKind::Excision:
        return excision().base.is_zero() && excision().ideal.is_zero();
    }
    return false;
}

bool RingElem::is_one() const {
    switch (ring_->kind) {
    case RingKind::Integers:
    case RingKind::Modular:
        return int_value() == 1;
    case RingKind::Rationals:
        return rat_value() == 1;
    case RingKind::Polynomial:
    case RingKind::Quotient: {
        const auto& t = poly().terms;
        return t.size() == 1 && t[0].coeff.is_one() &&
               std::all_of(t[0].exps.begin(), t[0].exps.end(), [](int e) { return e == 0; });
    }
    case RingKind::Excision:
        return excision().base.is_one() && excision().ideal.is_zero();
    }
    return false;
}

bool RingElem::operator==(const RingElem& o) const {
    if (!ring_equal(ring_, o.ring_)) return false;
    switch (ring_->kind) {
    case RingKind::Integers:
    case RingKind::Modular:
        return int_value() == o.int_value();
    case RingKind::Rationals:
        return rat_value() == o.rat_value();
    case RingKind::Polynomial:
    case RingKind::Quotient: {
        const auto& a = poly().terms;
        const auto& b = o.poly().terms;
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].exps != b[i].exps || a[i].coeff != b[i].coeff) return false;
        return true;
    }
    case RingKind::Excision:
        return excision().base == o.excision().base && excision().ideal == o.excision().ideal;
    }
    return false;
}

// ---------------------------------------------------------------- arithmetic

RingElem RingElem::operator+(const RingElem& o) const {
    require_same_ring(*this, o);
    const Ring& r = ring_;
    switch (r->kind) {
    case RingKind::Integers:
        return ElemOps::raw_int(r, int_value() + o.int_value());
    case RingKind::Modular: {
        mpz_class v = int_value() + o.int_value();
        if (v >= r->modulus) v -= r->modulus;
        return ElemOps::raw_int(r, v);
    }
    case RingKind::Rationals:
        return ElemOps::raw_rat(r, rat_value() + o.rat_value());
    case RingKind::Polynomial:
    case RingKind::Quotient: {
        TermMap m = map_from_payload(poly());
        for (const auto& t : o.poly().terms) {
            auto [it, fresh] = m.emplace(t.exps, t.coeff);
            if (!fresh) it->second = it->second + t.coeff;
        }
        auto p = payload_from_map(std::move(m));
        // normal forms are closed under addition, no re-reduction needed
        return ElemOps::raw_poly(r, p);
    }
    case RingKind::Excision: {
        const auto& a = excision();
        const auto& b = o.excision();
        auto p = std::make_shared<ExcisionPayload>();
        p->base = a.base + b.base;
        p->ideal = a.ideal + b.ideal;
        if (a.cof.size() == b.cof.size()) {
            p->cof.reserve(a.cof.size());
            for (std::size_t i = 0; i < a.cof.size(); ++i)
                p->cof.push_back(a.cof[i] + b.cof[i]);
        }
        return ElemOps::raw_exc(r, p);
    }
    }
    throw UnsupportedRing("+");
}

RingElem RingElem::operator-() const {
    const Ring& r = ring_;
    switch (r->kind) {
    case RingKind::Integers:
        return ElemOps::raw_int(r, -int_value());
    case RingKind::Modular: {
        mpz_class v = int_value();
        if (v != 0) v = r->modulus - v;
        return ElemOps::raw_int(r, v);
    }
    case RingKind::Rationals:
        return ElemOps::raw_rat(r, -rat_value());
    case RingKind::Polynomial:
    case RingKind::Quotient: {
        auto p = std::make_shared<PolyPayload>();
        p->terms.reserve(poly().terms.size());
        for (const auto& t : poly().terms) p->terms.push_back({t.exps, -t.coeff});
        return ElemOps::raw_poly(r, p);
    }
    case RingKind::Excision: {
        const auto& a = excision();
        auto p = std::make_shared<ExcisionPayload>();
        p->base = -a.base;
        p->ideal = -a.ideal;
        p->cof.reserve(a.cof.size());
        for (const auto& c : a.cof) p->cof.push_back(-c);
        return ElemOps::raw_exc(r, p);
    }
    }
    throw UnsupportedRing("neg");
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
    require_same_ring(*this, o);
    const Ring& r = ring_;
    switch (r->kind) {
    case RingKind::Integers:
        return ElemOps::raw_int(r, int_value() * o.int_value());
    case RingKind::Modular: {
        mpz_class v = int_value() * o.int_value();
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), r->modulus.get_mpz_t());
        return ElemOps::raw_int(r, v);
    }
    case RingKind::Rationals:
        return ElemOps::raw_rat(r, rat_value() * o.rat_value());
    case RingKind::Polynomial:
    case RingKind::Quotient: {
        TermMap m;
        for (const auto& ta : poly().terms)
            for (const auto& tb : o.poly().terms) {
                std::vector<int> e = monomial_mul(ta.exps, tb.exps);
                RingElem c = ta.coeff * tb.coeff;
                auto [it, fresh] = m.emplace(std::move(e), c);
                if (!fresh) it->second = it->second + c;
            }
        auto p = payload_from_map(std::move(m));
        if (r->kind == RingKind::Quotient) return reduce_quotient_payload(r, p);
        return ElemOps::raw_poly(r, p);
    }
    case RingKind::Excision: {
        const auto& a = excision();
        const auto& b = o.excision();
        auto p = std::make_shared<ExcisionPayload>();
        p->base = a.base * b.base;
        // (a,i)(b,j) = (ab, aj + ib + ij)
        p->ideal = a.base * b.ideal + a.ideal * b.base + a.ideal * b.ideal;
        if (a.cof.size() == b.cof.size()) {
            p->cof.reserve(a.cof.size());
            for (std::size_t k = 0; k < a.cof.size(); ++k)
                p->cof.push_back(a.base * b.cof[k] + a.cof[k] * b.base + a.ideal * b.cof[k]);
        }
        return ElemOps::raw_exc(r, p);
    }
    }
    throw UnsupportedRing("*");
}

RingElem RingElem::pow(unsigned long e) const {
    RingElem acc = RingElem::one(ring_);
    RingElem b = *this;
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

RingElem RingElem::normalize() const {
    const Ring& r = ring_;
    switch (r->kind) {
    case RingKind::Integers:
        return *this;
    case RingKind::Modular: {
        mpz_class v;
        mpz_mod(v.get_mpz_t(), int_value().get_mpz_t(), r->modulus.get_mpz_t());
        return ElemOps::raw_int(r, v);
    }
    case RingKind::Rationals: {
        mpq_class q = rat_value();
        q.canonicalize();
        return ElemOps::raw_rat(r, q);
    }
    case RingKind::Polynomial:
    case RingKind::Quotient: {
        TermMap m;
        for (const auto& t : poly().terms) {
            RingElem c = t.coeff.normalize();
            auto [it, fresh] = m.emplace(t.exps, c);
            if (!fresh) it->second = it->second + c;
        }
        auto p = payload_from_map(std::move(m));
        if (r->kind == RingKind::Quotient) return reduce_quotient_payload(r, p);
        return ElemOps::raw_poly(r, p);
    }
    case RingKind::Excision: {
        const auto& a = excision();
        auto p = std::make_shared<ExcisionPayload>();
        p->base = a.base.normalize();
        p->ideal = a.ideal.normalize();
        p->cof = a.cof;
        return ElemOps::raw_exc(r, p);
    }
    }
    throw UnsupportedRing("normalize");
}

// ------------------------------------------------------------ units, division

std::optional<RingElem> RingElem::inverse() const {
    const Ring& r = ring_;
    switch (r->kind) {
    case RingKind::Integers:
        if (int_value() == 1 || int_value() == -1) return *this;
        return std::nullopt;
    case RingKind::Rationals: {
        if (rat_value() == 0) return std::nullopt;
        return ElemOps::raw_rat(r, 1 / rat_value());
    }
    case RingKind::Modular: {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), int_value().get_mpz_t(), r->modulus.get_mpz_t()))
            return ElemOps::raw_int(r, inv);
        return std::nullopt;
    }
    case RingKind::Polynomial: {
        // over a domain base the only units are constant units
        const auto& t = poly().terms;
        if (t.size() != 1) {
            if (ring_is_domain(r->base)) return std::nullopt;
            throw UndecidableHere("unit test in " + ring_to_string(r));
        }
        if (!std::all_of(t[0].exps.begin(), t[0].exps.end(), [](int e) { return e == 0; })) {
            if (ring_is_domain(r->base)) return std::nullopt;
            throw UndecidableHere("unit test in " + ring_to_string(r));
        }
        auto ci = t[0].coeff.inverse();
        if (!ci) return std::nullopt;
        auto p = std::make_shared<PolyPayload>();
        p->terms.push_back({t[0].exps, *ci});
        return ElemOps::raw_poly(r, p);
    }
    case RingKind::Quotient: {
        if (is_zero()) return std::nullopt;
        // e is a unit iff 1 lies in (e) + relations; cofactors give the inverse.
        RingElem rep = ElemOps::raw_poly(r->base, std::make_shared<PolyPayload>(poly()));
        std::vector<RingElem> gens{rep};
        for (const auto& rel : r->relations) gens.push_back(rel);
        WitnessResult w = ideal_membership(gens, RingElem::one(r->base));
        if (w.status != WitnessStatus::Found) return std::nullopt;
        return reduce_quotient_payload(r, std::make_shared<PolyPayload>(w.cofactors[0].poly()));
    }
    case RingKind::Excision: {
        const auto& a = excision();
        auto bi = a.base.inverse();
        if (!bi) return std::nullopt;
        // (a,i)^-1 = (a^-1, j) with j(a+i) = -i*a^-1; j must land in I.
        RingElem rhs = -(a.ideal * *bi);
        RingElem den = a.base + a.ideal;
        auto j = rhs.divexact(den);
        if (!j) return std::nullopt;
        WitnessResult w = ideal_membership(r->ideal_gens, *j);
        if (w.status != WitnessStatus::Found) return std::nullopt;
        return RingElem::make_excision(r, *bi, *j);
    }
    }
    return std::nullopt;
}

std::optional<RingElem> RingElem::divexact(const RingElem& d) const {
    require_same_ring(*this, d);
    const Ring& r = ring_;
    if (d.is_zero()) return std::nullopt;
    switch (r->kind) {
    case RingKind::Integers: {
        if (!mpz_divisible_p(int_value().get_mpz_t(), d.int_value().get_mpz_t()))
            return std::nullopt;
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), int_value().get_mpz_t(), d.int_value().get_mpz_t());
        return ElemOps::raw_int(r, q);
    }
    case RingKind::Rationals:
        return ElemOps::raw_rat(r, rat_value() / d.rat_value());
    case RingKind::Modular: {
        auto inv = d.inverse();
        if (inv) return *this * *inv;
        // non-unit divisor: quotient would not be unique
        return std::nullopt;
    }
    case RingKind::Polynomial: {
        // exact multivariate division by a single divisor, leading terms in grevlex
        RingElem rem = *this;
        RingElem quot = RingElem::zero(r);
        while (!rem.is_zero()) {
            const PolyTerm& lr = leading_term(rem, MonomialOrder::Grevlex);
            const PolyTerm& ld = leading_term(d, MonomialOrder::Grevlex);
            if (!monomial_divides(ld.exps, lr.exps)) return std::nullopt;
            auto c = lr.coeff.divexact(ld.coeff);
            if (!c) return std::nullopt;
            std::vector<int> mono = monomial_div(lr.exps, ld.exps);
            RingElem piece = term_mul(RingElem::one(r), *c, mono);
            quot = quot + piece;
            rem = rem - term_mul(d, *c, mono);
        }
        return quot;
    }
    case RingKind::Quotient:
    case RingKind::Excision: {
        auto inv = d.inverse();
        if (inv) return *this * *inv;
        return std::nullopt;
    }
    }
    return std::nullopt;
}

// -------------------------------------------------------------- extended gcd

static bool is_univariate_over_field(const Ring& r) {
    return r->kind == RingKind::Polynomial && r->vars.size() == 1 && ring_is_field(r->base);
}

void extended_gcd(const RingElem& a, const RingElem& b, RingElem& g, RingElem& s, RingElem& t) {
    require_same_ring(a, b);
    const Ring& r = a.ring();
    if (r->kind == RingKind::Integers) {
        mpz_class gg, ss, tt;
        mpz_gcdext(gg.get_mpz_t(), ss.get_mpz_t(), tt.get_mpz_t(), a.int_value().get_mpz_t(),
                   b.int_value().get_mpz_t());
        g = ElemOps::raw_int(r, gg);
        s = ElemOps::raw_int(r, ss);
        t = ElemOps::raw_int(r, tt);
        return;
    }
    if (is_univariate_over_field(r)) {
        // classical polynomial xgcd, result monic
        RingElem r0 = a, r1 = b;
        RingElem s0 = RingElem::one(r), s1 = RingElem::zero(r);
        RingElem t0 = RingElem::zero(r), t1 = RingElem::one(r);
        while (!r1.is_zero()) {
            // divide r0 by r1
            RingElem q = RingElem::zero(r), rem = r0;
            while (!rem.is_zero()) {
                const PolyTerm& lr = leading_term(rem, MonomialOrder::Lex);
                const PolyTerm& ld = leading_term(r1, MonomialOrder::Lex);
                if (lr.exps[0] < ld.exps[0]) break;
                RingElem c = lr.coeff * *ld.coeff.inverse();
                std::vector<int> mono{lr.exps[0] - ld.exps[0]};
                q = q + term_mul(RingElem::one(r), c, mono);
                rem = rem - term_mul(r1, c, mono);
            }
            RingElem r2 = r0 - q * r1;
            RingElem s2 = s0 - q * s1;
            RingElem t2 = t0 - q * t1;
            r0 = r1; r1 = r2;
            s0 = s1; s1 = s2;
            t0 = t1; t1 = t2;
        }
        if (!r0.is_zero()) {
            RingElem lc = leading_term(r0, MonomialOrder::Lex).coeff;
            RingElem lci = *lc.inverse();
            RingElem lcp = term_mul(RingElem::one(r), lci, std::vector<int>{0});
            r0 = r0 * lcp;
            s0 = s0 * lcp;
            t0 = t0 * lcp;
        }
        g = r0; s = s0; t = t0;
        return;
    }
    throw UnsupportedRing("extended_gcd over " + ring_to_string(r));
}

// ------------------------------------------------- witnesses and membership

namespace {

// gcd chain with cofactor tracking over a Euclidean ring (ZZ or k[x]).
// Returns g = gcd(all) and cofactors c with sum c[i]*v[i] = g.
void gcd_chain(const std::vector<RingElem>& v, RingElem& g, std::vector<RingElem>& cof) {
    const Ring& r = v.front().ring();
    g = v[0];
    cof.assign(v.size(), RingElem::zero(r));
    cof[0] = RingElem::one(r);
    for (std::size_t i = 1; i < v.size(); ++i) {
        RingElem gi, s, t;
        extended_gcd(g, v[i], gi, s, t);
        for (std::size_t k = 0; k < i; ++k) cof[k] = cof[k] * s;
        cof[i] = t;
        g = gi;
    }
}

bool is_assoc_one(const RingElem& g, RingElem& unit_fix) {
    auto inv = g.inverse();
    if (!inv) return false;
    unit_fix = *inv;
    return true;
}

WitnessResult membership_via_groebner(const Ring& poly_ring,
                                      const std::vector<RingElem>& gens,
                                      const RingElem& target) {
    GroebnerResult gb = groebner_with_cofactors(gens, MonomialOrder::Grevlex);
    std::vector<RingElem> q;
    RingElem rem = poly_reduce(target, gb.basis, MonomialOrder::Grevlex, &q);
    WitnessResult out;
    if (!rem.is_zero()) {
        out.status = WitnessStatus::NotUnimodular;
        return out;
    }
    out.status = WitnessStatus::Found;
    out.cofactors.assign(gens.size(), RingElem::zero(poly_ring));
    for (std::size_t i = 0; i < gb.basis.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
            out.cofactors[j] = out.cofactors[j] + q[i] * gb.cofactors[i][j];
    return out;
}

} // namespace

WitnessResult ideal_membership(const std::vector<RingElem>& gens, const RingElem& target) {
    WitnessResult out;
    if (gens.empty()) {
        out.status = target.is_zero() ? WitnessStatus::Found : WitnessStatus::NotUnimodular;
        return out;
    }
    const Ring& r = target.ring();
    for (const auto& g : gens) require_same_ring(g, target);
    if (target.is_zero()) {
        out.status = WitnessStatus::Found;
        out.cofactors.assign(gens.size(), RingElem::zero(r));
        return out;
    }
    switch (r->kind) {
    case RingKind::Integers: {
        RingElem g;
        std::vector<RingElem> cof;
        gcd_chain(gens, g, cof);
        if (g.is_zero()) {
            out.status = WitnessStatus::NotUnimodular;
            return out;
        }
        auto q = target.divexact(g);
        if (!q) {
            out.status = WitnessStatus::NotUnimodular;
            return out;
        }
        out.status = WitnessStatus::Found;
        for (auto& c : cof) c = c * *q;
        out.cofactors = std::move(cof);
        return out;
    }
    case RingKind::Rationals: {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (!gens[i].is_zero()) {
                out.status = WitnessStatus::Found;
                out.cofactors.assign(gens.size(), RingElem::zero(r));
                out.cofactors[i] = *target.divexact(gens[i]);
                return out;
            }
        out.status = WitnessStatus::NotUnimodular;
        return out;
    }
    case RingKind::Modular: {
        // lift to ZZ with the modulus appended
        Ring z = ring_ZZ();
        std::vector<RingElem> lifted;
        for (const auto& g : gens) lifted.push_back(RingElem::from_int(z, g.int_value()));
        lifted.push_back(RingElem::from_int(z, r->modulus));
        WitnessResult wz = ideal_membership(lifted, RingElem::from_int(z, target.int_value()));
        if (wz.status != WitnessStatus::Found) {
            out.status = WitnessStatus::NotUnimodular;
            return out;
        }
        out.status = WitnessStatus::Found;
        for (std::size_t i = 0; i < gens.size(); ++i)
            out.cofactors.push_back(RingElem::from_int(r, wz.cofactors[i].int_value()));
        return out;
    }
    case RingKind::Polynomial: {
        if (is_univariate_over_field(r)) {
            RingElem g;
            std::vector<RingElem> cof;
            gcd_chain(gens, g, cof);
            if (g.is_zero()) {
                out.status = WitnessStatus::NotUnimodular;
                return out;
            }
            std::vector<RingElem> q;
            RingElem rem = poly_reduce(target, {g}, MonomialOrder::Lex, &q);
            if (!rem.is_zero()) {
                out.status = WitnessStatus::NotUnimodular;
                return out;
            }
            out.status = WitnessStatus::Found;
            for (auto& c : cof) c = c * q[0];
            out.cofactors = std::move(cof);
            return out;
        }
        if (ring_is_field(r->base)) return membership_via_groebner(r, gens, target);
        // single-generator exact division fast path (e.g. principal ideals of ZZ[x])
        if (gens.size() == 1) {
            auto q = target.divexact(gens[0]);
            if (q) {
                out.status = WitnessStatus::Found;
                out.cofactors.push_back(*q);
                return out;
            }
        }
        out.status = WitnessStatus::Undecidable;
        return out;
    }
    case RingKind::Quotient: {
        const Ring& pr = r->base;
        std::vector<RingElem> lifted;
        for (const auto& g : gens) lifted.push_back(canonical_lift(g));
        std::size_t ngens = lifted.size();
        for (const auto& rel : r->relations) lifted.push_back(rel);
        WitnessResult wp = membership_via_groebner(pr, lifted, canonical_lift(target));
        if (wp.status != WitnessStatus::Found) {
            out.status = wp.status;
            return out;
        }
        out.status = WitnessStatus::Found;
        for (std::size_t i = 0; i < ngens; ++i)
            out.cofactors.push_back(reduce_into(r, wp.cofactors[i]));
        return out;
    }
    default:
        out.status = WitnessStatus::Undecidable;
        return out;
    }
}

WitnessResult unimodularity_witness(const std::vector<RingElem>& row) {
    if (row.empty()) return {WitnessStatus::NotUnimodular, {}};
    const Ring& r = row.front().ring();
    for (const auto& e : row) require_same_ring(e, row.front());
    // fast path: some coordinate is a unit
    for (std::size_t i = 0; i < row.size(); ++i) {
        std::optional<RingElem> inv;
        try {
            inv = row[i].inverse();
        } catch (const UndecidableHere&) {
            inv = std::nullopt;
        }
        if (inv) {
            WitnessResult out;
            out.status = WitnessStatus::Found;
            out.cofactors.assign(row.size(), RingElem::zero(r));
            out.cofactors[i] = *inv;
            return out;
        }
    }
    return ideal_membership(row, RingElem::one(r));
}

// ------------------------------------------------------------------- helpers

RingElem dot(const std::vector<RingElem>& a, const std::vector<RingElem>& b) {
    if (a.size() != b.size() || a.empty())
        throw Error("SizeMismatch", "dot of rows with different lengths");
    RingElem acc = a[0] * b[0];
    for (std::size_t i = 1; i < a.size(); ++i) acc = acc + a[i] * b[i];
    return acc;
}

RingElem canonical_lift(const RingElem& e) {
    const Ring& r = e.ring();
    switch (r->kind) {
    case RingKind::Modular:
        return RingElem::from_int(ring_ZZ(), e.int_value());
    case RingKind::Quotient:
        return RingElem::make_poly(r->base, std::make_shared<PolyPayload>(e.poly()));
    default:
        return e;
    }
}

RingElem reduce_into(const Ring& target, const RingElem& e) {
    if (ring_equal(target, e.ring())) return e;
    if (target->kind == RingKind::Modular && e.ring()->kind == RingKind::Integers)
        return RingElem::from_int(target, e.int_value());
    if (target->kind == RingKind::Quotient && ring_equal(target->base, e.ring()))
        return reduce_quotient_payload(target, std::make_shared<PolyPayload>(e.poly()));
    throw RingMismatch("cannot map " + ring_to_string(e.ring()) + " into " +
                       ring_to_string(target));
}

// ------------------------------------------------------------------ printing

namespace {

bool needs_parens(const std::string& s) {
    if (s.find('+') != std::string::npos) return true;
    // a leading minus alone is fine for a lone coefficient, but any interior
    // minus means a composite expression
    if (s.find('-', 1) != std::string::npos) return true;
    if (s.find(' ') != std::string::npos) return true;
    if (s.find('/') != std::string::npos) return true;
    return false;
}

std::string monomial_str(const Ring& pr, const std::vector<int>& exps) {
    std::string s;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += pr->vars[i];
        if (exps[i] != 1) s += "^" + std::to_string(exps[i]);
    }
    return s;
}

} // namespace

std::string RingElem::to_string() const {
    const Ring& r = ring_;
    switch (r->kind) {
    case RingKind::Integers:
    case RingKind::Modular:
        return int_value().get_str();
    case RingKind::Rationals: {
        const mpq_class& q = rat_value();
        if (q.get_den() == 1) return q.get_num().get_str();
        return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    case RingKind::Polynomial:
    case RingKind::Quotient: {
        const Ring& pr = payload_poly_ring(r);
        const auto& terms = poly().terms;
        if (terms.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            std::string mono = monomial_str(pr, terms[i].exps);
            std::string c = terms[i].coeff.to_string();
            bool negated = false;
            if (!c.empty() && c[0] == '-' && !needs_parens(c)) {
                negated = true;
                c = c.substr(1);
            }
            if (i == 0)
                s += negated ? "-" : "";
            else
                s += negated ? " - " : " + ";
            if (mono.empty()) {
                s += needs_parens(c) ? "(" + c + ")" : c;
            } else if (c == "1") {
                s += mono;
            } else {
                s += (needs_parens(c) ? "(" + c + ")" : c) + "*" + mono;
            }
        }
        return s;
    }
    case RingKind::Excision: {
        const auto& a = excision();
        return "(" + a.base.to_string() + ", " + a.ideal.to_string() + ")";
    }
    }
    return "<?>";
}

} // namespace sympcomp
