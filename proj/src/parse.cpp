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

#include "sympcomp/parse.hpp"

#include <cctype>

namespace sympcomp {

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& s) : src_(s) {}

    std::size_t pos() const { return pos_; }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool eof() {
        skip_ws();
        return pos_ >= src_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool accept_word(const std::string& w) {
        skip_ws();
        if (src_.compare(pos_, w.size(), w) == 0) {
            // keywords must not run into a longer identifier
            std::size_t end = pos_ + w.size();
            if (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) ||
                                      src_[end] == '_'))
                return false;
            pos_ = end;
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        if (!accept(c)) throw ParseError(pos_, "expected '" + std::string(1, c) + "' " + what);
    }

    mpz_class integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (pos_ == digits) throw ParseError(start, "expected an integer");
        return mpz_class(src_.substr(start, pos_ - start));
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        auto head = [](char c) {
            return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
        };
        auto tail = [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        };
        if (pos_ >= src_.size() || !head(src_[pos_]))
            throw ParseError(start, "expected an identifier");
        ++pos_;
        while (pos_ < src_.size() && tail(src_[pos_])) ++pos_;
        return src_.substr(start, pos_ - start);
    }

    void expect_eof() {
        if (!eof()) throw ParseError(pos_, "trailing input");
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;
};

RingElem elem_expr(Cursor& c, const Ring& r);

RingElem elem_base(Cursor& c, const Ring& r) {
    c.skip_ws();
    char ch = c.peek();
    if (ch == '(') {
        std::size_t open = c.pos();
        c.accept('(');
        if (r->kind == RingKind::Excision) {
            RingElem base = elem_expr(c, r->base);
            c.expect(',', "between excision pair components");
            RingElem ideal = elem_expr(c, r->base);
            c.expect(')', "after excision pair");
            try {
                return RingElem::make_excision(r, base, ideal);
            } catch (const Error& e) {
                throw ParseError(open, e.what());
            }
        }
        RingElem inner = elem_expr(c, r);
        c.expect(')', "after parenthesized expression");
        return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '+') {
        std::size_t at = c.pos();
        mpz_class n = c.integer();
        if (c.accept('/')) {
            mpz_class d = c.integer();
            if (d == 0) throw ParseError(at, "zero denominator");
            try {
                return RingElem::rational(r, n, d);
            } catch (const Error& e) {
                throw ParseError(at, e.what());
            }
        }
        return RingElem::from_int(r, n);
    }
    std::size_t at = c.pos();
    std::string name = c.ident();
    try {
        return RingElem::variable(r, name);
    } catch (const Error& e) {
        throw ParseError(at, e.what());
    }
}

RingElem elem_power(Cursor& c, const Ring& r) {
    // unary minus binds looser than '^': -x^6 is -(x^6)
    if (c.peek() == '-') {
        c.accept('-');
        return -elem_power(c, r);
    }
    RingElem b = elem_base(c, r);
    if (c.accept('^')) {
        std::size_t at = c.pos();
        mpz_class e = c.integer();
        if (e < 0) throw ParseError(at, "negative exponent");
        b = b.pow(e.get_ui());
    }
    return b;
}

RingElem elem_term(Cursor& c, const Ring& r) {
    RingElem t = elem_power(c, r);
    while (c.accept('*')) t = t * elem_power(c, r);
    return t;
}

RingElem elem_expr(Cursor& c, const Ring& r) {
    RingElem e = elem_term(c, r);
    for (;;) {
        if (c.accept('+'))
            e = e + elem_term(c, r);
        else if (c.peek() == '-') {
            c.accept('-');
            e = e - elem_term(c, r);
        } else
            return e;
    }
}

std::vector<RingElem> gens_list(Cursor& c, const Ring& r) {
    c.expect('(', "before the generator list");
    std::vector<RingElem> gens;
    gens.push_back(elem_expr(c, r));
    while (c.accept(',')) gens.push_back(elem_expr(c, r));
    c.expect(')', "after the generator list");
    return gens;
}

Ring postfix(Cursor& c, Ring r);

Ring ring_expr(Cursor& c) {
    Ring r;
    std::size_t at = c.pos();
    if (c.accept_word("excision")) {
        c.expect('(', "after excision");
        Ring base = ring_expr(c);
        c.expect(',', "between the base ring and the ideal");
        std::vector<RingElem> gens = gens_list(c, base);
        c.expect(')', "after the excision descriptor");
        try {
            r = ring_excision(base, gens);
        } catch (const Error& e) {
            throw ParseError(at, e.what());
        }
    } else if (c.accept_word("ZZ")) {
        r = ring_ZZ();
        // "ZZ/INT" is the modular ring; "ZZ/(...)" falls through to quotient
        c.skip_ws();
        if (c.peek() == '/') {
            std::size_t save = c.pos();
            c.accept('/');
            if (c.peek() != '(') {
                mpz_class n = c.integer();
                try {
                    return postfix(c, ring_mod(n));
                } catch (const Error& e) {
                    throw ParseError(at, e.what());
                }
            }
            // not a modulus: rewind impossible, so reject (quotients of ZZ
            // itself are not supported rings)
            throw ParseError(save, "expected a modulus after ZZ/");
        }
    } else if (c.accept_word("QQ")) {
        r = ring_QQ();
    } else {
        throw ParseError(at, "expected a ring (ZZ, QQ, or excision)");
    }
    return postfix(c, r);
}

Ring postfix(Cursor& c, Ring r) {
    for (;;) {
        c.skip_ws();
        if (c.peek() == '[') {
            std::size_t at = c.pos();
            c.accept('[');
            std::vector<std::string> vars;
            std::vector<int> weights;
            for (;;) {
                vars.push_back(c.ident());
                int w = 1;
                if (c.accept(':')) w = static_cast<int>(c.integer().get_si());
                weights.push_back(w);
                if (!c.accept(',')) break;
            }
            c.expect(']', "after the variable list");
            try {
                r = ring_poly(r, std::move(vars), std::move(weights));
            } catch (const Error& e) {
                throw ParseError(at, e.what());
            }
        } else if (c.peek() == '/') {
            std::size_t at = c.pos();
            c.accept('/');
            std::vector<RingElem> rels = gens_list(c, r);
            try {
                r = ring_quotient(r, rels);
            } catch (const Error& e) {
                throw ParseError(at, e.what());
            }
        } else {
            return r;
        }
    }
}

} // namespace

Ring parse_ring(const std::string& text) {
    Cursor c(text);
    Ring r = ring_expr(c);
    c.expect_eof();
    return r;
}

RingElem parse_element(const std::string& text, const Ring& r) {
    Cursor c(text);
    RingElem e = elem_expr(c, r);
    c.expect_eof();
    return e;
}

namespace {

std::vector<RingElem> row_expr(Cursor& c, const Ring& r) {
    c.expect('[', "before the row");
    std::vector<RingElem> out;
    out.push_back(elem_expr(c, r));
    while (c.accept(',')) out.push_back(elem_expr(c, r));
    c.expect(']', "after the row");
    return out;
}

} // namespace

std::vector<RingElem> parse_row(const std::string& text, const Ring& r) {
    Cursor c(text);
    std::vector<RingElem> out = row_expr(c, r);
    c.expect_eof();
    return out;
}

RingMatrix parse_matrix(const std::string& text, const Ring& r) {
    Cursor c(text);
    c.expect('[', "before the matrix");
    std::vector<std::vector<RingElem>> rows;
    rows.push_back(row_expr(c, r));
    while (c.accept(',')) rows.push_back(row_expr(c, r));
    c.expect(']', "after the matrix");
    c.expect_eof();
    return RingMatrix::from_rows(r, std::move(rows));
}

} // namespace sympcomp
