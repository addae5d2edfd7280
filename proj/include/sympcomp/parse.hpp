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

#ifndef SYMPCOMP_PARSE_HPP
#define SYMPCOMP_PARSE_HPP

#include <string>

#include "sympcomp/matrix.hpp"

namespace sympcomp {

// Text grammar shared by the CLI and certificate files. All parsers consume
// the whole input (trailing whitespace allowed) and throw ParseError with a
// byte offset on any malformed input.
//
//   ring    := "ZZ" | "QQ" | "ZZ/" INT
//            | ring "[" ident (":" INT)? ("," ident (":" INT)?)* "]"
//            | ring "/(" poly ("," poly)* ")"
//            | "excision(" ring ", (" poly ("," poly)* "))"
//   element := expression over + - * ^ ( ), integers, fractions a/b,
//              variables; pairs "(a, i)" inside excision rings
//   row     := "[" element ("," element)* "]"
//   matrix  := "[" row ("," row)* "]"

Ring parse_ring(const std::string& text);
RingElem parse_element(const std::string& text, const Ring& r);
std::vector<RingElem> parse_row(const std::string& text, const Ring& r);
RingMatrix parse_matrix(const std::string& text, const Ring& r);

} // namespace sympcomp

#endif
