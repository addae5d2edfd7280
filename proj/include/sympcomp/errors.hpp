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

#ifndef SYMPCOMP_ERRORS_HPP
#define SYMPCOMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sympcomp {

/// Base class for all library errors. `code()` is a stable machine-readable tag.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define SYMPCOMP_DEFINE_ERROR(Name)                              \
    class Name : public Error {                                  \
    public:                                                      \
        explicit Name(const std::string& what)                   \
            : Error(#Name, what) {}                              \
    }

SYMPCOMP_DEFINE_ERROR(RingMismatch);
SYMPCOMP_DEFINE_ERROR(UnsupportedRing);
SYMPCOMP_DEFINE_ERROR(UnsupportedCoefficients);
SYMPCOMP_DEFINE_ERROR(UndecidableHere);
SYMPCOMP_DEFINE_ERROR(NonSquare);
SYMPCOMP_DEFINE_ERROR(NotAlternating);
SYMPCOMP_DEFINE_ERROR(OddSize);
SYMPCOMP_DEFINE_ERROR(DiagonalIndex);
SYMPCOMP_DEFINE_ERROR(BadIndices);
SYMPCOMP_DEFINE_ERROR(WitnessBroken);
SYMPCOMP_DEFINE_ERROR(PfaffianNotOne);
SYMPCOMP_DEFINE_ERROR(FirstCoordMismatch);
SYMPCOMP_DEFINE_ERROR(NotUnimodular);
SYMPCOMP_DEFINE_ERROR(RelationBroken);
SYMPCOMP_DEFINE_ERROR(ReductionUnavailable);
SYMPCOMP_DEFINE_ERROR(ReductionMismatch);
SYMPCOMP_DEFINE_ERROR(DecompositionFailed);
SYMPCOMP_DEFINE_ERROR(TransferFailed);
SYMPCOMP_DEFINE_ERROR(RewriteFailed);
SYMPCOMP_DEFINE_ERROR(SearchFailed);
SYMPCOMP_DEFINE_ERROR(NoStrategy);
SYMPCOMP_DEFINE_ERROR(LiftUnsupported);
SYMPCOMP_DEFINE_ERROR(InvalidDescriptor);

#undef SYMPCOMP_DEFINE_ERROR

/// A pipeline step that could not be constructed; carries the step id.
class StepFailed : public Error {
public:
    StepFailed(std::string step, const std::string& what)
        : Error("StepFailed", "[" + step + "] " + what), step_(std::move(step)) {}
    const std::string& step() const { return step_; }

private:
    std::string step_;
};

/// Parse error with a byte offset into the input.
class ParseError : public Error {
public:
    ParseError(std::size_t pos, const std::string& what)
        : Error("ParseError", "at offset " + std::to_string(pos) + ": " + what), pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

} // namespace sympcomp

#endif
