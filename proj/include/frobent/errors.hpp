/**************************************************************************
 * errors.hpp
 *
 * Copyright 2026 The frobent authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <stdexcept>
#include <string>

namespace frobent {

/// Error names are stable identifiers; the CLI prints them verbatim.
enum class errc {
    // field construction / arithmetic
    NonPrimeP,
    ReducibleModulus,
    DegreeMismatch,
    FieldTooLarge,
    NotPrimitiveAlpha,
    DivisionByZero,
    MixedFields,
    NonDivisorK,
    LogOfZero,
    // tables and translators
    CodomainMismatch,
    ZeroGamma,
    ScalarOutsideSubfield,
    MismatchedFrobeniusIndex,
    OddCharacteristic,
    OddN,
    NNotFourK,
    BadL,
    NoSolution,
    ConditionNotSatisfied,
    NotATranslator,
    // permutations
    SingularMap,
    NotAPermutation,
    NotAPermutationG,
    ZeroB,
    ZeroA,
    CompositionFailure,
    NotDistinct,
    NNotTwoK,
    EvenCharacteristic,
    DeltaNotInS,
    OddS,
    CoefficientOutsideSubfield,
    NonzeroB,
    InvolutionFailure,
    TheoremViolation,
    // boolean functions
    OddM,
    NotBent,
    AnConditionFailed,
    DualMismatch,
    TranslatorPreconditionFailed,
    ZeroShift,
    PreconditionFailed,
    NotSelfDual,
    TraceConditionFailed,
    InverseMismatch,
    // io / cli
    ParseError,
    UnknownExample,
    UnknownParameters,
    InternalInconsistency,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::NonPrimeP: return "NonPrimeP";
        case errc::ReducibleModulus: return "ReducibleModulus";
        case errc::DegreeMismatch: return "DegreeMismatch";
        case errc::FieldTooLarge: return "FieldTooLarge";
        case errc::NotPrimitiveAlpha: return "NotPrimitiveAlpha";
        case errc::DivisionByZero: return "DivisionByZero";
        case errc::MixedFields: return "MixedFields";
        case errc::NonDivisorK: return "NonDivisorK";
        case errc::LogOfZero: return "LogOfZero";
        case errc::CodomainMismatch: return "CodomainMismatch";
        case errc::ZeroGamma: return "ZeroGamma";
        case errc::ScalarOutsideSubfield: return "ScalarOutsideSubfield";
        case errc::MismatchedFrobeniusIndex: return "MismatchedFrobeniusIndex";
        case errc::OddCharacteristic: return "OddCharacteristic";
        case errc::OddN: return "OddN";
        case errc::NNotFourK: return "NNotFourK";
        case errc::BadL: return "BadL";
        case errc::NoSolution: return "NoSolution";
        case errc::ConditionNotSatisfied: return "ConditionNotSatisfied";
        case errc::NotATranslator: return "NotATranslator";
        case errc::SingularMap: return "SingularMap";
        case errc::NotAPermutation: return "NotAPermutation";
        case errc::NotAPermutationG: return "NotAPermutationG";
        case errc::ZeroB: return "ZeroB";
        case errc::ZeroA: return "ZeroA";
        case errc::CompositionFailure: return "CompositionFailure";
        case errc::NotDistinct: return "NotDistinct";
        case errc::NNotTwoK: return "NNotTwoK";
        case errc::EvenCharacteristic: return "EvenCharacteristic";
        case errc::DeltaNotInS: return "DeltaNotInS";
        case errc::OddS: return "OddS";
        case errc::CoefficientOutsideSubfield: return "CoefficientOutsideSubfield";
        case errc::NonzeroB: return "NonzeroB";
        case errc::InvolutionFailure: return "InvolutionFailure";
        case errc::TheoremViolation: return "TheoremViolation";
        case errc::OddM: return "OddM";
        case errc::NotBent: return "NotBent";
        case errc::AnConditionFailed: return "AnConditionFailed";
        case errc::DualMismatch: return "DualMismatch";
        case errc::TranslatorPreconditionFailed: return "TranslatorPreconditionFailed";
        case errc::ZeroShift: return "ZeroShift";
        case errc::PreconditionFailed: return "PreconditionFailed";
        case errc::NotSelfDual: return "NotSelfDual";
        case errc::TraceConditionFailed: return "TraceConditionFailed";
        case errc::InverseMismatch: return "InverseMismatch";
        case errc::ParseError: return "ParseError";
        case errc::UnknownExample: return "UnknownExample";
        case errc::UnknownParameters: return "UnknownParameters";
        case errc::InternalInconsistency: return "InternalInconsistency";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }
    const char* name() const noexcept { return errc_name(code_); }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) raise(code, what);
}

}  // namespace frobent
