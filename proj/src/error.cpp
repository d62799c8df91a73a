/*
 * Copyright 2026 The commfibre Authors
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
 */

#include "commfibre/error.hpp"

namespace commfibre {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "not-prime";
    case ErrorCode::EvenPrime: return "even-p";
    case ErrorCode::ReducibleModulus: return "reducible-modulus";
    case ErrorCode::BadModulus: return "bad-modulus";
    case ErrorCode::FieldTooLarge: return "field-too-large";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::FieldMismatch: return "field-mismatch";
    case ErrorCode::JacobiViolation: return "jacobi-violation";
    case ErrorCode::NotNilpotent: return "not-nilpotent";
    case ErrorCode::ClassTooLarge: return "class-too-large";
    case ErrorCode::InconsistentBracket: return "inconsistent-bracket";
    case ErrorCode::Abelian: return "abelian";
    case ErrorCode::UnknownName: return "unknown-name";
    case ErrorCode::BadParam: return "bad-param";
    case ErrorCode::NotSkew: return "not-skew";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::BudgetExceeded: return "budget-exceeded";
    case ErrorCode::NonIntegralClassNumber: return "non-integral-class-number";
    case ErrorCode::NonIntegralDegreeCount: return "non-integral-degree-count";
    case ErrorCode::NegativeOrFractionalCount: return "negative-or-fractional-count";
    case ErrorCode::MismatchedT: return "mismatched-t";
    case ErrorCode::ClassUnsupported: return "class-unsupported";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::UnknownGenerator: return "unknown-generator";
    case ErrorCode::DuplicateBracket: return "duplicate-bracket";
    case ErrorCode::CoefficientOutOfRange: return "coefficient-out-of-range";
  }
  return "unknown-error";
}

}  // namespace commfibre
