/*
 * Copyright 2026 The shadowcodes Authors
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

#include "shadow/errors.hpp"

namespace shadow {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::ZeroArgument: return "ZeroArgument";
        case Errc::EvenCharacteristic: return "EvenCharacteristic";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::ConstantInput: return "ConstantInput";
        case Errc::ExhaustedSupply: return "ExhaustedSupply";
        case Errc::InvalidBasicSet: return "InvalidBasicSet";
        case Errc::VanishesOnE: return "VanishesOnE";
        case Errc::EvaluationSetIsFullField: return "EvaluationSetIsFullField";
        case Errc::NonpositiveDelta: return "NonpositiveDelta";
        case Errc::DimensionTooLarge: return "DimensionTooLarge";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::BadParameters: return "BadParameters";
        case Errc::BadShape: return "BadShape";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace shadow
