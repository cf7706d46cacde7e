/*
   Copyright 2026 The netprotect Authors

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

#include "netprotect/error.hpp"

namespace netprotect {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotAPrimePower: return "NotAPrimePower";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::TooManyFailures: return "TooManyFailures";
    case ErrorKind::FieldTooSmall: return "FieldTooSmall";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InsufficientEquations: return "InsufficientEquations";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::InconsistentSymbols: return "InconsistentSymbols";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::InfeasibleQuota: return "InfeasibleQuota";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidScenario: return "InvalidScenario";
    }
    return "Unknown";
}

} // namespace netprotect
