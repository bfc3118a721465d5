// Copyright 2026 The dsaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dsaudit {

enum class ErrorCode {
    WrongLength,
    InvalidEncoding,
    EmptyFile,
    InconsistentLength,
    ParamMismatch,
    IndexOutOfRange,
    BeaconUnavailable,
    InsufficientPoints,
    DuplicatePoint,
    SingularSystem,
    WrongState,
    InvalidAgreement,
    InsufficientDeposit,
    AuditsExhausted,
    NoProofPending,
    InvalidConfig,
    Io,
};

inline std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::InvalidEncoding: return "InvalidEncoding";
    case ErrorCode::EmptyFile: return "EmptyFile";
    case ErrorCode::InconsistentLength: return "InconsistentLength";
    case ErrorCode::ParamMismatch: return "ParamMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BeaconUnavailable: return "BeaconUnavailable";
    case ErrorCode::InsufficientPoints: return "InsufficientPoints";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::WrongState: return "WrongState";
    case ErrorCode::InvalidAgreement: return "InvalidAgreement";
    case ErrorCode::InsufficientDeposit: return "InsufficientDeposit";
    case ErrorCode::AuditsExhausted: return "AuditsExhausted";
    case ErrorCode::NoProofPending: return "NoProofPending";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what)
    {
    }

    ErrorCode code() const noexcept { return code_; }
    /// The message without the code prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what)
{
    if (!cond) {
        fail(code, what);
    }
}

} // namespace dsaudit
