// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#ifndef KDELTA_ERROR_HPP
#define KDELTA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kdelta {

enum class Errc {
    InvalidInput,
    IrrationalRoot,
    UnsupportedDegree,
    NoFit,
    Degenerate,
    ModelMismatch,
    NotPseudoEffective,
    IndefiniteSupport,
    IrrationalBreakpoint,
    Unbounded,
    UnknownCase,
    DegreeNotAdmissible,
    UnknownPoint,
    NotExactOnInterval,
};

const char* errc_name(Errc code);

// Every failure raised by the engine carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace kdelta

#endif // KDELTA_ERROR_HPP
