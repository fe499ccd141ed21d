#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace p5g {

enum class ErrorCode {
    AsymmetricAdjacency,
    Loop,
    ParallelEdge,
    DanglingVertexId,
    ParseError,
    Disconnected,
    NotPlanarEmbedding,
    DeltaTooSmall,
    DegreeTooSmall,
    BadParameter,
    BudgetExceeded,
    PreconditionViolated,
    ExtensionFailed,
    ProfileMismatch,
    UnknownLedgerId,
    ConservationBroken,
    CapViolation,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Parse failures carry the 1-based line number of the offending line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// exact_chi2 ran out of time; the bounds found so far are part of the result.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint32_t lower, std::uint32_t upper)
        : Error(ErrorCode::BudgetExceeded,
                "search budget exceeded; chi2 in [" + std::to_string(lower) + ", " +
                    std::to_string(upper) + "]"),
          lower_(lower), upper_(upper) {}

    std::uint32_t lower() const { return lower_; }
    std::uint32_t upper() const { return upper_; }

private:
    std::uint32_t lower_;
    std::uint32_t upper_;
};

} // namespace p5g
