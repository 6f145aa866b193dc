#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Error taxonomy shared across the engine. Everything derives from
// std::runtime_error except ArithmeticOverflow, so callers can keep a
// single catch site per layer.

struct ArithmeticOverflow : std::overflow_error {
    explicit ArithmeticOverflow(const std::string& what) : std::overflow_error(what) {}
};

struct LoopEdgeError : std::runtime_error {
    explicit LoopEdgeError(const std::string& what) : std::runtime_error(what) {}
};

struct DuplicateEdgeError : std::runtime_error {
    explicit DuplicateEdgeError(const std::string& what) : std::runtime_error(what) {}
};

struct NotRedBipartiteError : std::runtime_error {
    explicit NotRedBipartiteError(const std::string& what) : std::runtime_error(what) {}
};

struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidTargetError : std::runtime_error {
    explicit InvalidTargetError(const std::string& what) : std::runtime_error(what) {}
};

struct StageViolationError : std::runtime_error {
    explicit StageViolationError(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

struct StrategyError : std::runtime_error {
    explicit StrategyError(const std::string& what) : std::runtime_error(what) {}
};

struct ReplayMismatchError : std::runtime_error {
    explicit ReplayMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct NotSolvedError : std::runtime_error {
    explicit NotSolvedError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a guaranteed internal invariant fails; always a defect.
struct InvariantViolation : std::logic_error {
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ramsey
