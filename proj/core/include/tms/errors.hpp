#pragma once

#include <stdexcept>
#include <string>

namespace tms {

/// Thrown when an operation declines to run because a documented size cap or
/// feasibility precondition is exceeded. The caller is expected to switch
/// strategy (different mode, bigger level sizes, ...), not to treat this as a
/// bug.
class Refusal : public std::runtime_error {
public:
    explicit Refusal(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (JSON space files, manifests, rational literals).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tms
