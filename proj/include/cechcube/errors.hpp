#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cechcube {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid argument: vertex outside the complex, index out of range,
// malformed input, disconnected graph.
struct DomainError : Error {
    using Error::Error;
};

// Resource limits: face budgets, unsupported instance sizes.
struct SizeError : Error {
    using Error::Error;
};

// A claimed free face with zero or more than one maximal coface.
// Carries the offending coface list.
struct FreeFaceError : DomainError {
    FreeFaceError(const std::string& msg,
                  std::vector<std::vector<std::uint32_t>> cofaces_)
        : DomainError(msg), cofaces(std::move(cofaces_)) {}

    std::vector<std::vector<std::uint32_t>> cofaces;
};

}  // namespace cechcube
