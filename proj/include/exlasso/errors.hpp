#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace exlasso {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Data and shape problems.

struct DimensionMismatch : Error {
    using Error::Error;
};

struct OverlappingGroups : Error {
    std::vector<int> indices;  // 0-based offenders
    OverlappingGroups(const std::string& msg, std::vector<int> idx)
        : Error(msg), indices(std::move(idx)) {}
};

struct MissingIndices : Error {
    std::vector<int> indices;  // 0-based offenders
    MissingIndices(const std::string& msg, std::vector<int> idx)
        : Error(msg), indices(std::move(idx)) {}
};

struct EmptyGroup : Error {
    int group;  // 0-based group position
    EmptyGroup(const std::string& msg, int g) : Error(msg), group(g) {}
};

struct EmptySupport : Error {
    using Error::Error;
};

struct AllGroupsZero : Error {
    using Error::Error;
};

struct EmptyPath : Error {
    using Error::Error;
};

// Numerical failures.

struct NotPositiveDefinite : Error {
    using Error::Error;
};

struct NonConvergence : Error {
    using Error::Error;
};

struct SingularSystem : Error {
    using Error::Error;
};

struct PerfectFit : Error {
    using Error::Error;
};

struct NoFiniteCriterion : Error {
    using Error::Error;
};

struct NonFiniteEncountered : Error {
    using Error::Error;
};

}  // namespace exlasso
