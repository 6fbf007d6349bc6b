#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace yardstack {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid input data: bad instance, bad plan, bad parameters, bad file contents.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Malformed file that could not be parsed at all.
class ParseError : public ValidationError {
public:
    explicit ParseError(const std::string& what) : ValidationError(what) {}
};

/// Structural integrity breach, e.g. two containers mapped to one slot.
class IntegrityError : public ValidationError {
public:
    explicit IntegrityError(const std::string& what) : ValidationError(what) {}
};

/// Lookup of a container id that does not exist in the instance or plan.
class NotFoundError : public ValidationError {
public:
    explicit NotFoundError(const std::string& what) : ValidationError(what) {}
};

/// Slot coordinates outside the yard grid.
class BoundsError : public ValidationError {
public:
    explicit BoundsError(const std::string& what) : ValidationError(what) {}
};

/// A constructive solver ran out of restarts before storing every container.
class ConstructionError : public Error {
public:
    ConstructionError(const std::string& what, std::vector<int> unplaced)
        : Error(what), unplaced_ids(std::move(unplaced)) {}

    std::vector<int> unplaced_ids;
};

} // namespace yardstack
