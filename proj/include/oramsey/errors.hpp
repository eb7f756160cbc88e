#pragma once

#include <stdexcept>
#include <string>

namespace oramsey {

// Thrown when an instance exceeds a configured memory/time/size budget.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a coloring file cannot be parsed; the message names the
// offending field (header, k, n, payload, padding).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a generator's mandatory self-verification fails.  This is an
// internal error: the construction rule produced an object that does not
// satisfy its own avoidance contract, so nothing may be emitted.
class verification_error : public std::runtime_error {
public:
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oramsey
