#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lambda3 {

/// Bad arguments to a library operation (out-of-range lambda, count > pool, ...).
class invalid_parameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A graph or interaction violates a structural invariant (role overlap,
/// unknown node id, newbie id collision).
class structural_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by path statistics when the graph is not connected.
class disconnected_graph : public std::runtime_error {
public:
    disconnected_graph(std::uint32_t components)
        : std::runtime_error("graph is disconnected: " + std::to_string(components) +
                             " components"),
          component_count(components) {}

    std::uint32_t component_count;
};

/// Malformed input file; carries the 1-based offending line when known.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::uint64_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_number(line) {}

    std::uint64_t line_number;
};

}  // namespace lambda3
