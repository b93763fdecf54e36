#pragma once

#include <stdexcept>
#include <string>

namespace resolv {

// Thrown when an exact-enumeration object (product alphabet, type class,
// materialized matrix) would exceed the configured state budget.
struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when parameters make a construction undefined (empty typical set,
// empty truncated support, empty threshold set).
struct degenerate_parameters : std::runtime_error {
    explicit degenerate_parameters(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace resolv
