#pragma once

#include <stdexcept>
#include <string>

namespace iasl {

/// Domain error for invalid inputs and violated preconditions.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace iasl
