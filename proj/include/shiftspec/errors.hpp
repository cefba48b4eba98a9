#pragma once

#include <stdexcept>
#include <string>

namespace shiftspec {

// Bad user-supplied data: unknown symbol, malformed word, inconsistent alphabet.
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A documented precondition of an operation does not hold for the given arguments.
struct precondition_error : std::logic_error {
    explicit precondition_error(const std::string& what) : std::logic_error(what) {}
};

// A block code failed the #-preserving extraction (frame or interior violation).
struct not_hash_preserving : std::runtime_error {
    explicit not_hash_preserving(const std::string& what) : std::runtime_error(what) {}
};

} // namespace shiftspec
