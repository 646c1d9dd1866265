#ifndef SEEDSENS_ERRORS_HPP
#define SEEDSENS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace seedsens {

// Malformed user input: unknown glyph, mismatched alphabets, bad model file.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configurable size cap was exceeded (fragment expansion, oracle word count).
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace seedsens

#endif
