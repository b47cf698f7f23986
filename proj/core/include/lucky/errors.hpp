#pragma once

#include <stdexcept>
#include <string>

namespace lucky {

// Malformed caller input: out-of-range preferences, duplicate sort keys,
// a sequence that is not a permutation.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Argument outside the mathematical domain of an operation (e.g. n < 2 for
// L_n).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Size beyond a configured resource cap (enumeration / permutation limits).
class RangeError : public std::out_of_range {
 public:
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

// An internal identity that must hold exactly did not. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace lucky
