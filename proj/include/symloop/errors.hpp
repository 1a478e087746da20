#pragma once

#include <stdexcept>
#include <string>

namespace symloop {

/// A mathematical precondition was violated (non-invertible input, det != 1,
/// ring mismatch, order bound exceeded, ...). The CLI maps this to exit code 2.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input could not be parsed (bad ring descriptor, malformed JSON document).
/// The CLI maps this to exit code 1.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symloop
