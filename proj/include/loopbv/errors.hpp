#pragma once
#include <stdexcept>
#include <string>

namespace loopbv {

/// Unknown generator, or two elements from different signatures.
struct SignatureError : std::runtime_error {
  explicit SignatureError(const std::string& what) : std::runtime_error(what) {}
};

/// Operation applied outside its domain (e.g. coproduct of a manifold class,
/// negative exterior exponent).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A rule needs a table value that was never supplied.
struct ModelIncompleteError : std::runtime_error {
  explicit ModelIncompleteError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed model file or expression.
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace loopbv
