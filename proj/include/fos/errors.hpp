#pragma once

#include <stdexcept>
#include <string>

namespace fos {

/// Malformed or invalid user input (instance files, parameters).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented desk-scale limit was exceeded (node count, edge count).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Seeing one of these means either a bug or
/// a counterexample to a structural result the algorithms rely on.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require_cap(bool ok, const std::string& what) {
  if (!ok) throw CapExceeded(what);
}

inline void require_contract(bool ok, const std::string& what) {
  if (!ok) throw ContractViolation(what);
}

}  // namespace fos
