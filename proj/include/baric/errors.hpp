#pragma once

#include <stdexcept>
#include <string>

namespace baric {

// Bad input: malformed files, violated preconditions, mismatched algebras.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal cross-check disagreed. Always a bug or a false theorem.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InputError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InvariantError(what);
}

}  // namespace baric
