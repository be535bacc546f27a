#pragma once

#include <stdexcept>
#include <string>

namespace sympgrass {

/// Bad caller input: malformed index sets, v not in I(d), v not below w, ...
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical invariant the code relies on did not hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

}  // namespace sympgrass
