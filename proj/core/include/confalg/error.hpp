#pragma once

#include <stdexcept>
#include <string>

namespace confalg {

/// Raised for malformed or inconsistent input: registry mismatches, wrong
/// structure kinds, dimension mismatches, unparsable polynomial strings.
/// The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace confalg
