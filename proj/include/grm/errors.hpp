#pragma once

#include <stdexcept>
#include <string>

namespace grm {

// Thrown when a construction or an enumeration would exceed its configured
// budget (table size, codeword count, search work).  Callers that want to
// retry with a larger budget can catch this specifically; the CLI maps it
// to its own exit code.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace grm
