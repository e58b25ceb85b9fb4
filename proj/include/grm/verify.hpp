#pragma once

#include <string>
#include <vector>

#include "grm/analysis.hpp"

namespace grm {

struct VerifyItem {
  std::string category;  // parameters | dimensions | bounds | weights | designs | observations
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyItem> items;
  long failures() const;
  bool all_pass() const { return failures() == 0; }
};

struct VerifyOptions {
  std::string only;  // category filter; empty runs everything
  EnumerationOptions enumeration;
};

// Recomputes every built-in reference instance (parameter triples, the one
// fully tabulated weight enumerator, the 2-design table, bound values) and
// compares against the frozen expected values.
VerifyReport verify_reference_tables(const VerifyOptions& opts = {});

}  // namespace grm
