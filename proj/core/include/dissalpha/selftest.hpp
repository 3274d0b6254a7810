#pragma once

#include <string>
#include <vector>

namespace dissalpha {

struct SelfTestCase {
  std::string name;
  bool passed = false;
  std::string detail;  ///< observed values when the case fails
};

/// Runs the built-in reference examples (published figure values, family
/// constructions, gadget facts, bound constants and a Monte-Carlo frequency
/// check). Takes a few seconds.
std::vector<SelfTestCase> run_selftest();

}  // namespace dissalpha
