#pragma once

// A fixed corpus of worked examples that exercises every module end to end.
// verify_fixtures() runs them in a fixed order with no I/O beyond the result
// list, so two runs always print the same report.

#include <functional>
#include <string>
#include <vector>

namespace carry {

struct FixtureOutcome {
  bool passed = false;
  /// What was observed, in the library's own text formats.
  std::string observed;
};

struct Fixture {
  std::string id;
  /// Module the example belongs to, e.g. "carry-patterns".
  std::string module;
  std::string description;
  std::function<FixtureOutcome()> run;
};

std::vector<Fixture> fixture_corpus();

struct FixtureResult {
  std::string id;
  std::string module;
  std::string description;
  bool passed = false;
  std::string observed;
};

/// Runs the whole corpus; an exception inside a fixture counts as a failure
/// with the message as the observed text.
std::vector<FixtureResult> verify_fixtures();

} // namespace carry
