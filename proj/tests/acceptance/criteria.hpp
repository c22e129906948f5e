#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

// The sixteen acceptance criteria as independent checks. Each returns a pass
// flag and a one-line summary of what was exercised.
namespace criteria {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  std::function<Outcome(std::uint64_t seed)> run;
};

const std::vector<Criterion>& all();

}  // namespace criteria
