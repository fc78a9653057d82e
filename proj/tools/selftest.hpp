#pragma once

#include <string>
#include <vector>

namespace wsv::cli {

struct SelftestRow {
  std::string name;
  bool passed;
};

/// Golden examples and bounded-degree property checks.
std::vector<SelftestRow> run_selftest(unsigned threads);

}  // namespace wsv::cli
