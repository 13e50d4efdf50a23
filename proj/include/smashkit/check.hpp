#pragma once

#include <string>

namespace smashkit {

/// One named pass/fail line of a report.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

}  // namespace smashkit
