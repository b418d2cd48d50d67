// SPDX-License-Identifier: MIT
#pragma once

#include <string>

namespace tfrac {

/// Outcome of a verification routine. `detail` names the first mismatch on
/// failure and summarizes what was checked on success.
struct CheckReport {
  bool pass = true;
  std::string detail;

  void fail(std::string why) {
    if (pass) detail = std::move(why);
    pass = false;
  }
};

}  // namespace tfrac
