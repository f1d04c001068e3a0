#pragma once

namespace maxconv {

// Outcome of one identity check: the largest deviation seen, where it was
// seen, and whether it stayed under the check's tolerance.
struct VerifyReport {
  double max_error = 0.0;
  double witness_x = 0.0;
  bool pass = true;
};

}  // namespace maxconv
