#pragma once

#include <string>
#include <vector>

namespace cbperm {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct VerifyParams {
  int n_max = 8;
  int m_max = 20;
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one invariant suite ("bijection", "counts", "codewords", "paths",
/// "reflection", "identity") or all of them ("all"). Throws InvalidInput on
/// an unknown name.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyParams& params);

}  // namespace cbperm
