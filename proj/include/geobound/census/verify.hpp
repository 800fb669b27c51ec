#pragma once

#include <string>
#include <vector>

namespace geobound {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string id;
  std::vector<VerifyCheck> checks;
  bool passed() const;
};

const std::vector<std::string>& verify_ids();

// Runs the suite for one id over graphs with at most max_n vertices (the non-arithmetic family
// stops at 6). Throws Error listing the available ids when id is unknown.
VerifyReport run_verify(const std::string& id, int max_n = 8);

}  // namespace geobound
