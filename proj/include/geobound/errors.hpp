#pragma once

#include <stdexcept>
#include <string>

namespace geobound {

// Caller broke a documented precondition.
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Input or construction failed a domain check.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  int line;
  ParseError(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

struct UnsupportedField : Error { using Error::Error; };
struct NotHyperbolic : Error { using Error::Error; };
struct InfiniteGroup : Error { using Error::Error; };
struct ToleranceError : Error { using Error::Error; };
struct DegenerateFacet : Error { using Error::Error; };
struct ColoringError : Error { using Error::Error; };
struct GluingError : Error { using Error::Error; };
struct RecoveryError : Error { using Error::Error; };

inline void require(bool ok, const char* what) {
  if (!ok) throw ContractViolation(what);
}

}  // namespace geobound
