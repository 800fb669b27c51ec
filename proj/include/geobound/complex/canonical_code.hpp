#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geobound/complex/pairing_complex.hpp"

namespace geobound {

struct CanonicalCode {
  std::vector<int32_t> code;
  std::string hex;              // SHA-256 of the code
  long long automorphisms = 0;  // starting flags reproducing the code
};

// Minimum breadth-first flag encoding over candidate starting flags; candidates are the
// smallest class of a refinement of flag invariants. Parallel over candidates.
CanonicalCode canonical_code(const PairingComplex& x);
CanonicalCode canonical_code_serial(const PairingComplex& x);

std::string sha256_hex(const std::vector<int32_t>& words);

}  // namespace geobound
