#ifndef REGMAPS_DIGEST_HPP_
#define REGMAPS_DIGEST_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace regmaps {

// SHA-256, lowercase hex.  Census keys are digested with this so they
// compare across runs and machines.
std::string sha256_hex(const std::vector<uint8_t>& data);

}  // namespace regmaps

#endif  // REGMAPS_DIGEST_HPP_
