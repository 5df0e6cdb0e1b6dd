#pragma once

#include <fstream>
#include <sstream>
#include <string>

namespace morsecob::testing {

inline std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(MORSECOB_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace morsecob::testing
