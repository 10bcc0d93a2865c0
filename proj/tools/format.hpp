#pragma once

#include <cstdio>
#include <string>

namespace vbcli {

// 12 significant digits, C locale, '.' decimal separator. Every number the
// CLI emits goes through here so outputs are byte-stable across runs.
inline std::string fmt12(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

}  // namespace vbcli
