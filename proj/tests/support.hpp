#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "szeta/zero_data.hpp"

namespace szeta::test {

// The table generated by the ctest fixture, named by SZETA_ZEROS.
inline const ZeroTable& table() {
  static const ZeroTable t = [] {
    const char* path = std::getenv("SZETA_ZEROS");
    if (path == nullptr || *path == '\0') throw std::runtime_error("SZETA_ZEROS is not set");
    return load_zero_file(path);
  }();
  return t;
}

}  // namespace szeta::test
