#pragma once

#include <iostream>

namespace junctionlab {

inline int run_cli(int /*argc*/, char** /*argv*/) {
  std::cerr << "junctionlab: not wired up yet\n";
  return 1;
}

}  // namespace junctionlab
