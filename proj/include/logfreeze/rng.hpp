#pragma once

#include <cstdint>
#include <random>

namespace logfreeze {

// (master, stream) determines every draw of one task.
struct Seed {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;
};

using Engine = std::mt19937_64;

Engine make_engine(const Seed& seed);

}  // namespace logfreeze
