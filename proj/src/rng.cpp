#include "logfreeze/rng.hpp"

namespace logfreeze {

Engine make_engine(const Seed& seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed.master), static_cast<std::uint32_t>(seed.master >> 32),
                    static_cast<std::uint32_t>(seed.stream), static_cast<std::uint32_t>(seed.stream >> 32),
                    0x6c6f6766u};
  return Engine(seq);
}

}  // namespace logfreeze
