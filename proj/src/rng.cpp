#include "spinlab/rng.hpp"

namespace spinlab {

CounterRng CounterRng::split(std::uint64_t stream) const {
  return CounterRng(FromKey{}, mix(key_ ^ mix(stream ^ 0xd1b54a32d192ed03ULL)));
}

std::uint64_t CounterRng::bits(std::uint64_t stream, std::uint64_t index) const {
  return mix(mix(key_ ^ mix(stream)) + index * 0x9e3779b97f4a7c15ULL);
}

double CounterRng::uniform(std::uint64_t stream, std::uint64_t index) const {
  return static_cast<double>(bits(stream, index) >> 11) * 0x1.0p-53;
}

}  // namespace spinlab
