#include "graphpt/rng.hpp"

namespace graphpt {

namespace {

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

CounterRng::CounterRng(RngSeed s) : key_(mix64(mix64(s.seed) ^ mix64(~s.stream))) {}

std::uint64_t CounterRng::next_u64() { return mix64(key_ ^ (counter_++ * 0xd1342543de82ef95ull)); }

double CounterRng::next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::uint32_t CounterRng::next_below(std::uint32_t bound) {
  return static_cast<std::uint32_t>(
      (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
}

RngSeed CounterRng::substream(RngSeed base, std::uint64_t index) {
  return RngSeed{base.seed, mix64(base.stream ^ mix64(index))};
}

}  // namespace graphpt
