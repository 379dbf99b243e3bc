#pragma once

#include <cstdint>

namespace graphpt {

// Identifies one reproducible random stream. Identical (seed, stream) pairs
// replay identical outputs bit for bit, on any platform and thread layout.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

// Counter-based generator: output i of a stream is a pure function of
// (seed, stream, i). Substreams derived per trial index make parallel
// Monte-Carlo runs reproducible regardless of scheduling.
class CounterRng {
 public:
  explicit CounterRng(RngSeed s);

  std::uint64_t next_u64();

  // Uniform in [0, 1), 53-bit resolution.
  double next_double();

  // Uniform in {0, ..., bound-1} via the multiply-shift map on the full
  // 64-bit output; no modulo step.
  std::uint32_t next_below(std::uint32_t bound);

  static RngSeed substream(RngSeed base, std::uint64_t index);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace graphpt
