#pragma once

#include <array>
#include <cstdint>

namespace padic {

// Counter-based RNG (Philox 4x32-10, Salmon et al. 2011).
//
// A generator is addressed by (seed, stream_hi, stream_lo); draws with the
// same address reproduce the same sequence regardless of how many other
// streams exist or which worker consumes them.  Monte Carlo code keys
// stream_hi by path index and stream_lo by a purpose tag, so results are
// independent of the worker count.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream_hi = 0,
                      std::uint64_t stream_lo = 0);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform on [0,1) with 53 random bits.
  double next_double();

  // Uniform on {0,...,bound-1}, unbiased. bound must be positive.
  std::uint32_t next_below(std::uint32_t bound);
  std::uint64_t next_below64(std::uint64_t bound);

  double next_exponential(double rate);

  // Exact Poisson sampling: Knuth product method for small means,
  // Hormann's PTRS transformed rejection for large means.
  std::uint64_t next_poisson(double mean);

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> ctr_;
  std::array<std::uint32_t, 4> buf_;
  int pos_;
};

}  // namespace padic
