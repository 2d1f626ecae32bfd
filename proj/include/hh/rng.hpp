#pragma once

#include <cstdint>

namespace hh {

// 64-bit finalizer (splitmix64 style).  All randomness in this project is
// derived by hashing (seed, key) pairs through this mixer rather than by
// drawing from stateful engines, so every sample is reproducible from the
// seed alone and independent of evaluation order, thread count, platform,
// and standard-library version.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_pair(std::uint64_t seed, std::uint64_t key) {
  return mix64(seed ^ mix64(key));
}

// Probability p as a threshold on the hash value: hash < threshold(p) holds
// with probability p (up to 2^-64, exact for p = 0 and p = 1).
inline std::uint64_t prob_threshold(double p) {
  if (p <= 0.0) return 0;
  if (p >= 1.0) return ~0ULL;
  // Scale into [0, 2^64).  The double has 53 bits of precision which is
  // far finer than any tolerance used here.
  long double scaled = static_cast<long double>(p) * 18446744073709551616.0L;
  if (scaled >= 18446744073709551615.0L) return ~0ULL;
  return static_cast<std::uint64_t>(scaled);
}

inline bool hash_bernoulli(std::uint64_t seed, std::uint64_t key,
                           std::uint64_t threshold) {
  return hash_pair(seed, key) < threshold;
}

// Deterministic sub-seed for a named stream, so distinct purposes never share
// hash inputs even under equal user seeds.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ (0xa0761d6478bd642fULL + stream));
}

// Uniform integer in [0, bound) derived from (seed, key); bound > 0.
inline std::uint64_t hash_below(std::uint64_t seed, std::uint64_t key,
                                std::uint64_t bound) {
  // 128-bit multiply trick maps the hash uniformly enough for sampling duty.
  unsigned __int128 wide = static_cast<unsigned __int128>(hash_pair(seed, key));
  return static_cast<std::uint64_t>((wide * bound) >> 64);
}

}  // namespace hh
