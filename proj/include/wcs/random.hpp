#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace wcs {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Folds the words left to right through splitmix64.
inline std::uint64_t derive_seed(std::initializer_list<std::uint64_t> words) {
  std::uint64_t h = 0x6a09e667f3bcc908ULL;
  for (std::uint64_t w : words) h = splitmix64(h ^ splitmix64(w));
  return h;
}

/// Stream tags for per-trial seeds.
enum class Stream : std::uint64_t {
  weights = 1,
  signal = 2,
  matrix = 3,
  noise = 4,
  prior_support = 5,
};

/// Seed identifying one trial; every random stream of the trial derives from it.
inline std::uint64_t trial_base_seed(std::uint64_t master, std::uint64_t row, std::uint64_t col,
                                     std::uint64_t trial) {
  return derive_seed({master, row, col, trial});
}

inline std::uint64_t stream_seed(std::uint64_t base, Stream tag) {
  return derive_seed({base, static_cast<std::uint64_t>(tag)});
}

inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t row, std::uint64_t col,
                                std::uint64_t trial, Stream tag) {
  return stream_seed(trial_base_seed(master, row, col, trial), tag);
}

}  // namespace wcs
