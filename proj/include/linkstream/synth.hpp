#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "linkstream/link_stream.hpp"

namespace linkstream {

enum class GenMode { discrete, interval };

// Erdos-Renyi pair selection with random link times.
//   discrete: one instant drawn from {0, ..., slots - 1} per kept pair
//   interval: begin ~ U[0, horizon], duration ~ U[0, horizon - begin]
struct GenSpec {
  std::size_t n = 10;
  double p = 0.7;
  GenMode mode = GenMode::discrete;
  std::uint32_t slots = 8;
  Time horizon = 10;
  std::uint64_t seed = 42;
};

// Deterministic across platforms: the engine is fully specified by the
// standard and the two draws below avoid the implementation-defined
// std::*_distribution classes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) from the top 53 bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// Raw links before normalization, in generation order.
std::vector<IntervalLink> generate_links(const GenSpec& spec);

// Throws PreconditionError when p is outside [0, 1] or n == 0.
LinkStream gen_discrete(GenSpec spec);
LinkStream gen_interval(GenSpec spec);
LinkStream generate(const GenSpec& spec);

}  // namespace linkstream
