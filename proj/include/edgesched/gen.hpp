#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "edgesched/instance.hpp"

namespace edgesched {

// Deterministic 64-bit generator (splitmix64). The constants are part of the
// file-format contract: any reimplementation that reproduces this stream
// regenerates byte-identical instances from the same seed.
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // [0, 1), 53 mantissa bits
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + next_double() * (hi - lo); }

  // inclusive bounds, derived from next_double for portability
  int uniform_int(int lo, int hi) {
    const double u = next_double();
    int v = lo + static_cast<int>(u * (static_cast<double>(hi) - static_cast<double>(lo) + 1.0));
    return v > hi ? hi : v;
  }

 private:
  std::uint64_t state_;
};

enum class Profile { Table2, MonotoneRandom, IdenticalRandom };

Profile profile_from_name(const std::string& name);  // InvalidParams on unknown
std::string profile_name(Profile p);

struct GenParams {
  Profile profile = Profile::MonotoneRandom;
  int n = 0;
  int m = 0;           // forced to 2 by the table2 profile
  double deadline = 0.0;
  std::uint64_t seed = 0;
  // monotone/identical profiles: per-model-tier time range, seconds. Tier i
  // draws from [base_low * (i+1), base_low * (i+1) + width); tiers stay
  // disjoint, which keeps every column strictly increasing by model index.
  double base_low = 0.1;
  double width = 0.08;
  // accuracy range for the random profiles (sorted uniform draws)
  double acc_low = 0.3;
  double acc_high = 0.95;
  // table2 profile: probability of drawing the small and medium input sizes
  // (large takes the rest)
  double p_small = 1.0 / 3.0;
  double p_medium = 1.0 / 3.0;
};

// Same params -> same instance, bit for bit. The returned instance always
// passes validate().
Instance generate(const GenParams& params);

}  // namespace edgesched
