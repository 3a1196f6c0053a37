#ifndef DATAFAIR_RNG_HPP
#define DATAFAIR_RNG_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace datafair {

// Counter-based generator: the i-th output is a pure function of (key, i),
// so independent streams can be handed to parallel workers and every draw
// is reproducible from the seed alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(mix(seed ^ kKeyTweak)), counter_(0) {}

  // Derives an independent child stream; children with distinct ids do not
  // collide with each other or with the parent.
  Rng split(std::uint64_t stream_id) const {
    return Rng(raw(key_ ^ mix(stream_id ^ kSplitTweak)));
  }

  std::uint64_t next_u64() { return mix(key_ + kGamma * ++counter_); }

  // uniform on the open interval (0,1)
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal via inverse-CDF, exact function of the stream
  double normal();

  bool bernoulli(double p) { return uniform() < p; }

  // integer in [0, n)
  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(next_u64() % n);
  }

  // Fisher-Yates permutation of 0..n-1
  std::vector<std::size_t> permutation(std::size_t n);

 private:
  struct RawKey {};
  Rng(std::uint64_t key, RawKey) : key_(key), counter_(0) {}
  static Rng raw(std::uint64_t key) { return Rng(key, RawKey{}); }

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  static constexpr std::uint64_t kKeyTweak = 0x8e2f9d4b1c6a3e57ULL;
  static constexpr std::uint64_t kSplitTweak = 0xda3e39cb94b95bdbULL;

  std::uint64_t key_;
  std::uint64_t counter_;
};

}  // namespace datafair

#endif
