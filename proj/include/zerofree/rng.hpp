#pragma once

#include <array>
#include <cstdint>

#include <complex>

namespace zerofree::rng {

// Counter-based generator (Philox4x32-10). Every draw is a pure function of
// (seed, stream, counter), so entries of a sampled matrix and trials of an
// experiment can be generated in any order, or in parallel, without changing
// the result.
struct Block {
  std::uint64_t lo;
  std::uint64_t hi;
};

Block philox(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept;

// Maps a 64-bit word to [0, 1) with 53 bits of resolution.
inline double to_unit(std::uint64_t x) noexcept {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Maps a 64-bit word to (0, 1]; safe as a log() argument.
inline double to_unit_open(std::uint64_t x) noexcept {
  return static_cast<double>((x >> 11) + 1) * 0x1.0p-53;
}

// Single-call keyed draws, used for entry-indexed matrix sampling.
double keyed_unit(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept;
double keyed_gaussian(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept;
double keyed_rademacher(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept;
std::complex<double> keyed_phase(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t counter) noexcept;

// Sequential view over one (seed, stream) pair, for inherently ordered work
// such as shuffles.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t stream) noexcept : seed_(seed), stream_(stream) {}

  std::uint64_t next_u64() noexcept;
  double next_unit() noexcept { return to_unit(next_u64()); }
  // Uniform in [0, bound), bound > 0; unbiased via rejection.
  std::uint64_t next_below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  Block buf_{0, 0};
  bool have_hi_ = false;
};

}  // namespace zerofree::rng
