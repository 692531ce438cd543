#include "zerofree/rng.hpp"

#include <cmath>
#include <numbers>

namespace zerofree::rng {

namespace {

struct State {
  std::uint32_t c[4];
  std::uint32_t k[2];
};

inline void philox_round(State& s) noexcept {
  const std::uint64_t p0 = 0xD2511F53ull * s.c[0];
  const std::uint64_t p1 = 0xCD9E8D57ull * s.c[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  const std::uint32_t c1 = s.c[1];
  const std::uint32_t c3 = s.c[3];
  s.c[0] = hi1 ^ c1 ^ s.k[0];
  s.c[1] = lo1;
  s.c[2] = hi0 ^ c3 ^ s.k[1];
  s.c[3] = lo0;
  s.k[0] += 0x9E3779B9u;
  s.k[1] += 0xBB67AE85u;
}

}  // namespace

Block philox(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept {
  State s{{static_cast<std::uint32_t>(counter), static_cast<std::uint32_t>(counter >> 32),
           static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)},
          {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}};
  for (int r = 0; r < 10; ++r) philox_round(s);
  return Block{(static_cast<std::uint64_t>(s.c[1]) << 32) | s.c[0],
               (static_cast<std::uint64_t>(s.c[3]) << 32) | s.c[2]};
}

double keyed_unit(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept {
  return to_unit(philox(seed, stream, counter).lo);
}

double keyed_gaussian(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept {
  // Box-Muller; rejection-free, so one counter maps to one variate.
  const Block b = philox(seed, stream, counter);
  const double u1 = to_unit_open(b.lo);
  const double u2 = to_unit(b.hi);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double keyed_rademacher(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept {
  return (philox(seed, stream, counter).lo & 1u) ? 1.0 : -1.0;
}

std::complex<double> keyed_phase(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t counter) noexcept {
  const double theta = 2.0 * std::numbers::pi * to_unit(philox(seed, stream, counter).lo);
  return {std::cos(theta), std::sin(theta)};
}

std::uint64_t Stream::next_u64() noexcept {
  if (have_hi_) {
    have_hi_ = false;
    return buf_.hi;
  }
  buf_ = philox(seed_, stream_, counter_++);
  have_hi_ = true;
  return buf_.lo;
}

std::uint64_t Stream::next_below(std::uint64_t bound) noexcept {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = next_u64();
    if (x >= threshold) return x % bound;
  }
}

}  // namespace zerofree::rng
