#pragma once

// Counter-based randomness. Every draw is a pure function of its key, so
// results never depend on call order or thread scheduling.

#include <cstdint>
#include <string_view>

namespace srctopics {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t hash_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
  std::uint64_t h = mix64(seed ^ 0x6a09e667f3bcc909ULL);
  h = mix64(h ^ a);
  h = mix64(h ^ (b + 0x3c6ef372fe94f82bULL));
  h = mix64(h ^ (c + 0xa54ff53a5f1d36f1ULL));
  return h;
}

// Maps 64 random bits to a double in (0, 1].
constexpr double to_unit_open_closed(std::uint64_t bits) {
  return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

// Seeded 64-bit hash over a byte string.
inline std::uint64_t hash_bytes(std::uint64_t seed, std::string_view bytes) {
  std::uint64_t h = mix64(seed ^ 0xcbf29ce484222325ULL ^ bytes.size());
  std::size_t i = 0;
  for (; i + 8 <= bytes.size(); i += 8) {
    std::uint64_t word = 0;
    for (int k = 7; k >= 0; --k) word = (word << 8) | static_cast<unsigned char>(bytes[i + k]);
    h = mix64(h ^ word);
  }
  std::uint64_t tail = 0;
  for (std::size_t k = bytes.size(); k > i; --k) tail = (tail << 8) | static_cast<unsigned char>(bytes[k - 1]);
  return mix64(h ^ tail ^ 0xff51afd7ed558ccdULL);
}

// Small sequential generator for tests and synthetic data. Not used by the
// pipeline itself, which only draws through hash_key.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  double uniform() { return to_unit_open_closed(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace srctopics
