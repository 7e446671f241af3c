#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace fallalert {

// FNV-1a 64-bit. Non-cryptographic; used for provenance digests only.
inline uint64_t fnv1a(std::string_view bytes, uint64_t seed = 0xcbf29ce484222325ull) {
  uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string digest_hex(uint64_t h) {
  static const char* hexd = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hexd[h & 0xf];
    h >>= 4;
  }
  return out;
}

inline std::string digest_hex(std::string_view bytes) { return digest_hex(fnv1a(bytes)); }

// splitmix64; used to derive independent RNG streams from one seed.
inline uint64_t mix_seed(uint64_t a, uint64_t b = 0x9e3779b97f4a7c15ull) {
  uint64_t z = a + 0x9e3779b97f4a7c15ull + b * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace fallalert
