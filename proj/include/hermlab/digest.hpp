#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

namespace hermlab {

/// 128-bit content digest. Two independently seeded 64-bit mixes; used as
/// the identity of curve keys and as cache file addresses.
struct Digest {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  friend auto operator<=>(const Digest&, const Digest&) = default;
  friend bool operator==(const Digest&, const Digest&) = default;

  std::string hex() const;
  static Digest from_hex(const std::string& s);
};

class Hasher {
 public:
  Hasher() = default;
  void update(std::span<const std::uint32_t> words);
  void update(std::uint64_t word);
  void update(const std::string& bytes);
  Digest finish() const;

 private:
  void mix(std::uint64_t w);
  std::uint64_t a_ = 0x9e3779b97f4a7c15ull;
  std::uint64_t b_ = 0xc2b2ae3d27d4eb4full;
  std::uint64_t n_ = 0;
};

struct DigestHash {
  std::size_t operator()(const Digest& d) const noexcept { return static_cast<std::size_t>(d.lo ^ (d.hi * 31)); }
};

}  // namespace hermlab
