#include "hermlab/digest.hpp"

#include <cstdio>
#include <stdexcept>

namespace hermlab {

namespace {
std::uint64_t fmix(std::uint64_t k) {
  k ^= k >> 33;
  k *= 0xff51afd7ed558ccdull;
  k ^= k >> 33;
  k *= 0xc4ceb9fe1a85ec53ull;
  k ^= k >> 33;
  return k;
}
}  // namespace

void Hasher::mix(std::uint64_t w) {
  a_ = fmix(a_ ^ (w + 0x9e3779b97f4a7c15ull + (a_ << 6) + (a_ >> 2)));
  b_ = fmix((b_ * 0x100000001b3ull) ^ (w * 0x87c37b91114253d5ull) ^ (b_ >> 29));
  ++n_;
}

void Hasher::update(std::span<const std::uint32_t> words) {
  mix(0xabcdef ^ words.size());
  for (auto w : words) mix(w);
}

void Hasher::update(std::uint64_t word) { mix(word); }

void Hasher::update(const std::string& bytes) {
  mix(0x5151 ^ bytes.size());
  for (unsigned char c : bytes) mix(c);
}

Digest Hasher::finish() const { return Digest{fmix(a_ ^ n_), fmix(b_ + n_ * 0x2545f4914f6cdd1dull)}; }

std::string Digest::hex() const {
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(hi),
                static_cast<unsigned long long>(lo));
  return buf;
}

Digest Digest::from_hex(const std::string& s) {
  if (s.size() != 32) throw std::invalid_argument("digest hex must be 32 characters");
  Digest d;
  d.hi = std::stoull(s.substr(0, 16), nullptr, 16);
  d.lo = std::stoull(s.substr(16), nullptr, 16);
  return d;
}

}  // namespace hermlab
