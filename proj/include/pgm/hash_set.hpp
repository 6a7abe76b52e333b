#pragma once

#include <cstdint>
#include <vector>

#include "pgm/rng.hpp"

namespace pgm::detail {

/// Insert-only open-addressing set of 64-bit keys, linear probing.
/// The all-ones key is reserved as the empty slot marker; canonical edge
/// keys (u << 32 | v with u < v) can never take that value.
class U64Set {
 public:
  explicit U64Set(std::size_t expected_max) {
    std::size_t capacity = 16;
    while (capacity * 2 < expected_max * 3) capacity <<= 1;
    slots_.assign(capacity, kEmpty);
    mask_ = capacity - 1;
  }

  /// True if the key was newly inserted, false if already present.
  bool insert(std::uint64_t key) {
    std::size_t idx = splitmix64(key) & mask_;
    while (slots_[idx] != kEmpty) {
      if (slots_[idx] == key) return false;
      idx = (idx + 1) & mask_;
    }
    slots_[idx] = key;
    if (++size_ * 3 > slots_.size() * 2) grow();
    return true;
  }

  std::size_t size() const { return size_; }

 private:
  static constexpr std::uint64_t kEmpty = ~0ull;

  void grow() {
    std::vector<std::uint64_t> old = std::move(slots_);
    slots_.assign(old.size() * 2, kEmpty);
    mask_ = slots_.size() - 1;
    for (std::uint64_t key : old) {
      if (key == kEmpty) continue;
      std::size_t idx = splitmix64(key) & mask_;
      while (slots_[idx] != kEmpty) idx = (idx + 1) & mask_;
      slots_[idx] = key;
    }
  }

  std::vector<std::uint64_t> slots_;
  std::uint64_t mask_ = 0;
  std::size_t size_ = 0;
};

}  // namespace pgm::detail
