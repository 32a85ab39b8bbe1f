#pragma once

#include <cstdint>
#include <random>

namespace pptdata {

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Child seed for document `index` under `master`. Documents are generated
/// from independent streams so shards can be produced without coordination
/// and changing the document count never changes earlier documents.
constexpr std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master) ^ mix64(index ^ 0x6a09e667f3bcc909ULL));
}

using Rng = std::mt19937_64;

inline Rng document_rng(std::uint64_t master, std::uint64_t index) {
  return Rng(child_seed(master, index));
}

}  // namespace pptdata
