#pragma once

// Fixed, seeded corpus of small homogeneous ideals used by the tests, the
// acceptance suite and the benchmarks.

#include <cstdint>
#include <string>
#include <vector>

#include "golod/ideal.hpp"

namespace golod {

inline constexpr std::uint64_t kCorpusSeed = 20240611;

struct CorpusEntry {
  std::string name;
  /// Where the entry comes from, in one line.
  std::string provenance;
  Ideal ideal;
  bool monomial = false;
};

/// Standard-graded rings shared by corpus entries with the same number of
/// variables, so that entries of equal size can be combined.
RingPtr corpus_ring(std::size_t n);

/// Deterministic for a given seed. Random entries draw from std::mt19937_64
/// through plain modular reduction, so they are identical across platforms.
std::vector<CorpusEntry> corpus_builders(std::uint64_t seed = kCorpusSeed);

/// Throws DomainError for an unknown name.
CorpusEntry corpus_entry(const std::string& name, std::uint64_t seed = kCorpusSeed);

}  // namespace golod
