#pragma once

// Deterministic corpus of knot-closure braid words, used for cross-checking
// the Seifert-surface path against the Burau path.

#include "sequiv/braid_closure.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace sequiv {

inline constexpr std::uint64_t default_corpus_seed = 20011005ULL;

struct CorpusOptions {
  std::size_t max_strands = 4; ///< words use 2..max_strands strands
  std::size_t max_length = 12;
  std::size_t count = 1000;
  std::uint64_t seed = default_corpus_seed;
};

/// Distinct random braid words whose closure is a knot, in generation order.
/// Draws come from a std::mt19937_64 seeded with options.seed, so the output
/// depends only on the options.
inline std::vector<ArtinBraidWord> generate_corpus(const CorpusOptions &options) {
  if (options.max_strands < 2)
    throw precondition_error("generate_corpus: need at least 2 strands");
  if (options.max_length < options.max_strands - 1)
    throw precondition_error("generate_corpus: max length too short for a knot closure");
  std::mt19937_64 rng(options.seed);
  // Distributions are hand-rolled so the sequence is identical across standard libraries.
  auto uniform = [&](std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); };

  std::set<std::pair<std::size_t, std::vector<int>>> seen;
  std::vector<ArtinBraidWord> out;
  const std::size_t attempts_cap = options.count * 1000 + 10000;
  for (std::size_t attempt = 0; out.size() < options.count && attempt < attempts_cap; ++attempt) {
    const std::size_t n = uniform(2, options.max_strands);
    const std::size_t len = uniform(n - 1, options.max_length);
    std::vector<int> letters;
    for (std::size_t k = 0; k < len; ++k) {
      const int gen = static_cast<int>(uniform(1, n - 1));
      letters.push_back(uniform(0, 1) ? gen : -gen);
    }
    ArtinBraidWord w(n, letters);
    if (!is_knot_closure(w))
      continue;
    if (seen.emplace(n, std::move(letters)).second)
      out.push_back(std::move(w));
  }
  return out;
}

} // namespace sequiv
