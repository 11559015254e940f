#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eeh/axiomset.hpp"

namespace eeh {

/// Every normalized instance over sentences "a", "b", ... (1 to
/// max_sentences of them) with 1 to max_implications distinct implications,
/// implications in sorted order. Budgets are set to the sentence count.
std::vector<AxiomSetInstance> enumerate_normalized(int max_sentences, int max_implications);

/// `count` random normalized instances over `sentences` sentences with
/// between `sentences` and `max_implications` implications. Deterministic
/// in `seed`.
std::vector<AxiomSetInstance> random_normalized(int count, int sentences, int max_implications,
                                                std::uint64_t seed);

struct SweepOptions {
  int max_sentences = 3;
  int max_implications = 4;
  int random_count = 100;
  int random_sentences = 4;
  int random_max_implications = 6;
  std::uint64_t seed = 1;
  bool prescribed = false;  ///< also run the prescribed strategy
  std::uint64_t node_limit = 5'000'000;
  unsigned threads = 0;     ///< 0 = hardware concurrency
};

/// Minimal 3-expansion budget found by one search, probing k-1 and k only.
struct SweepProbe {
  bool agrees = false;     ///< no at k-1 (when k > 0) and yes at k
  bool exhausted = false;
  std::string detail;      ///< verdicts as "no@k-1,yes@k"
};

struct SweepRow {
  std::string origin;  ///< "exhaustive" or "random"
  AxiomSetInstance instance;
  int oracle = 0;      ///< min_axiom_set size
  SweepProbe ordered;
  SweepProbe unordered;
  std::optional<SweepProbe> prescribed;
  bool certificates_verified = true;

  bool pass() const {
    return ordered.agrees && unordered.agrees && (!prescribed || prescribed->agrees) &&
           certificates_verified;
  }
};

/// For each instance, compares min_axiom_set with three_expansion_height of
/// the assembled complex at budgets k-1 and k. Rows come back in input
/// order whatever the thread count.
std::vector<SweepRow> run_sweep(const std::vector<AxiomSetInstance>& instances,
                                const std::vector<std::string>& origins, const SweepOptions& options);

/// Exhaustive instances followed by the random ones.
std::vector<SweepRow> run_sweep(const SweepOptions& options);

}  // namespace eeh
