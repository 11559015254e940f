#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace eeh {

using Sentence = std::string;

/// (premises, conclusion): the conclusion follows once every premise holds.
struct Implication {
  std::set<Sentence> premises;
  Sentence conclusion;

  std::string to_string() const;
  auto operator<=>(const Implication&) const = default;
  bool operator==(const Implication&) const = default;
};

/// Sentences, implications in a fixed order, and an axiom budget.
struct AxiomSetInstance {
  std::set<Sentence> sentences;
  std::vector<Implication> implications;
  int budget = 0;

  /// Validates tokens and budget and drops repeated implications, keeping
  /// the first occurrence. Throws FormatError.
  static AxiomSetInstance make(std::set<Sentence> sentences, std::vector<Implication> implications,
                               int budget);

  bool operator==(const AxiomSetInstance&) const = default;
};

struct NormalizationReport {
  std::vector<Sentence> removed_forced_axioms;
  std::vector<Implication> removed_self_implications;
  int budget_delta = 0;  ///< always -removed_forced_axioms.size()
  bool infeasible = false;
};

/// Drops implications whose conclusion is among their premises, then removes
/// every sentence that no implication concludes (it has to be an axiom),
/// charging one unit of budget each, until every remaining sentence is the
/// conclusion of some implication. The decision is unchanged once the removed
/// sentences are counted.
std::pair<AxiomSetInstance, NormalizationReport> normalize(const AxiomSetInstance& instance);

/// Every sentence is concluded by some implication and no implication
/// concludes one of its own premises.
bool is_normalized(const AxiomSetInstance& instance);

/// Least superset of `seed` closed under the implications. Throws
/// FormatError if `seed` names an unknown sentence.
std::set<Sentence> closure(const AxiomSetInstance& instance, const std::set<Sentence>& seed);

struct AxiomSetSolution {
  int size = 0;
  std::set<Sentence> witness;
};

/// Smallest axiom set by exhaustive enumeration in increasing size; among
/// equal sizes the lexicographically first combination wins. Throws
/// ResourceError above kMaxBruteForceSentences sentences.
AxiomSetSolution min_axiom_set(const AxiomSetInstance& instance);

inline constexpr std::size_t kMaxBruteForceSentences = 20;

/// min_axiom_set(instance).size <= budget
bool has_axiom_set(const AxiomSetInstance& instance, int budget);

}  // namespace eeh
