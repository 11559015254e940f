#include "eeh/axiomset.hpp"

#include <algorithm>
#include <cstdint>

#include "eeh/errors.hpp"
#include "eeh/simplex.hpp"

namespace eeh {

std::string Implication::to_string() const {
  std::string s = "({";
  bool first = true;
  for (const auto& p : premises) {
    if (!first) s += ',';
    s += p;
    first = false;
  }
  return s + "}, " + conclusion + ")";
}

namespace {

void dedupe_in_order(std::vector<Implication>& implications) {
  std::set<Implication> seen;
  std::vector<Implication> kept;
  kept.reserve(implications.size());
  for (auto& imp : implications) {
    if (seen.insert(imp).second) kept.push_back(std::move(imp));
  }
  implications = std::move(kept);
}

}  // namespace

AxiomSetInstance AxiomSetInstance::make(std::set<Sentence> sentences,
                                        std::vector<Implication> implications, int budget) {
  for (const auto& s : sentences) {
    if (!is_valid_label(s)) throw FormatError("invalid sentence token '" + s + "'");
  }
  for (std::size_t i = 0; i < implications.size(); ++i) {
    const auto& imp = implications[i];
    const auto where = "implications[" + std::to_string(i) + "]";
    if (!sentences.count(imp.conclusion)) {
      throw FormatError(where + ".conclusion: unknown sentence '" + imp.conclusion + "'");
    }
    for (const auto& p : imp.premises) {
      if (!sentences.count(p)) throw FormatError(where + ".premises: unknown sentence '" + p + "'");
    }
  }
  if (budget < 0) throw FormatError("budget: must be nonnegative");
  AxiomSetInstance a{std::move(sentences), std::move(implications), budget};
  dedupe_in_order(a.implications);
  return a;
}

std::pair<AxiomSetInstance, NormalizationReport> normalize(const AxiomSetInstance& instance) {
  AxiomSetInstance out = instance;
  NormalizationReport report;

  std::vector<Implication> kept;
  for (const auto& imp : out.implications) {
    if (imp.premises.count(imp.conclusion)) {
      report.removed_self_implications.push_back(imp);
    } else {
      kept.push_back(imp);
    }
  }
  out.implications = std::move(kept);

  for (;;) {
    std::set<Sentence> concluded;
    for (const auto& imp : out.implications) concluded.insert(imp.conclusion);
    std::vector<Sentence> forced;
    std::set_difference(out.sentences.begin(), out.sentences.end(), concluded.begin(),
                        concluded.end(), std::back_inserter(forced));
    if (forced.empty()) break;
    for (const auto& s : forced) {
      out.sentences.erase(s);
      for (auto& imp : out.implications) imp.premises.erase(s);
      report.removed_forced_axioms.push_back(s);
      --out.budget;
    }
    dedupe_in_order(out.implications);
  }

  report.budget_delta = -static_cast<int>(report.removed_forced_axioms.size());
  report.infeasible = out.budget < 0;
  return {std::move(out), std::move(report)};
}

bool is_normalized(const AxiomSetInstance& instance) {
  std::set<Sentence> concluded;
  for (const auto& imp : instance.implications) {
    if (imp.premises.count(imp.conclusion)) return false;
    concluded.insert(imp.conclusion);
  }
  return concluded == instance.sentences;
}

std::set<Sentence> closure(const AxiomSetInstance& instance, const std::set<Sentence>& seed) {
  for (const auto& s : seed) {
    if (!instance.sentences.count(s)) throw FormatError("unknown sentence '" + s + "' in seed");
  }
  std::set<Sentence> current = seed;
  for (;;) {
    std::set<Sentence> next = current;
    for (const auto& imp : instance.implications) {
      if (std::includes(current.begin(), current.end(), imp.premises.begin(),
                        imp.premises.end())) {
        next.insert(imp.conclusion);
      }
    }
    if (next == current) return current;
    current = std::move(next);
  }
}

AxiomSetSolution min_axiom_set(const AxiomSetInstance& instance) {
  const std::vector<Sentence> order(instance.sentences.begin(), instance.sentences.end());
  const std::size_t n = order.size();
  if (n > kMaxBruteForceSentences) {
    throw ResourceError("min_axiom_set: " + std::to_string(n) + " sentences exceeds the limit of " +
                        std::to_string(kMaxBruteForceSentences));
  }
  const auto index_of = [&](const Sentence& s) {
    return static_cast<std::size_t>(std::lower_bound(order.begin(), order.end(), s) -
                                    order.begin());
  };
  struct Rule {
    std::uint32_t premises;
    std::uint32_t conclusion;
  };
  std::vector<Rule> rules;
  for (const auto& imp : instance.implications) {
    std::uint32_t mask = 0;
    for (const auto& p : imp.premises) mask |= 1u << index_of(p);
    rules.push_back({mask, 1u << index_of(imp.conclusion)});
  }
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  const auto closes = [&](std::uint32_t mask) {
    for (bool grew = true; grew && mask != full;) {
      grew = false;
      for (const auto& r : rules) {
        if ((mask & r.premises) == r.premises && !(mask & r.conclusion)) {
          mask |= r.conclusion;
          grew = true;
        }
      }
    }
    return mask == full;
  };

  // Combinations of each size in lexicographic order of sorted sentences.
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      std::uint32_t mask = 0;
      for (auto i : pick) mask |= 1u << i;
      if (closes(mask)) {
        AxiomSetSolution sol{static_cast<int>(k), {}};
        for (auto i : pick) sol.witness.insert(order[i]);
        return sol;
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  // Unreachable: the full sentence set always closes.
  return {static_cast<int>(n), instance.sentences};
}

bool has_axiom_set(const AxiomSetInstance& instance, int budget) {
  return min_axiom_set(instance).size <= budget;
}

}  // namespace eeh
