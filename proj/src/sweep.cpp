#include "eeh/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "eeh/reduction.hpp"
#include "eeh/search.hpp"

namespace eeh {

namespace {

std::vector<Sentence> sentence_names(int n) {
  std::vector<Sentence> out;
  for (int i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

/// All implications over `names` without self-implication, sorted.
std::vector<Implication> all_implications(const std::vector<Sentence>& names) {
  std::vector<Implication> out;
  const auto n = names.size();
  for (std::size_t c = 0; c < n; ++c) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (mask & (1u << c)) continue;
      Implication imp;
      imp.conclusion = names[c];
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) imp.premises.insert(names[i]);
      }
      out.push_back(std::move(imp));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool concludes_all(const std::vector<Implication>& imps, const std::vector<Sentence>& names) {
  return std::all_of(names.begin(), names.end(), [&](const Sentence& s) {
    return std::any_of(imps.begin(), imps.end(), [&](const Implication& i) { return i.conclusion == s; });
  });
}

void choose(const std::vector<Implication>& pool, std::size_t from, std::size_t left,
            std::vector<Implication>& picked, const std::vector<Sentence>& names,
            std::vector<AxiomSetInstance>& out) {
  if (left == 0) {
    if (concludes_all(picked, names)) {
      out.push_back(AxiomSetInstance::make({names.begin(), names.end()}, picked,
                                           static_cast<int>(names.size())));
    }
    return;
  }
  for (std::size_t i = from; i + left <= pool.size(); ++i) {
    picked.push_back(pool[i]);
    choose(pool, i + 1, left - 1, picked, names, out);
    picked.pop_back();
  }
}

SweepProbe probe(const Complex& k_complex, int k, bool ordered, Strategy strategy,
                 std::uint64_t node_limit, bool& verified) {
  SweepProbe out;
  SearchConfig cfg;
  cfg.ordered = ordered;
  cfg.expansion_dims = {3};
  cfg.max_dim = 3;
  cfg.strategy = strategy;
  cfg.node_limit = node_limit;
  bool below_ok = true;
  if (k > 0) {
    cfg.budget = k - 1;
    const auto r = expansion_height(k_complex, cfg);
    out.exhausted |= r.decided == Verdict::exhausted;
    below_ok = r.decided == Verdict::no_within_budget;
    out.detail = to_string(r.decided) + "@" + std::to_string(k - 1) + ",";
  }
  cfg.budget = k;
  const auto r = expansion_height(k_complex, cfg);
  out.exhausted |= r.decided == Verdict::exhausted;
  out.detail += to_string(r.decided) + "@" + std::to_string(k);
  if (r.decided == Verdict::yes && !verify_certificate(k_complex, r.certificate, k).accepted) {
    verified = false;
  }
  out.agrees = below_ok && r.decided == Verdict::yes;
  return out;
}

SweepRow evaluate(const AxiomSetInstance& instance, const std::string& origin,
                  const SweepOptions& options) {
  SweepRow row;
  row.origin = origin;
  row.instance = instance;
  row.oracle = min_axiom_set(instance).size;
  const auto reduced = assemble(instance);
  // Normalized instances pay nothing up front; the budget left is the oracle's.
  const int k = row.oracle - (instance.budget - reduced.budget());
  const auto& K = reduced.complex;
  row.ordered = probe(K, k, true, Strategy::interleaved_dfs, options.node_limit,
                      row.certificates_verified);
  row.unordered = probe(K, k, false, Strategy::interleaved_dfs, options.node_limit,
                        row.certificates_verified);
  if (options.prescribed) {
    row.prescribed = probe(K, k, false, Strategy::prescribed, options.node_limit,
                           row.certificates_verified);
  }
  return row;
}

}  // namespace

std::vector<AxiomSetInstance> enumerate_normalized(int max_sentences, int max_implications) {
  std::vector<AxiomSetInstance> out;
  for (int n = 1; n <= max_sentences; ++n) {
    const auto names = sentence_names(n);
    const auto pool = all_implications(names);
    std::vector<Implication> picked;
    for (int r = 1; r <= max_implications; ++r) {
      choose(pool, 0, static_cast<std::size_t>(r), picked, names, out);
    }
  }
  return out;
}

std::vector<AxiomSetInstance> random_normalized(int count, int sentences, int max_implications,
                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto names = sentence_names(sentences);
  const auto pool = all_implications(names);
  std::vector<AxiomSetInstance> out;
  while (static_cast<int>(out.size()) < count) {
    std::uniform_int_distribution<int> size_dist(sentences, std::max(sentences, max_implications));
    const auto r = static_cast<std::size_t>(size_dist(rng));
    std::vector<std::size_t> order(pool.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Implication> picked;
    for (std::size_t i = 0; i < r && i < order.size(); ++i) picked.push_back(pool[order[i]]);
    if (!concludes_all(picked, names)) continue;
    out.push_back(AxiomSetInstance::make({names.begin(), names.end()}, picked, sentences));
  }
  return out;
}

std::vector<SweepRow> run_sweep(const std::vector<AxiomSetInstance>& instances,
                                const std::vector<std::string>& origins, const SweepOptions& options) {
  std::vector<SweepRow> rows(instances.size());
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(instances.size())));
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) {
      rows[i] = evaluate(instances[i], origins[i], options);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  pool.clear();
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepOptions& options) {
  auto instances = enumerate_normalized(options.max_sentences, options.max_implications);
  std::vector<std::string> origins(instances.size(), "exhaustive");
  auto extra = random_normalized(options.random_count, options.random_sentences,
                                 options.random_max_implications, options.seed);
  instances.insert(instances.end(), extra.begin(), extra.end());
  origins.resize(instances.size(), "random");
  return run_sweep(instances, origins, options);
}

}  // namespace eeh
