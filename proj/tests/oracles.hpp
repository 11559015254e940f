#pragma once

// Naive reference implementations, written against plain std containers and
// sharing no code with the library.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Face = std::vector<std::string>;  // sorted
using Faces = std::set<Face>;

inline Face sorted(Face f) {
  std::sort(f.begin(), f.end());
  return f;
}

/// Every nonempty subset of every facet.
inline Faces closure(const std::vector<Face>& facets) {
  Faces out;
  for (const auto& raw : facets) {
    const Face f = sorted(raw);
    const auto n = f.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Face sub;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) sub.push_back(f[i]);
      }
      out.insert(sub);
    }
  }
  return out;
}

inline std::vector<std::size_t> f_vector(const Faces& k) {
  std::vector<std::size_t> out;
  for (const auto& f : k) {
    if (out.size() < f.size()) out.resize(f.size());
    ++out[f.size() - 1];
  }
  return out;
}

inline long euler(const Faces& k) {
  long chi = 0;
  for (const auto& f : k) chi += (f.size() % 2 == 1) ? 1 : -1;
  return chi;
}

inline std::vector<Face> of_size(const Faces& k, std::size_t n) {
  std::vector<Face> out;
  for (const auto& f : k) {
    if (f.size() == n) out.push_back(f);
  }
  return out;
}

inline bool subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Faces of size n-1 lying in exactly one face of size n, with that face.
inline std::vector<std::pair<Face, Face>> free_pairs(const Faces& k, std::size_t n) {
  std::vector<std::pair<Face, Face>> out;
  const auto tops = of_size(k, n);
  for (const auto& f : of_size(k, n - 1)) {
    std::vector<Face> cof;
    for (const auto& t : tops) {
      if (subset(f, t)) cof.push_back(t);
    }
    if (cof.size() == 1) out.emplace_back(f, cof.front());
  }
  return out;
}

inline std::vector<std::string> vertices(const Faces& k) {
  std::vector<std::string> out;
  for (const auto& f : k) {
    if (f.size() == 1) out.push_back(f[0]);
  }
  return out;
}

/// Every (sigma, tau) with |tau| = n over the vertex set, tau and sigma absent
/// and every other facet of tau present. Tries all n-subsets.
inline std::vector<std::pair<Face, Face>> horns(const Faces& k, std::size_t n) {
  std::vector<std::pair<Face, Face>> out;
  const auto vs = vertices(k);
  std::vector<bool> pick(vs.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(n, vs.size())), true);
  if (vs.size() < n) return out;
  do {
    Face tau;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (pick[i]) tau.push_back(vs[i]);
    }
    if (k.count(tau)) continue;
    std::vector<Face> missing;
    for (std::size_t i = 0; i < tau.size(); ++i) {
      Face facet = tau;
      facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(i));
      if (!k.count(facet)) missing.push_back(facet);
    }
    if (missing.size() == 1) out.emplace_back(missing.front(), tau);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Collapses any free edge until none remains; returns the triangles left.
/// Uses the highest free edge first, the opposite of the library's order.
inline std::size_t greedy_leftover_triangles(Faces k) {
  for (;;) {
    auto free = free_pairs(k, 3);
    if (free.empty()) break;
    const auto& [e, t] = free.back();
    k.erase(t);
    k.erase(e);
  }
  return of_size(k, 3).size();
}

struct Imp {
  std::set<std::string> premises;
  std::string conclusion;
};

inline std::set<std::string> derive(const std::vector<Imp>& imps, std::set<std::string> known) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& imp : imps) {
      if (known.count(imp.conclusion)) continue;
      if (std::all_of(imp.premises.begin(), imp.premises.end(),
                      [&](const std::string& p) { return known.count(p) > 0; })) {
        known.insert(imp.conclusion);
        grew = true;
      }
    }
  }
  return known;
}

/// Smallest axiom set size, by trying every subset.
inline int min_axioms(const std::vector<std::string>& sentences, const std::vector<Imp>& imps) {
  const auto n = sentences.size();
  int best = static_cast<int>(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::set<std::string> seed;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) seed.insert(sentences[i]);
    }
    if (derive(imps, seed).size() == n) best = std::min(best, static_cast<int>(seed.size()));
  }
  return best;
}

}  // namespace oracle
