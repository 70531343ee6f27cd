#pragma once
// Brute-force reference computations used as test oracles. Everything here
// works on explicit element sets and never touches a stabilizer chain.

#include <algorithm>
#include <set>
#include <vector>

#include "classlab/permutation.hpp"

namespace oracle {

using classlab::Permutation;
using ElementSet = std::set<Permutation>;

inline ElementSet closure(const std::vector<Permutation>& gens, std::size_t degree) {
  ElementSet out{Permutation(degree)};
  std::vector<Permutation> frontier{Permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Permutation y = g * x;
        if (out.insert(y).second) next.push_back(y);
      }
    frontier.swap(next);
  }
  return out;
}

inline bool is_normal(const ElementSet& n, const ElementSet& g) {
  for (const auto& x : g)
    for (const auto& h : n)
      if (!n.count(classlab::conjugate(h, x))) return false;
  return true;
}

// Every subgroup by closing all subsets reachable as joins of cyclic subgroups.
inline std::vector<ElementSet> all_subgroups(const ElementSet& g) {
  std::size_t degree = g.begin()->degree();
  std::set<ElementSet> found;
  std::vector<ElementSet> cyclic;
  for (const auto& x : g) {
    auto c = closure({x}, degree);
    if (found.insert(c).second) cyclic.push_back(c);
  }
  std::vector<ElementSet> work(found.begin(), found.end());
  for (std::size_t i = 0; i < work.size(); ++i)
    for (const auto& c : cyclic) {
      std::vector<Permutation> gens(work[i].begin(), work[i].end());
      gens.insert(gens.end(), c.begin(), c.end());
      auto j = closure(gens, degree);
      if (found.insert(j).second) work.push_back(j);
    }
  return work;
}

inline ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
  return out;
}

}  // namespace oracle
