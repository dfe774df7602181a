#pragma once

#include <cstddef>
#include <vector>

#include "setalg/subset.hpp"

namespace setalg {

struct SearchStats {
  std::size_t nodes = 0;          // branch-and-bound nodes expanded
  std::size_t greedy_bound = 0;   // size of the greedy transversal (upper bound)
  std::size_t packing_bound = 0;  // size of a greedy disjoint subfamily (lower bound)
};

// A minimum transversal (hitting set) of a family and how it was certified.
struct TransversalResult {
  std::size_t size = 0;
  Subset witness;
  SearchStats stats;
};

// Exact transversality: the minimum cardinality of a set meeting every member.
// The empty family has transversality 0. Throws setalg::Error("no transversal
// exists") when the family contains the empty set.
TransversalResult tau(const SetFamily& family);

bool is_transversal(Subset t, const SetFamily& family);

// t is a transversal and no t \ {x} is.
bool is_minimal_transversal(Subset t, const SetFamily& family);

// Repeatedly takes the element hitting most unhit sets (lowest index on ties).
Subset greedy_transversal(const SetFamily& family);

// Pairwise disjoint members picked greedily by increasing cardinality.
std::vector<Subset> greedy_disjoint_subfamily(const SetFamily& family);

}  // namespace setalg
