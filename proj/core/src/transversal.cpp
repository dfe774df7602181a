#include "setalg/transversal.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "setalg/errors.hpp"

namespace setalg {
namespace {

// Keeps only inclusion-minimal members, sorted by (cardinality, bits). A set
// meeting every minimal member meets every member.
std::vector<std::uint64_t> minimal_members(const SetFamily& family) {
  std::vector<std::uint64_t> sets;
  sets.reserve(family.size());
  for (Subset s : family.sets()) sets.push_back(s.bits());
  std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<std::uint64_t> kept;
  for (std::uint64_t s : sets) {
    const bool dominated = std::any_of(kept.begin(), kept.end(),
                                       [s](std::uint64_t k) { return (k & ~s) == 0; });
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

std::size_t packing_size(const std::vector<std::uint64_t>& parts) {
  std::uint64_t used = 0;
  std::size_t count = 0;
  for (std::uint64_t p : parts) {
    if ((p & used) == 0) {
      used |= p;
      ++count;
    }
  }
  return count;
}

class BranchAndBound {
 public:
  explicit BranchAndBound(std::vector<std::uint64_t> sets) : sets_(std::move(sets)) {}

  void run(std::uint64_t incumbent) {
    best_ = incumbent;
    best_size_ = static_cast<std::size_t>(std::popcount(incumbent));
    search(0, 0);
  }

  std::uint64_t best() const { return best_; }
  std::size_t nodes() const { return nodes_; }

 private:
  void search(std::uint64_t chosen, std::uint64_t excluded) {
    ++nodes_;
    const std::size_t depth = static_cast<std::size_t>(std::popcount(chosen));
    std::vector<std::uint64_t> open;
    std::uint64_t branch = 0;
    int branch_size = 65;
    for (std::uint64_t s : sets_) {
      if (s & chosen) continue;
      const std::uint64_t avail = s & ~excluded;
      if (avail == 0) return;
      open.push_back(avail);
      const int size = std::popcount(avail);
      if (size < branch_size) {
        branch_size = size;
        branch = avail;
      }
    }
    if (open.empty()) {
      if (depth < best_size_) {
        best_ = chosen;
        best_size_ = depth;
      }
      return;
    }
    std::stable_sort(open.begin(), open.end(), [](std::uint64_t a, std::uint64_t b) {
      return std::popcount(a) < std::popcount(b);
    });
    if (depth + packing_size(open) >= best_size_) return;

    // Branch i takes the i-th member of the smallest open set and excludes the
    // members tried before it.
    std::uint64_t tried = 0;
    for (std::uint64_t rest = branch; rest != 0; rest &= rest - 1) {
      const std::uint64_t x = rest & (~rest + 1);
      search(chosen | x, excluded | tried);
      tried |= x;
      if (depth + 1 >= best_size_) return;
    }
  }

  std::vector<std::uint64_t> sets_;
  std::uint64_t best_ = 0;
  std::size_t best_size_ = 0;
  std::size_t nodes_ = 0;
};

}  // namespace

bool is_transversal(Subset t, const SetFamily& family) {
  return std::all_of(family.sets().begin(), family.sets().end(),
                     [t](Subset s) { return s.intersects(t); });
}

bool is_minimal_transversal(Subset t, const SetFamily& family) {
  if (!is_transversal(t, family)) return false;
  for (int x : t.members()) {
    if (is_transversal(t.without(x), family)) return false;
  }
  return true;
}

Subset greedy_transversal(const SetFamily& family) {
  std::vector<Subset> open = family.sets();
  Subset chosen;
  while (!open.empty()) {
    int best_x = -1;
    std::size_t best_hits = 0;
    for (int x = 0; x < family.ground_size(); ++x) {
      const auto hits = static_cast<std::size_t>(
          std::count_if(open.begin(), open.end(), [x](Subset s) { return s.contains(x); }));
      if (hits > best_hits) {
        best_hits = hits;
        best_x = x;
      }
    }
    if (best_x < 0) throw Error("no transversal exists");
    chosen = chosen.with(best_x);
    std::erase_if(open, [best_x](Subset s) { return s.contains(best_x); });
  }
  return chosen;
}

std::vector<Subset> greedy_disjoint_subfamily(const SetFamily& family) {
  std::vector<Subset> sorted = family.sets();
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](Subset a, Subset b) { return a.size() < b.size(); });
  std::vector<Subset> picked;
  Subset used;
  for (Subset s : sorted) {
    if (!s.intersects(used)) {
      picked.push_back(s);
      used = used | s;
    }
  }
  return picked;
}

TransversalResult tau(const SetFamily& family) {
  for (Subset s : family.sets()) {
    if (s.empty()) throw Error("no transversal exists");
  }
  TransversalResult result;
  if (family.empty()) return result;

  const Subset greedy = greedy_transversal(family);
  result.stats.greedy_bound = static_cast<std::size_t>(greedy.size());
  result.stats.packing_bound = greedy_disjoint_subfamily(family).size();

  BranchAndBound solver(minimal_members(family));
  solver.run(greedy.bits());
  result.witness = Subset(solver.best());
  result.size = static_cast<std::size_t>(result.witness.size());
  result.stats.nodes = solver.nodes();

  if (!is_transversal(result.witness, family) || result.size > result.stats.greedy_bound ||
      result.size < result.stats.packing_bound) {
    throw std::logic_error("transversal search violated its certificate bounds");
  }
  return result;
}

}  // namespace setalg
