#include "latgerm/markov.hpp"

#include <algorithm>
#include <map>

namespace latgerm {

MarkovTriple::MarkovTriple(Int a, Int b, Int c) : v_{std::move(a), std::move(b), std::move(c)} {
  if (!is_markov(v_[0], v_[1], v_[2]))
    fail("NotMarkov", "(" + v_[0].str() + "," + v_[1].str() + "," + v_[2].str() +
                          ") fails the Markov equation");
}

Int MarkovTriple::max_entry() const { return std::max({v_[0], v_[1], v_[2]}); }

std::array<Int, 3> MarkovTriple::sorted() const {
  std::array<Int, 3> s = v_;
  std::sort(s.begin(), s.end());
  return s;
}

bool is_markov(const Int& a, const Int& b, const Int& c) {
  if (a <= 0 || b <= 0 || c <= 0) fail("NonPositiveEntry", "entries must be positive");
  return a * a + b * b + c * c == 3 * a * b * c;
}

MarkovTriple mutate_triple(const MarkovTriple& t, int slot) {
  if (slot < 1 || slot > 3) fail("BadSlot", "slot must be 1, 2 or 3");
  std::array<Int, 3> v = t.values();
  std::size_t i = static_cast<std::size_t>(slot - 1);
  Int others = 1;
  for (std::size_t j = 0; j < 3; ++j)
    if (j != i) others *= v[j];
  v[i] = 3 * others - v[i];
  return MarkovTriple(v[0], v[1], v[2]);
}

std::vector<int> MarkovTree::path_to(std::size_t node) const {
  std::vector<int> slots;
  while (nodes[node].parent) {
    slots.push_back(*nodes[node].slot);
    node = *nodes[node].parent;
  }
  std::reverse(slots.begin(), slots.end());
  return slots;
}

MarkovTree markov_tree(const Int& max_entry) {
  if (max_entry < 1) fail("BadLimit", "max_entry must be at least 1");
  MarkovTree tree;
  std::map<std::array<Int, 3>, std::size_t> seen;

  MarkovTriple root(1, 1, 1);
  tree.nodes.push_back(MarkovTreeNode{root.sorted(), std::nullopt, std::nullopt, 0});
  seen.emplace(root.sorted(), 0);

  for (std::size_t head = 0; head < tree.nodes.size(); ++head) {
    const std::array<Int, 3> current = tree.nodes[head].triple;
    for (int slot = 1; slot <= 3; ++slot) {
      MarkovTriple parent(current[0], current[1], current[2]);
      std::array<Int, 3> child = mutate_triple(parent, slot).sorted();
      if (std::max({child[0], child[1], child[2]}) > max_entry) continue;
      if (seen.contains(child)) continue;
      seen.emplace(child, tree.nodes.size());
      tree.nodes.push_back(
          MarkovTreeNode{child, head, slot, tree.nodes[head].depth + 1});
    }
  }
  return tree;
}

std::vector<int> markov_path(const MarkovTriple& target) {
  // Descend: replacing the largest entry of a sorted nontrivial triple
  // strictly decreases it, terminating at (1,1,1).
  std::array<Int, 3> t = target.sorted();
  std::vector<std::array<Int, 3>> chain{t};
  while (t != std::array<Int, 3>{1, 1, 1}) {
    MarkovTriple cur(t[0], t[1], t[2]);
    std::array<Int, 3> best = mutate_triple(cur, 3).sorted();
    for (int slot = 1; slot <= 2; ++slot)
      best = std::min(best, mutate_triple(cur, slot).sorted());
    if (best >= t) fail("NotMarkov", "descent failed to decrease the triple");
    t = best;
    chain.push_back(t);
  }
  // Forward pass: recover the slot (on the sorted parent) at each step.
  std::vector<int> slots;
  for (std::size_t i = chain.size(); i-- > 1;) {
    const std::array<Int, 3>& parent = chain[i];
    const std::array<Int, 3>& child = chain[i - 1];
    MarkovTriple p(parent[0], parent[1], parent[2]);
    int found = 0;
    for (int slot = 1; slot <= 3; ++slot) {
      if (mutate_triple(p, slot).sorted() == child) {
        found = slot;
        break;
      }
    }
    if (found == 0) fail("NotMarkov", "descent chain is not a mutation chain");
    slots.push_back(found);
  }
  return slots;
}

}  // namespace latgerm
