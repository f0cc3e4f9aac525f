#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "latgerm/numeric.hpp"

namespace latgerm {

// Positive integers with a^2 + b^2 + c^2 = 3abc. Construction validates.
class MarkovTriple {
 public:
  MarkovTriple(Int a, Int b, Int c);

  const std::array<Int, 3>& values() const noexcept { return v_; }
  const Int& operator[](std::size_t i) const { return v_[i]; }
  Int max_entry() const;
  std::array<Int, 3> sorted() const;

  friend bool operator==(const MarkovTriple& x, const MarkovTriple& y) { return x.v_ == y.v_; }

 private:
  std::array<Int, 3> v_;
};

bool is_markov(const Int& a, const Int& b, const Int& c);

// Replace the slot-th entry (1-based) by 3 * (product of the others) - it.
// An involution per slot.
MarkovTriple mutate_triple(const MarkovTriple& t, int slot);

struct MarkovTreeNode {
  std::array<Int, 3> triple;         // ascending normal form
  std::optional<std::size_t> parent;
  std::optional<int> slot;           // mutation slot applied to the parent's
                                     // sorted triple (1-based)
  std::size_t depth = 0;
};

struct MarkovTree {
  std::vector<MarkovTreeNode> nodes;  // breadth-first from (1,1,1)

  // Slots along the unique tree path from the root to a node.
  std::vector<int> path_to(std::size_t node) const;
};

// Breadth-first expansion from (1,1,1) under per-slot mutation, pruning
// children whose largest entry exceeds max_entry; triples are deduplicated
// up to permutation and listed in ascending normal form, in a fixed
// deterministic order.
MarkovTree markov_tree(const Int& max_entry);

// Slot walk from (1,1,1) reaching the (sorted) target triple, built by the
// classical descent that always replaces the largest entry. Throws
// NotMarkov when the target fails the defining equation.
std::vector<int> markov_path(const MarkovTriple& target);

}  // namespace latgerm
