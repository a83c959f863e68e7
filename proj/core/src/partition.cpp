#include "hypermaj/partition.hpp"

#include <algorithm>

#include "hypermaj/errors.hpp"

namespace hypermaj {

Partition::Partition(std::size_t n, std::vector<IndexSet> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n_ == 0) throw DomainError("partition: ground set must be nonempty");
  block_of_.assign(n_, n_);  // n_ marks "unassigned"
  std::size_t covered = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    IndexSet& block = blocks_[b];
    if (block.empty()) throw DomainError("partition: empty block");
    std::sort(block.begin(), block.end());
    for (std::size_t i : block) {
      if (i >= n_) throw DomainError("partition: index out of range");
      if (block_of_[i] != n_) throw DomainError("partition: index appears twice");
      block_of_[i] = b;
      ++covered;
    }
  }
  if (covered != n_) throw DomainError("partition: blocks do not cover the ground set");
}

Partition Partition::singletons(std::size_t n) {
  std::vector<IndexSet> blocks(n);
  for (std::size_t i = 0; i < n; ++i) blocks[i] = {i};
  return Partition(n, std::move(blocks));
}

Partition Partition::one_block(std::size_t n) {
  IndexSet all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return Partition(n, {std::move(all)});
}

std::vector<Partition> all_partitions(std::size_t n) {
  if (n == 0) throw DomainError("all_partitions: ground set must be nonempty");
  std::vector<Partition> out;
  // Restricted growth strings: g[0] = 0 and g[i] <= 1 + max(g[0..i-1]).
  std::vector<std::size_t> g(n, 0);
  while (true) {
    const std::size_t m = 1 + *std::max_element(g.begin(), g.end());
    std::vector<IndexSet> blocks(m);
    for (std::size_t i = 0; i < n; ++i) blocks[g[i]].push_back(i);
    out.emplace_back(n, std::move(blocks));

    std::size_t i = n;
    while (i-- > 1) {
      std::size_t cap = 0;
      for (std::size_t j = 0; j < i; ++j) cap = std::max(cap, g[j]);
      if (g[i] <= cap) {
        ++g[i];
        std::fill(g.begin() + static_cast<std::ptrdiff_t>(i) + 1, g.end(), 0);
        break;
      }
      if (i == 1) return out;
    }
    if (n == 1) return out;
  }
}

bool refines(const Partition& fine, const Partition& coarse) {
  if (fine.n() != coarse.n()) return false;
  for (const IndexSet& block : fine.blocks()) {
    const std::size_t home = coarse.block_of()[block.front()];
    for (std::size_t i : block)
      if (coarse.block_of()[i] != home) return false;
  }
  return true;
}

}  // namespace hypermaj
