#pragma once

#include <cstddef>
#include <vector>

namespace hypermaj {

using IndexSet = std::vector<std::size_t>;

// Partition of {0..n-1} into disjoint nonempty blocks. The constructor
// validates coverage and disjointness (DomainError otherwise) and keeps
// blocks in the order given, each block sorted ascending.
class Partition {
 public:
  Partition(std::size_t n, std::vector<IndexSet> blocks);

  std::size_t n() const { return n_; }
  const std::vector<IndexSet>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  // block_of()[i] = index of the block containing element i.
  const std::vector<std::size_t>& block_of() const { return block_of_; }

  static Partition singletons(std::size_t n);
  static Partition one_block(std::size_t n);

 private:
  std::size_t n_ = 0;
  std::vector<IndexSet> blocks_;
  std::vector<std::size_t> block_of_;
};

// All set partitions of {0..n-1}, enumerated by restricted growth
// strings in lexicographic order (Bell(n) results; n <= 10 is sane).
std::vector<Partition> all_partitions(std::size_t n);

// True iff fine refines coarse: every block of fine lies inside a single
// block of coarse. Both must partition the same ground set.
bool refines(const Partition& fine, const Partition& coarse);

}  // namespace hypermaj
