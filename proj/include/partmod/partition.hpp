#pragma once

#include <compare>
#include <functional>
#include <vector>

#include "partmod/errors.hpp"

namespace partmod {

// Weakly decreasing sequence of positive integers. The empty sequence is the
// empty partition. Comparison is lexicographic on the part lists.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int size() const noexcept { return size_; }
  int height() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  // 1-indexed; rows beyond the height read as 0.
  int part(int row) const noexcept {
    return (row >= 1 && row <= height()) ? parts_[row - 1] : 0;
  }

  const std::vector<int>& parts() const noexcept { return parts_; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<int> parts_;
  int size_ = 0;
};

// 1-indexed (row, column) cell of a Young diagram.
struct Node {
  int row = 0;
  int col = 0;
  friend bool operator==(const Node&, const Node&) = default;
  friend auto operator<=>(const Node&, const Node&) = default;
};

bool is_p_regular(const Partition& la, int p);

Partition conjugate(const Partition& la);

// (col - row) mod p, in [0, p).
int residue(Node node, int p);

// Per-residue node counts; entry i counts the nodes of residue i.
std::vector<int> content(const Partition& la, int p);

// Same number of nodes of each residue (equivalently, same p-block).
bool same_block(const Partition& la, const Partition& mu, int p);

// Row-ascending order for both.
std::vector<Node> removable_nodes(const Partition& la);
std::vector<Node> addable_nodes(const Partition& la);

// (ceil((n+1)/2), floor((n-1)/2)) for n >= 3.
Partition basic_spin(int n);

// All p-regular partitions of n in descending lexicographic order.
void for_each_p_regular(int n, int p, const std::function<void(const Partition&)>& fn);
std::vector<Partition> p_regular_partitions(int n, int p);

}  // namespace partmod
