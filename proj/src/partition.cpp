#include "partmod/partition.hpp"

#include <string>

namespace partmod {

namespace {

void require_characteristic(int p) {
  if (p < 2) fail(Errc::PreconditionViolated, "p must be at least 2, got " + std::to_string(p));
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      fail(Errc::NotAPartition,
           "part at index " + std::to_string(i) + " is " + std::to_string(parts_[i]) +
               ", parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      fail(Errc::NotAPartition,
           "part at index " + std::to_string(i) + " exceeds its predecessor");
    size_ += parts_[i];
  }
}

bool is_p_regular(const Partition& la, int p) {
  require_characteristic(p);
  int run = 0;
  int prev = 0;
  for (int part : la.parts()) {
    run = (part == prev) ? run + 1 : 1;
    if (run >= p) return false;
    prev = part;
  }
  return true;
}

Partition conjugate(const Partition& la) {
  std::vector<int> cols;
  cols.reserve(la.empty() ? 0 : la.part(1));
  for (int j = 1; j <= la.part(1); ++j) {
    int count = 0;
    for (int part : la.parts()) {
      if (part >= j) ++count;
    }
    cols.push_back(count);
  }
  return Partition(cols);
}

int residue(Node node, int p) {
  require_characteristic(p);
  int r = (node.col - node.row) % p;
  return r < 0 ? r + p : r;
}

std::vector<int> content(const Partition& la, int p) {
  require_characteristic(p);
  std::vector<int> counts(p, 0);
  for (int row = 1; row <= la.height(); ++row)
    for (int col = 1; col <= la.part(row); ++col) ++counts[residue({row, col}, p)];
  return counts;
}

bool same_block(const Partition& la, const Partition& mu, int p) {
  if (la.size() != mu.size())
    fail(Errc::SizeMismatch, "comparing partitions of " + std::to_string(la.size()) +
                                 " and " + std::to_string(mu.size()));
  return content(la, p) == content(mu, p);
}

std::vector<Node> removable_nodes(const Partition& la) {
  std::vector<Node> nodes;
  for (int row = 1; row <= la.height(); ++row)
    if (la.part(row) > la.part(row + 1)) nodes.push_back({row, la.part(row)});
  return nodes;
}

std::vector<Node> addable_nodes(const Partition& la) {
  std::vector<Node> nodes;
  for (int row = 1; row <= la.height() + 1; ++row)
    if (row == 1 || la.part(row) < la.part(row - 1)) nodes.push_back({row, la.part(row) + 1});
  return nodes;
}

Partition basic_spin(int n) {
  if (n < 3) fail(Errc::PreconditionViolated, "basic spin needs n >= 3, got " + std::to_string(n));
  return Partition({(n + 2) / 2, (n - 1) / 2});
}

namespace {

void enumerate_rec(int remaining, int max_part, int prev_part, int prev_run, int p,
                   std::vector<int>& acc, const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition(acc));
    return;
  }
  for (int v = std::min(remaining, max_part); v >= 1; --v) {
    int run = (v == prev_part) ? prev_run + 1 : 1;
    if (run > p - 1) continue;
    acc.push_back(v);
    enumerate_rec(remaining - v, v, v, run, p, acc, fn);
    acc.pop_back();
  }
}

}  // namespace

void for_each_p_regular(int n, int p, const std::function<void(const Partition&)>& fn) {
  require_characteristic(p);
  if (n < 0) fail(Errc::OutOfRange, "negative size " + std::to_string(n));
  std::vector<int> acc;
  enumerate_rec(n, n, 0, 0, p, acc, fn);
}

std::vector<Partition> p_regular_partitions(int n, int p) {
  std::vector<Partition> out;
  for_each_p_regular(n, p, [&](const Partition& la) { out.push_back(la); });
  return out;
}

}  // namespace partmod
