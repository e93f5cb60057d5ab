#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partmod/alternating.hpp"
#include "partmod/partition.hpp"

namespace partmod {

enum class Verdict { Trivial, NotIrreducible, Irreducible, BasicSpinOpen };

const char* verdict_name(Verdict v);

enum class SpinSubcase { SplitNonSplit, BothSplit };

// Necessary-condition report for tensor products involving the basic spin
// label at p = 2, where the classification is not settled. passes means the
// normal-node bound holds, so the pair stays open; otherwise the product is
// known reducible.
struct BasicSpinReport {
  SpinSubcase subcase = SpinSubcase::SplitNonSplit;
  Partition non_spin_factor;
  int normal_node_count = 0;
  int bound = 0;
  bool passes = false;
  int product_height_bound = 0;  // any irreducible product has h <= this
  int product_height_floor = 0;  // and h >= ceil(h(non_spin_factor)/2)
};

struct Classification {
  Verdict verdict = Verdict::NotIrreducible;
  std::optional<AltLabel> product;
  std::optional<Partition> mullineux_partner;
  std::vector<std::string> citations;
  std::optional<BasicSpinReport> report;
};

// Product label for a split factor with a unique normal node tensored with
// the natural-module label: remove the top removable node, add the
// second-lowest addable node. Pure node combinatorics; the result must stay
// p-regular.
Partition case_i_product(const Partition& la, int p);

// (n/2 - j, n/2 - j - 1, j + 1, j) for n = 2 mod 4, dropping a trailing zero.
// Every member splits at p = 2.
Partition char2_exceptional_family(int n, int j);

Classification classify(int p, int n, const AltLabel& lhs, const AltLabel& rhs);

// All labels for rank n in descending lexicographic partition order, Plus
// before Minus, one canonical label per non-split twist pair.
std::vector<AltLabel> all_labels(int p, int n);

struct ScanRow {
  AltLabel lhs;
  AltLabel rhs;
  Classification result;
};

// Every unordered pair of labels, in index order over all_labels.
std::vector<ScanRow> classify_all(int p, int n, int jobs = 1);

}  // namespace partmod
