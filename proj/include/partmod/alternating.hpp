#pragma once

#include <compare>
#include <string>
#include <vector>

#include "partmod/partition.hpp"

namespace partmod {

// Whole labels one irreducible; Plus/Minus label the two halves when the
// restriction to the index-two subgroup splits.
enum class Variant { Whole, Plus, Minus };

const char* variant_name(Variant v);

struct AltLabel {
  Partition partition;
  Variant variant = Variant::Whole;
  friend bool operator==(const AltLabel&, const AltLabel&) = default;
};

// Splitting test: p = 2 uses the pairwise parts criterion
// (la_{2i-1} - la_{2i} <= 2 and la_{2i-1} + la_{2i} != 2 mod 4 for all i);
// p >= 3 asks whether la is fixed by the sign twist.
bool splits(const Partition& la, int p);

// Image of the one-row partition under the sign twist: the label of the
// one-dimensional sign representation.
Partition sign_label(int n, int p);

bool is_dim_one(const Partition& la, int p);

// For p >= 3 a non-split la and its sign twist label the same restriction;
// the lexicographically larger of the two is the canonical representative.
Partition canonical_partition(const Partition& la, int p);

// Validates the variant against the splitting test and canonicalizes the
// partition. Throws VariantInconsistent on a mismatch.
AltLabel make_label(const Partition& la, int p, Variant variant);

// The labels la contributes: {Plus, Minus} if it splits, else one Whole label.
std::vector<AltLabel> alt_labels(const Partition& la, int p);

struct DiagnosticClause {
  std::string citation;
  std::string description;
  bool pass = false;
};

struct SplitJsReport {
  std::vector<DiagnosticClause> clauses;
  bool all_pass = false;
};

// Necessary conditions satisfied by a split partition with a unique normal
// node. Precondition: la splits and is JS.
SplitJsReport split_js_diagnostics(const Partition& la, int p);

}  // namespace partmod
