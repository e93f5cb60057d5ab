#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "partmod/partition.hpp"

namespace partmod {

struct SignatureEntry {
  Node node;
  char sign = '+';  // '+' addable, '-' removable
  bool survives = false;
};

// Reduced signature for one residue. The addable and removable nodes of that
// residue are listed top row to bottom row; a '+' immediately above a '-' is
// cancelled, repeatedly, until the survivors read '-' ... '-' '+' ... '+'.
// Surviving '-' nodes are normal (epsilon counts them, the lowest is good);
// surviving '+' nodes are conormal (phi counts them, the highest is cogood).
struct SignatureReport {
  int residue = 0;
  std::vector<SignatureEntry> sequence;
  int epsilon = 0;
  int phi = 0;
  std::optional<Node> good;
  std::optional<Node> cogood;

  std::vector<Node> normal_nodes() const;
  std::vector<Node> conormal_nodes() const;
};

SignatureReport signature(const Partition& la, int p, int res);

// Totals over all residues.
int normal_count(const Partition& la, int p);
int conormal_count(const Partition& la, int p);

// Remove r good nodes of the given residue, one at a time.
Partition remove_good(const Partition& la, int p, int res, int r = 1);

// Add r cogood nodes of the given residue, one at a time.
Partition add_cogood(const Partition& la, int p, int res, int r = 1);

// Exactly one normal node. The closed form is p = 2: all parts share one
// parity; p >= 3: with la = (a_1^{b_1}, ..., a_m^{b_m}) in exponent form,
// a_i - a_{i+1} + b_i + b_{i+1} = 0 mod p for every i < m. is_js computes the
// closed form and cross-checks it against the signature count.
bool is_js(const Partition& la, int p);
bool is_js_closed_form(const Partition& la, int p);
bool is_js_by_signature(const Partition& la, int p);

// Number of normal nodes of res(a)'s residue in rows <= row(a). When la
// without a is p-regular this is the multiplicity of that smaller module in
// the restriction's residue-i layer.
int branching_multiplicity(const Partition& la, int p, Node a);

// Restriction of a two-row module one rank down, as labelled multiplicities.
// For la = (n-k, k) write n-2k in base p as digits s_0, s_1, ...; t is the
// first position with s_t < p-1 and must be >= 1; delta = 1 iff s_t < p-2.
struct TwoRowRestriction {
  Partition source;
  int p = 0;
  std::vector<int> digits;  // s_0 .. s_t
  int t = 0;
  int delta = 0;
  std::vector<std::pair<Partition, int>> terms;
};

TwoRowRestriction two_row_restriction(const Partition& la, int p);

}  // namespace partmod
