#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "partmod/partition.hpp"

namespace partmod {

// Filling of a Young diagram, rows_[i] listing row i+1 left to right.
using Tableau = std::vector<std::vector<int>>;

// Hook length count of standard tableaux.
std::uint64_t syt_count(const Partition& la);

// All standard tableaux, entries 1..n increasing along rows and columns.
// Subject to the oracle size cap.
std::vector<Tableau> standard_tableaux(const Partition& la);

// Row sets of a tableau, each row sorted.
struct Tabloid {
  std::vector<std::vector<int>> rows;
  friend bool operator==(const Tabloid&, const Tabloid&) = default;
  friend auto operator<=>(const Tabloid&, const Tabloid&) = default;
};

Tabloid tabloid_of(const Tableau& t);

// Signed column-stabilizer orbit sum, coefficients reduced mod p.
std::map<Tabloid, int> polytabloid(const Tableau& t, int p);

struct GramCertificate {
  Partition partition;
  int p = 0;
  std::uint64_t syt = 0;
  long rank = 0;  // rank over F_p of the standard polytabloid Gram matrix
};

// The rank equals the dimension of the head of the corresponding module, so
// this is an independent dimension oracle for p-regular labels.
GramCertificate gram_rank(const Partition& la, int p);

// Checks the two-row restriction certificate against Gram ranks one rank down.
bool verify_two_row(const Partition& la, int p);

// Checks the dimension identity behind an Irreducible verdict for la tensored
// with the natural-module label (or the rank-6 double-split identity).
bool verify_case_i(const Partition& la, int p);

// Largest n the oracle accepts; default 11, override via PARTMOD_ORACLE_CAP
// or set_oracle_cap.
int oracle_cap();
void set_oracle_cap(int cap);

}  // namespace partmod
