#pragma once

#include <cstddef>
#include <vector>

#include "partmod/partition.hpp"

namespace partmod {

struct RimStrip {
  std::vector<Node> nodes;
  Partition remainder;
};

// Rim walk from (1, la_1) toward (h, 1), stepping left when the node below is
// absent and down otherwise. Nodes are taken in groups of p; when a group
// fills with its last node in row r, the walk restarts at the first rim node
// of row r+1, skipping whatever is left of row r. The final group may be
// short.
RimStrip p_rim(const Partition& la, int p);

// Column i records the strip removed from the i-th stage: sizes[i] nodes from
// a stage of rows[i] rows.
struct MullineuxSymbol {
  std::vector<int> sizes;
  std::vector<int> rows;
  std::size_t columns() const { return sizes.size(); }
  friend bool operator==(const MullineuxSymbol&, const MullineuxSymbol&) = default;
};

MullineuxSymbol mullineux_symbol(const Partition& la, int p);

// Rebuilds the partition column by column, innermost first, searching the
// candidate strips and verifying each reconstruction by re-removal.
Partition partition_from_symbol(const MullineuxSymbol& symbol, int p);

// Sign twist on labels: flip each column's row count to
// sizes[i] - rows[i] + (p divides sizes[i] ? 0 : 1) and rebuild.
Partition mullineux(const Partition& la, int p);

bool is_mullineux_fixed(const Partition& la, int p);

}  // namespace partmod
