#include "partmod/mullineux.hpp"

#include <string>

#include "partmod/io.hpp"

namespace partmod {

RimStrip p_rim(const Partition& la, int p) {
  if (p < 2) fail(Errc::PreconditionViolated, "p must be at least 2");
  if (la.empty()) fail(Errc::EmptyPartition, "the empty partition has no rim");

  RimStrip strip;
  const int h = la.height();
  int row = 1;
  int col = la.part(1);
  int in_group = 0;

  while (true) {
    strip.nodes.push_back({row, col});
    ++in_group;
    if (in_group == p) {
      if (row == h) break;
      ++row;
      col = la.part(row);
      in_group = 0;
      continue;
    }
    if (row == h && col == 1) break;
    if (col > 1 && la.part(row + 1) < col)
      --col;
    else
      ++row;  // the node below is present, slide down in the same column
  }

  std::vector<int> removed(h, 0);
  for (Node node : strip.nodes) ++removed[node.row - 1];
  std::vector<int> parts;
  for (int r = 1; r <= h; ++r) {
    int rest = la.part(r) - removed[r - 1];
    if (rest > 0) parts.push_back(rest);
  }
  strip.remainder = Partition(parts);  // weakly decreasing or the walk is broken
  return strip;
}

MullineuxSymbol mullineux_symbol(const Partition& la, int p) {
  if (!is_p_regular(la, p))
    fail(Errc::IrregularInput, format_partition(la) + " is not " + std::to_string(p) + "-regular");
  MullineuxSymbol symbol;
  Partition cur = la;
  while (!cur.empty()) {
    RimStrip strip = p_rim(cur, p);
    symbol.sizes.push_back(static_cast<int>(strip.nodes.size()));
    symbol.rows.push_back(cur.height());
    cur = strip.remainder;
  }
  return symbol;
}

namespace {

// All ways to grow mu to a partition of r rows by a strip of `a` nodes, at
// most p per row and at least one in every row, that p_rim removal undoes.
void grow_candidates(const Partition& mu, int a, int r, int p, int row, int left,
                     std::vector<int>& parts, std::vector<Partition>& found) {
  if (row > r) {
    if (left == 0) {
      Partition candidate(parts);
      RimStrip strip = p_rim(candidate, p);
      if (static_cast<int>(strip.nodes.size()) == a && strip.remainder == mu)
        found.push_back(candidate);
    }
    return;
  }
  int rows_after = r - row;
  for (int c = 1; c <= p; ++c) {
    int value = mu.part(row) + c;
    if (row > 1 && value > parts[row - 2]) continue;
    int rest = left - c;
    if (rest < rows_after || rest > p * rows_after) continue;
    parts.push_back(value);
    grow_candidates(mu, a, r, p, row + 1, rest, parts, found);
    parts.pop_back();
  }
}

Partition add_strip(const Partition& mu, int a, int r, int p) {
  std::vector<Partition> found;
  if (r >= mu.height() && a >= r && a <= p * r) {
    std::vector<int> parts;
    grow_candidates(mu, a, r, p, 1, a, parts, found);
  }
  if (found.empty())
    fail(Errc::NoSuchPartition, "no partition yields strip (" + std::to_string(a) + ";" +
                                    std::to_string(r) + ") over " + format_partition(mu));
  if (found.size() > 1)
    fail(Errc::InternalDefect, "ambiguous strip (" + std::to_string(a) + ";" +
                                   std::to_string(r) + ") over " + format_partition(mu));
  return found.front();
}

}  // namespace

Partition partition_from_symbol(const MullineuxSymbol& symbol, int p) {
  if (p < 2) fail(Errc::PreconditionViolated, "p must be at least 2");
  if (symbol.sizes.size() != symbol.rows.size())
    fail(Errc::PreconditionViolated, "symbol rows and sizes differ in length");
  for (std::size_t i = 0; i < symbol.columns(); ++i)
    if (symbol.sizes[i] < 1 || symbol.rows[i] < 1)
      fail(Errc::PreconditionViolated, "symbol entries must be positive");

  Partition cur;
  for (std::size_t i = symbol.columns(); i-- > 0;)
    cur = add_strip(cur, symbol.sizes[i], symbol.rows[i], p);
  if (!(mullineux_symbol(cur, p) == symbol))
    fail(Errc::NoSuchPartition, "symbol does not round-trip at " + format_partition(cur));
  return cur;
}

Partition mullineux(const Partition& la, int p) {
  if (la.empty()) return la;
  MullineuxSymbol symbol = mullineux_symbol(la, p);
  MullineuxSymbol flipped = symbol;
  for (std::size_t i = 0; i < symbol.columns(); ++i) {
    int eps = (symbol.sizes[i] % p == 0) ? 0 : 1;
    flipped.rows[i] = symbol.sizes[i] - symbol.rows[i] + eps;
  }
  Partition image = partition_from_symbol(flipped, p);
  if (!is_p_regular(image, p))
    fail(Errc::InternalDefect, "twist image " + format_partition(image) + " is irregular");
  return image;
}

bool is_mullineux_fixed(const Partition& la, int p) {
  return mullineux(la, p) == la;
}

}  // namespace partmod
