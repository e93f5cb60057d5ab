#include "partmod/specht.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <string>
#include <unordered_map>

#include "partmod/alternating.hpp"
#include "partmod/branching.hpp"
#include "partmod/classifier.hpp"
#include "partmod/io.hpp"

namespace partmod {

namespace {

std::atomic<int> cap_override{0};

int env_cap() {
  if (const char* text = std::getenv("PARTMOD_ORACLE_CAP")) {
    int value = std::atoi(text);
    if (value > 0) return value;
  }
  return 11;
}

void require_cap(const Partition& la) {
  if (la.size() > oracle_cap())
    fail(Errc::TooLarge, format_partition(la) + " exceeds the oracle cap of " +
                             std::to_string(oracle_cap()) + " nodes");
}

int mod_p(long long value, int p) {
  int r = static_cast<int>(value % p);
  return r < 0 ? r + p : r;
}

void require_prime(int p) {
  bool prime = p >= 2;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime)
    fail(Errc::PreconditionViolated,
         "field arithmetic needs a prime modulus, got " + std::to_string(p));
}

}  // namespace

int oracle_cap() {
  int value = cap_override.load();
  return value > 0 ? value : env_cap();
}

void set_oracle_cap(int cap) {
  if (cap < 1) fail(Errc::OutOfRange, "cap must be positive");
  cap_override.store(cap);
}

std::uint64_t syt_count(const Partition& la) {
  if (la.size() > 20) fail(Errc::TooLarge, "hook count only safe in 64 bits up to 20 nodes");
  if (la.empty()) return 1;
  Partition conj = conjugate(la);
  std::uint64_t factorial = 1;
  for (int k = 2; k <= la.size(); ++k) factorial *= k;
  std::uint64_t hooks = 1;
  for (int r = 1; r <= la.height(); ++r)
    for (int c = 1; c <= la.part(r); ++c)
      hooks *= static_cast<std::uint64_t>(la.part(r) - c + conj.part(c) - r + 1);
  return factorial / hooks;
}

namespace {

void tableaux_rec(const Partition& la, std::vector<int>& filled, int next, Tableau& acc,
                  std::vector<Tableau>& out) {
  if (next > la.size()) {
    out.push_back(acc);
    return;
  }
  for (int r = 1; r <= la.height(); ++r) {
    if (filled[r - 1] >= la.part(r)) continue;
    if (r > 1 && filled[r - 2] <= filled[r - 1]) continue;  // column would decrease
    acc[r - 1].push_back(next);
    ++filled[r - 1];
    tableaux_rec(la, filled, next + 1, acc, out);
    --filled[r - 1];
    acc[r - 1].pop_back();
  }
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& la) {
  require_cap(la);
  std::vector<Tableau> out;
  Tableau acc(la.height());
  std::vector<int> filled(la.height(), 0);
  tableaux_rec(la, filled, 1, acc, out);
  return out;
}

Tabloid tabloid_of(const Tableau& t) {
  Tabloid tab;
  tab.rows.reserve(t.size());
  for (const auto& row : t) {
    auto sorted = row;
    std::sort(sorted.begin(), sorted.end());
    tab.rows.push_back(std::move(sorted));
  }
  return tab;
}

namespace {

// Tabloids of a fixed shape are encoded as the row index of each entry.
using TabloidKey = std::string;

struct ColumnOrbit {
  std::vector<int> entries;           // entries down one column
  std::vector<std::vector<int>> perms;  // images: entry i goes to row perms[k][i]
  std::vector<int> signs;
};

int perm_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

std::vector<ColumnOrbit> column_orbits(const Tableau& t) {
  std::size_t width = 0;
  for (const auto& row : t) width = std::max(width, row.size());
  std::vector<ColumnOrbit> orbits;
  for (std::size_t c = 0; c < width; ++c) {
    ColumnOrbit orbit;
    std::vector<int> rows;
    for (std::size_t r = 0; r < t.size(); ++r)
      if (c < t[r].size()) {
        orbit.entries.push_back(t[r][c]);
        rows.push_back(static_cast<int>(r));
      }
    std::vector<int> perm = rows;
    std::sort(perm.begin(), perm.end());
    do {
      orbit.perms.push_back(perm);
      orbit.signs.push_back(perm_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

void orbit_rec(const std::vector<ColumnOrbit>& orbits, std::size_t idx, TabloidKey& key,
               int sign, int p, std::unordered_map<TabloidKey, int>& coeffs) {
  if (idx == orbits.size()) {
    int& slot = coeffs[key];
    slot = mod_p(slot + sign, p);
    return;
  }
  const ColumnOrbit& orbit = orbits[idx];
  for (std::size_t k = 0; k < orbit.perms.size(); ++k) {
    for (std::size_t i = 0; i < orbit.entries.size(); ++i)
      key[orbit.entries[i] - 1] = static_cast<char>(orbit.perms[k][i]);
    orbit_rec(orbits, idx + 1, key, sign * orbit.signs[k], p, coeffs);
  }
}

std::unordered_map<TabloidKey, int> polytabloid_keys(const Tableau& t, int p, int n) {
  TabloidKey key(static_cast<std::size_t>(n), '\0');
  for (std::size_t r = 0; r < t.size(); ++r)
    for (int entry : t[r]) key[entry - 1] = static_cast<char>(r);
  std::unordered_map<TabloidKey, int> coeffs;
  orbit_rec(column_orbits(t), 0, key, 1, p, coeffs);
  std::erase_if(coeffs, [](const auto& kv) { return kv.second == 0; });
  return coeffs;
}

}  // namespace

std::map<Tabloid, int> polytabloid(const Tableau& t, int p) {
  if (p < 2) fail(Errc::PreconditionViolated, "p must be at least 2");
  int n = 0;
  std::vector<int> shape;
  for (const auto& row : t) {
    n += static_cast<int>(row.size());
    shape.push_back(static_cast<int>(row.size()));
  }
  Partition la(shape);
  require_cap(la);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& row : t)
    for (int entry : row) {
      if (entry < 1 || entry > n || seen[entry])
        fail(Errc::PreconditionViolated, "tableau entries must be 1..n without repeats");
      seen[entry] = true;
    }

  std::map<Tabloid, int> out;
  for (const auto& [key, coeff] : polytabloid_keys(t, p, n)) {
    Tabloid tab;
    tab.rows.assign(la.height(), {});
    for (int entry = 1; entry <= n; ++entry) tab.rows[key[entry - 1]].push_back(entry);
    out[std::move(tab)] = coeff;
  }
  return out;
}

GramCertificate gram_rank(const Partition& la, int p) {
  require_prime(p);
  if (!is_p_regular(la, p))
    fail(Errc::IrregularInput, format_partition(la) + " is not " + std::to_string(p) + "-regular");
  require_cap(la);

  GramCertificate cert;
  cert.partition = la;
  cert.p = p;
  cert.syt = syt_count(la);
  if (la.empty()) {
    cert.rank = 1;
    return cert;
  }

  auto tableaux = standard_tableaux(la);
  const std::size_t f = tableaux.size();

  // Sparse polytabloid vectors over a shared tabloid index.
  std::unordered_map<TabloidKey, int> ids;
  std::vector<std::vector<std::pair<int, int>>> vecs(f);
  for (std::size_t i = 0; i < f; ++i) {
    auto coeffs = polytabloid_keys(tableaux[i], p, la.size());
    auto& vec = vecs[i];
    vec.reserve(coeffs.size());
    for (const auto& [key, coeff] : coeffs) {
      auto [it, inserted] = ids.try_emplace(key, static_cast<int>(ids.size()));
      vec.push_back({it->second, coeff});
    }
    std::sort(vec.begin(), vec.end());
  }

  std::vector<std::vector<int>> gram(f, std::vector<int>(f, 0));
  for (std::size_t i = 0; i < f; ++i) {
    for (std::size_t j = i; j < f; ++j) {
      long long dot = 0;
      auto a = vecs[i].begin();
      auto b = vecs[j].begin();
      while (a != vecs[i].end() && b != vecs[j].end()) {
        if (a->first < b->first)
          ++a;
        else if (b->first < a->first)
          ++b;
        else {
          dot += static_cast<long long>(a->second) * b->second;
          ++a;
          ++b;
        }
      }
      gram[i][j] = gram[j][i] = mod_p(dot, p);
    }
  }

  // Row echelon over F_p.
  long rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < f && row < f; ++col) {
    std::size_t pivot = row;
    while (pivot < f && gram[pivot][col] == 0) ++pivot;
    if (pivot == f) continue;
    std::swap(gram[pivot], gram[row]);
    int inv = 1;
    while (gram[row][col] * inv % p != 1) ++inv;  // p is tiny
    for (std::size_t c = col; c < f; ++c) gram[row][c] = gram[row][c] * inv % p;
    for (std::size_t r = 0; r < f; ++r) {
      if (r == row || gram[r][col] == 0) continue;
      int factor = gram[r][col];
      for (std::size_t c = col; c < f; ++c)
        gram[r][c] = mod_p(gram[r][c] - static_cast<long long>(factor) * gram[row][c], p);
    }
    ++rank;
    ++row;
  }
  cert.rank = rank;
  return cert;
}

bool verify_two_row(const Partition& la, int p) {
  TwoRowRestriction cert = two_row_restriction(la, p);
  long lhs = gram_rank(la, p).rank;
  long rhs = 0;
  for (const auto& [label, mult] : cert.terms) rhs += mult * gram_rank(label, p).rank;
  return lhs == rhs;
}

bool verify_case_i(const Partition& la, int p) {
  int n = la.size();
  if (p == 3 && la == Partition({4, 1, 1})) {
    long whole = gram_rank(la, 3).rank;
    if (whole % 2 != 0) fail(Errc::OddDimension, "split label with odd gram rank");
    long half = whole / 2;
    return half * half == gram_rank(Partition({4, 2}), 3).rank;
  }

  if ((p != 2 && p != 3) || n < 5 || n % p == 0 || !splits(la, p) || !is_js(la, p) ||
      is_dim_one(la, p))
    fail(Errc::PreconditionViolated,
         format_partition(la) + " is not an Irreducible natural-tensor instance");

  Partition product = case_i_product(la, p);
  long split_rank = gram_rank(la, p).rank;
  if (split_rank % 2 != 0) fail(Errc::OddDimension, "split label with odd gram rank");
  long natural_rank = gram_rank(Partition({n - 1, 1}), p).rank;
  long product_rank = gram_rank(product, p).rank;
  return split_rank / 2 * natural_rank == product_rank;
}

}  // namespace partmod
