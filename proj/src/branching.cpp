#include "partmod/branching.hpp"

#include <algorithm>
#include <string>

#include "partmod/io.hpp"

namespace partmod {

namespace {

void require_regular(const Partition& la, int p) {
  if (!is_p_regular(la, p))
    fail(Errc::IrregularInput, format_partition(la) + " is not " + std::to_string(p) + "-regular");
}

int normalize_residue(int res, int p) {
  if (p < 2) fail(Errc::PreconditionViolated, "p must be at least 2");
  int r = res % p;
  return r < 0 ? r + p : r;
}

}  // namespace

std::vector<Node> SignatureReport::normal_nodes() const {
  std::vector<Node> out;
  for (const auto& e : sequence)
    if (e.sign == '-' && e.survives) out.push_back(e.node);
  return out;
}

std::vector<Node> SignatureReport::conormal_nodes() const {
  std::vector<Node> out;
  for (const auto& e : sequence)
    if (e.sign == '+' && e.survives) out.push_back(e.node);
  return out;
}

SignatureReport signature(const Partition& la, int p, int res) {
  res = normalize_residue(res, p);
  require_regular(la, p);

  SignatureReport report;
  report.residue = res;

  auto rem = removable_nodes(la);
  auto add = addable_nodes(la);
  std::vector<SignatureEntry> seq;
  for (Node node : rem)
    if (residue(node, p) == res) seq.push_back({node, '-', true});
  for (Node node : add)
    if (residue(node, p) == res) seq.push_back({node, '+', true});
  std::sort(seq.begin(), seq.end(),
            [](const SignatureEntry& a, const SignatureEntry& b) { return a.node.row < b.node.row; });

  // Cancel each '-' against the nearest surviving '+' above it.
  std::vector<std::size_t> open_plus;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i].sign == '+') {
      open_plus.push_back(i);
    } else if (!open_plus.empty()) {
      seq[open_plus.back()].survives = false;
      seq[i].survives = false;
      open_plus.pop_back();
    }
  }

  report.sequence = std::move(seq);
  for (const auto& e : report.sequence) {
    if (!e.survives) continue;
    if (e.sign == '-') {
      ++report.epsilon;
      report.good = e.node;  // lowest survivor wins
    } else {
      ++report.phi;
      if (!report.cogood) report.cogood = e.node;
    }
  }
  return report;
}

int normal_count(const Partition& la, int p) {
  int total = 0;
  for (int res = 0; res < p; ++res) total += signature(la, p, res).epsilon;
  return total;
}

int conormal_count(const Partition& la, int p) {
  int total = 0;
  for (int res = 0; res < p; ++res) total += signature(la, p, res).phi;
  return total;
}

namespace {

Partition without_node(const Partition& la, Node node) {
  std::vector<int> parts = la.parts();
  parts[node.row - 1] -= 1;
  if (parts[node.row - 1] == 0) parts.erase(parts.begin() + (node.row - 1));
  return Partition(parts);
}

Partition with_node(const Partition& la, Node node) {
  std::vector<int> parts = la.parts();
  if (node.row == la.height() + 1)
    parts.push_back(1);
  else
    parts[node.row - 1] += 1;
  return Partition(parts);
}

}  // namespace

Partition remove_good(const Partition& la, int p, int res, int r) {
  res = normalize_residue(res, p);
  if (r < 0) fail(Errc::OutOfRange, "negative step count");
  Partition cur = la;
  for (int step = 0; step < r; ++step) {
    auto report = signature(cur, p, res);
    if (!report.good)
      fail(Errc::NotEnoughNormalNodes,
           format_partition(la) + " has " + std::to_string(report.epsilon + step) +
               " normal nodes of residue " + std::to_string(res) + ", needed " + std::to_string(r));
    cur = without_node(cur, *report.good);
  }
  return cur;
}

Partition add_cogood(const Partition& la, int p, int res, int r) {
  res = normalize_residue(res, p);
  if (r < 0) fail(Errc::OutOfRange, "negative step count");
  Partition cur = la;
  for (int step = 0; step < r; ++step) {
    auto report = signature(cur, p, res);
    if (!report.cogood)
      fail(Errc::NotEnoughConormalNodes,
           format_partition(la) + " has " + std::to_string(report.phi + step) +
               " conormal nodes of residue " + std::to_string(res) + ", needed " + std::to_string(r));
    cur = with_node(cur, *report.cogood);
  }
  return cur;
}

bool is_js_closed_form(const Partition& la, int p) {
  require_regular(la, p);
  if (la.empty()) return false;
  if (p == 2) {
    int parity = la.part(1) % 2;
    for (int part : la.parts())
      if (part % 2 != parity) return false;
    return true;
  }
  // Exponent form (a_1^{b_1}, ..., a_m^{b_m}).
  std::vector<std::pair<int, int>> runs;
  for (int part : la.parts()) {
    if (!runs.empty() && runs.back().first == part)
      ++runs.back().second;
    else
      runs.push_back({part, 1});
  }
  for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
    int v = runs[i].first - runs[i + 1].first + runs[i].second + runs[i + 1].second;
    if (v % p != 0) return false;
  }
  return true;
}

bool is_js_by_signature(const Partition& la, int p) {
  return normal_count(la, p) == 1;
}

bool is_js(const Partition& la, int p) {
  bool closed = is_js_closed_form(la, p);
  bool counted = is_js_by_signature(la, p);
  if (closed != counted)
    fail(Errc::InternalDefect,
         "JS closed form and signature count disagree at " + format_partition(la));
  return closed;
}

int branching_multiplicity(const Partition& la, int p, Node a) {
  int res = residue(a, p);
  auto report = signature(la, p, res);
  auto normals = report.normal_nodes();
  if (std::find(normals.begin(), normals.end(), a) == normals.end())
    fail(Errc::NotNormal, format_node(a) + " is not a normal node of " + format_partition(la));
  int count = 0;
  for (Node node : normals)
    if (node.row <= a.row) ++count;
  return count;
}

TwoRowRestriction two_row_restriction(const Partition& la, int p) {
  require_regular(la, p);
  if (la.height() != 2 || la.part(1) == la.part(2))
    fail(Errc::PreconditionViolated,
         format_partition(la) + " is not a two-row partition with distinct parts");
  int n = la.size();
  int k = la.part(2);

  TwoRowRestriction cert;
  cert.source = la;
  cert.p = p;

  int rest = n - 2 * k;
  int t = 0;
  for (;; ++t) {
    int digit = rest % p;
    cert.digits.push_back(digit);
    rest /= p;
    if (digit < p - 1) break;
  }
  cert.t = t;
  if (t == 0)
    fail(Errc::OutsideLemmaScope,
         "lowest base-" + std::to_string(p) + " digit of " + std::to_string(n - 2 * k) +
             " is not " + std::to_string(p - 1));
  cert.delta = (cert.digits[t] < p - 2) ? 1 : 0;

  auto push_term = [&](int first, int second, int mult) {
    if (mult == 0 || second < 0 || first < second) return;
    std::vector<int> parts{first};
    if (second > 0) parts.push_back(second);
    Partition label(parts);
    if (!is_p_regular(label, p)) return;
    cert.terms.push_back({label, mult});
  };

  push_term(n - k - 1, k, 1);
  int power = 1;
  for (int j = 0; j < t; ++j) {
    push_term(n - k - 1 + power, k - power, 2);
    power *= p;
  }
  push_term(n - k - 1 + power, k - power, cert.delta);
  return cert;
}

}  // namespace partmod
