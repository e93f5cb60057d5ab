#include "partmod/selftest.hpp"

#include <algorithm>
#include <string>

#include "partmod/alternating.hpp"
#include "partmod/branching.hpp"
#include "partmod/classifier.hpp"
#include "partmod/io.hpp"
#include "partmod/mullineux.hpp"
#include "partmod/partition.hpp"
#include "partmod/specht.hpp"

namespace partmod {

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

std::string counted(long long checked) { return std::to_string(checked) + " cases checked"; }

bool has_citation(const Classification& c, const std::string& tag) {
  return std::find(c.citations.begin(), c.citations.end(), tag) != c.citations.end();
}

CheckResult check_count_identity() {
  long long checked = 0;
  for (int p : {2, 3, 5})
    for (int n = 0; n <= 18; ++n)
      for (const Partition& la : p_regular_partitions(n, p)) {
        ++checked;
        if (conormal_count(la, p) != normal_count(la, p) + 1)
          return {false, "count identity fails at " + format_partition(la) + ", p = " +
                             std::to_string(p)};
      }
  return {true, counted(checked)};
}

CheckResult check_js_equivalence() {
  long long checked = 0;
  for (int p : {2, 3, 5})
    for (int n = 0; n <= 18; ++n)
      for (const Partition& la : p_regular_partitions(n, p)) {
        ++checked;
        if (is_js_closed_form(la, p) != is_js_by_signature(la, p))
          return {false, "JS routes disagree at " + format_partition(la) + ", p = " +
                             std::to_string(p)};
      }
  return {true, counted(checked)};
}

CheckResult check_crystal_roundtrip() {
  long long checked = 0;
  for (int p : {2, 3})
    for (int n = 0; n <= 14; ++n)
      for (const Partition& la : p_regular_partitions(n, p))
        for (int i = 0; i < p; ++i) {
          auto before = signature(la, p, i);
          for (int r = 1; r <= before.epsilon; ++r) {
            ++checked;
            Partition lowered = remove_good(la, p, i, r);
            auto after = signature(lowered, p, i);
            if (after.epsilon != before.epsilon - r || after.phi != before.phi + r)
              return {false, "signature shift fails at " + format_partition(la) + ", i = " +
                                 std::to_string(i) + ", r = " + std::to_string(r)};
            if (add_cogood(lowered, p, i, r) != la)
              return {false, "roundtrip fails at " + format_partition(la) + ", i = " +
                                 std::to_string(i) + ", r = " + std::to_string(r)};
          }
        }
  return {true, counted(checked)};
}

CheckResult check_mullineux() {
  long long checked = 0;
  for (int p : {3, 5})
    for (int n = 0; n <= 14; ++n)
      for (const Partition& la : p_regular_partitions(n, p)) {
        ++checked;
        Partition image = mullineux(la, p);
        if (image.size() != la.size() || mullineux(image, p) != la)
          return {false, "involution fails at " + format_partition(la) + ", p = " +
                             std::to_string(p)};
      }
  for (int n = 0; n <= 20; ++n)
    for (const Partition& la : p_regular_partitions(n, 2)) {
      ++checked;
      if (mullineux(la, 2) != la)
        return {false, "sign twist should fix " + format_partition(la) + " at p = 2"};
    }

  if (mullineux(P({4, 3, 3, 2}), 3) != P({7, 5}))
    return {false, "anchor (4,3,3,2) -> (7,5) fails"};
  if (mullineux(P({7, 3, 2}), 3) != P({7, 3, 2}))
    return {false, "anchor (7,3,2) fixed fails"};

  // Twist compatibility: epsilon_i(la) = epsilon_{-i}(twist), and lowering
  // commutes with the twist across the residue negation.
  for (int n = 0; n <= 12; ++n)
    for (const Partition& la : p_regular_partitions(n, 3)) {
      Partition image = mullineux(la, 3);
      for (int i = 0; i < 3; ++i) {
        ++checked;
        int neg = (3 - i) % 3;
        auto here = signature(la, 3, i);
        if (here.epsilon != signature(image, 3, neg).epsilon)
          return {false, "twisted epsilon mismatch at " + format_partition(la) + ", i = " +
                             std::to_string(i)};
        if (here.epsilon > 0 &&
            mullineux(remove_good(la, 3, i, 1), 3) != remove_good(image, 3, neg, 1))
          return {false, "twisted lowering mismatch at " + format_partition(la) + ", i = " +
                             std::to_string(i)};
      }
    }
  return {true, counted(checked)};
}

CheckResult check_fixed_family() {
  long long checked = 0;
  for (int n = 1; n <= 18; ++n) {
    std::vector<Partition> fixed;
    for (const Partition& la : p_regular_partitions(n, 3))
      if (is_mullineux_fixed(la, 3)) fixed.push_back(la);
    // The three-row classification holds for the self-paired members that are
    // also JS; fixed points like (3,1,1) or (4,2,1) sit outside it.
    std::vector<Partition> three_row;
    for (const Partition& la : fixed)
      if (la.height() == 3 && is_js(la, 3)) three_row.push_back(la);
    ++checked;
    if (n % 6 == 0) {
      if (three_row.size() != 1)
        return {false, "expected one three-row fixed partition at n = " + std::to_string(n) +
                           ", found " + std::to_string(three_row.size())};
    } else if (!three_row.empty()) {
      return {false, "unexpected three-row fixed partition " + format_partition(three_row[0]) +
                         " at n = " + std::to_string(n)};
    }
    if (n == 6 && three_row[0] != P({4, 1, 1})) return {false, "n = 6 family member wrong"};
    if (n == 12 && three_row[0] != P({7, 3, 2})) return {false, "n = 12 family member wrong"};
    if (n == 9 && !fixed.empty())
      return {false, "unexpected fixed partition " + format_partition(fixed[0]) + " at n = 9"};
  }
  return {true, counted(checked)};
}

CheckResult check_splitting() {
  long long checked = 0;
  for (int n = 3; n <= 30; ++n) {
    ++checked;
    if (splits(basic_spin(n), 2) != (n % 4 != 2))
      return {false, "basic spin splitting wrong at n = " + std::to_string(n)};
  }
  for (int n = 1; n <= 18; ++n)
    for (const Partition& la : p_regular_partitions(n, 2)) {
      if (!splits(la, 2) || !is_js(la, 2)) continue;
      ++checked;
      int h = la.height();
      for (int part : la.parts())
        if (part % 2 == 0)
          return {false, "split JS " + format_partition(la) + " has an even part"};
      if ((n - h * h) % 4 != 0)
        return {false, "split JS " + format_partition(la) + " misses n = h^2 mod 4"};
    }
  for (int n = 5; n <= 18; ++n)
    for (const Partition& la : p_regular_partitions(n, 3)) {
      if (!splits(la, 3)) continue;
      ++checked;
      if (la.height() < 3)
        return {false, "split " + format_partition(la) + " with fewer than three rows"};
      if (is_js(la, 3) && (n - la.height() * la.height()) % 3 != 0)
        return {false, "split JS " + format_partition(la) + " misses n = h^2 mod 3"};
    }
  for (int n = 6; n <= 30; n += 4) {
    for (int j = 0; j <= (n - 6) / 4; ++j) {
      ++checked;
      if (!splits(char2_exceptional_family(n, j), 2))
        return {false, "family member at n = " + std::to_string(n) + ", j = " +
                           std::to_string(j) + " does not split"};
    }
  }
  return {true, counted(checked)};
}

CheckResult check_two_row_oracle() {
  long long checked = 0;
  for (int p : {2, 3})
    for (int n = 3; n <= 10; ++n)
      for (int k = 1; 2 * k < n; ++k) {
        Partition la({n - k, k});
        if (!is_p_regular(la, p)) continue;
        bool ok = true;
        try {
          ok = verify_two_row(la, p);
        } catch (const Error& e) {
          if (e.code() == Errc::OutsideLemmaScope) continue;
          throw;
        }
        ++checked;
        if (!ok)
          return {false, "restriction ranks disagree at " + format_partition(la) + ", p = " +
                             std::to_string(p)};
      }

  if (gram_rank(P({5, 2}), 2).rank != 14) return {false, "(5,2) rank is not 14 at p = 2"};
  if (gram_rank(P({4, 2}), 2).rank != 4) return {false, "(4,2) rank is not 4 at p = 2"};
  if (gram_rank(P({5, 1}), 2).rank != 4) return {false, "(5,1) rank is not 4 at p = 2"};
  if (gram_rank(P({6}), 2).rank != 1) return {false, "(6) rank is not 1 at p = 2"};
  if (gram_rank(P({4, 2}), 3).rank != 9) return {false, "(4,2) rank is not 9 at p = 3"};
  if (gram_rank(P({3, 2}), 3).rank != 1) return {false, "(3,2) rank is not 1 at p = 3"};
  if (gram_rank(P({4, 1}), 3).rank != 4) return {false, "(4,1) rank is not 4 at p = 3"};
  checked += 7;
  return {true, counted(checked)};
}

CheckResult check_classifier_instances() {
  long long checked = 0;
  auto label = [](std::initializer_list<int> parts, int p, Variant v) {
    return make_label(Partition(std::vector<int>(parts)), p, v);
  };

  {
    auto c = classify(2, 9, label({5, 3, 1}, 2, Variant::Plus), label({8, 1}, 2, Variant::Whole));
    if (c.verdict != Verdict::Irreducible || !c.product ||
        c.product->partition != P({4, 3, 2}) || c.product->variant != Variant::Whole ||
        !has_citation(c, "Thm 9.3"))
      return {false, "instance 1 ((5,3,1)+ x (8,1), p = 2) is wrong"};
    ++checked;
  }
  {
    auto c = classify(3, 6, label({4, 1, 1}, 3, Variant::Plus), label({4, 1, 1}, 3, Variant::Minus));
    if (c.verdict != Verdict::Irreducible || !c.product ||
        c.product->partition != P({4, 2}) || c.product->variant != Variant::Whole ||
        !has_citation(c, "Thm 10.2"))
      return {false, "instance 2 ((4,1,1)+ x (4,1,1)-, p = 3) is wrong"};
    ++checked;
  }
  {
    auto c = classify(3, 6, label({4, 1, 1}, 3, Variant::Plus), label({4, 1, 1}, 3, Variant::Plus));
    if (c.verdict != Verdict::NotIrreducible || !has_citation(c, "Thm 10.2"))
      return {false, "instance 3 ((4,1,1)+ x (4,1,1)+, p = 3) is wrong"};
    ++checked;
  }
  {
    auto c = classify(3, 6, label({4, 1, 1}, 3, Variant::Plus), label({5, 1}, 3, Variant::Whole));
    if (c.verdict != Verdict::NotIrreducible || !has_citation(c, "Thm 10.1"))
      return {false, "instance 4 ((4,1,1)+ x (5,1), p = 3) is wrong"};
    ++checked;
  }
  {
    auto c = classify(2, 8, label({5, 3}, 2, Variant::Plus), label({5, 2, 1}, 2, Variant::Whole));
    if (c.verdict != Verdict::BasicSpinOpen || !c.report || !c.report->passes ||
        c.report->subcase != SpinSubcase::SplitNonSplit || c.report->bound != 3 ||
        c.report->normal_node_count != 3 || c.report->product_height_bound != 8)
      return {false, "instance 5 ((5,3)+ x (5,2,1), p = 2) is wrong"};
    ++checked;
  }
  {
    auto c = classify(2, 9, label({5, 4}, 2, Variant::Plus), label({4, 3, 2}, 2, Variant::Whole));
    if (c.verdict != Verdict::NotIrreducible || !c.report ||
        c.report->normal_node_count != 3 || c.report->bound != 2 || c.report->passes)
      return {false, "instance 6 ((5,4)+ x (4,3,2), p = 2) is wrong"};
    ++checked;
  }
  {
    auto c = classify(2, 9, label({5, 4}, 2, Variant::Plus), label({8, 1}, 2, Variant::Whole));
    if (c.verdict != Verdict::NotIrreducible || !has_citation(c, "Thm 9.3") ||
        !has_citation(c, "Lem 2.11"))
      return {false, "instance 7 ((5,4)+ x (8,1), p = 2) is wrong"};
    ++checked;
  }
  {
    auto c = classify(3, 7, label({7}, 3, Variant::Whole), label({4, 2, 1}, 3, Variant::Plus));
    if (c.verdict != Verdict::Trivial)
      return {false, "instance 8 ((7) x (4,2,1)+, p = 3) is wrong"};
    ++checked;
  }

  if (!verify_case_i(P({5, 3, 1}), 2)) return {false, "rank identity fails at (5,3,1), p = 2"};
  if (!verify_case_i(P({4, 1, 1}), 3)) return {false, "rank identity fails at (4,1,1), p = 3"};
  checked += 2;
  return {true, counted(checked)};
}

CheckResult check_scan_coherence() {
  long long checked = 0;
  for (int p : {2, 3})
    for (int n = 5; n <= 14; ++n) {
      Partition spin = basic_spin(n);
      AltLabel natural = make_label(Partition({n - 1, 1}), p, Variant::Whole);
      for (const ScanRow& row : classify_all(p, n, 2)) {
        ++checked;
        const Classification& c = row.result;
        if (c.citations.empty())
          return {false, "row without citations at p = " + std::to_string(p) + ", n = " +
                             std::to_string(n)};
        if (c.verdict == Verdict::Irreducible) {
          if (!c.product) return {false, "Irreducible row without product"};
          const Partition& product = c.product->partition;
          if (product.size() != n || !is_p_regular(product, p))
            return {false, "bad product " + format_partition(product)};
          bool lhs_split = row.lhs.variant != Variant::Whole;
          bool rhs_split = row.rhs.variant != Variant::Whole;
          if (has_citation(c, "Thm 1(i)")) {
            if (lhs_split == rhs_split) return {false, "case (i) row without a split/whole pair"};
            const AltLabel& whole = lhs_split ? row.rhs : row.lhs;
            const Partition& split_factor = (lhs_split ? row.lhs : row.rhs).partition;
            if (!(whole == natural)) return {false, "case (i) row without the natural label"};
            if (!split_js_diagnostics(split_factor, p).all_pass)
              return {false, "case (i) factor fails its diagnostics"};
            if (p == 2 && (product.part(product.height()) != 2 || splits(product, 2)))
              return {false, "case (i) product shape wrong at " + format_partition(product)};
            if (p == 3 && (!c.mullineux_partner || *c.mullineux_partner != mullineux(product, 3)))
              return {false, "case (i) partner wrong at " + format_partition(product)};
          } else if (has_citation(c, "Thm 1(ii)")) {
            if (p != 3 || n != 6 || row.lhs.partition != P({4, 1, 1}) ||
                row.rhs.partition != P({4, 1, 1}) || product != P({4, 2}))
              return {false, "case (ii) row outside Thm 10.2's instance"};
          } else {
            return {false, "Irreducible row without a case tag"};
          }
        }
        if (c.verdict == Verdict::BasicSpinOpen) {
          if (p != 2 || !c.report || !c.report->passes)
            return {false, "malformed BasicSpinOpen row"};
          if (row.lhs.partition != spin && row.rhs.partition != spin)
            return {false, "BasicSpinOpen row without the basic spin label"};
        }
        Classification swapped = classify(p, n, row.rhs, row.lhs);
        auto sorted = [](std::vector<std::string> v) {
          std::sort(v.begin(), v.end());
          return v;
        };
        if (swapped.verdict != c.verdict ||
            sorted(swapped.citations) != sorted(c.citations) ||
            !(swapped.product == c.product) ||
            !(swapped.mullineux_partner == c.mullineux_partner))
          return {false, "asymmetry between " + format_label(row.lhs) + " and " +
                             format_label(row.rhs)};
      }
    }
  return {true, counted(checked)};
}

}  // namespace

const std::vector<SelfCheck>& selftest_checks() {
  static const std::vector<SelfCheck> checks = {
      {1, "Lem 2.8", "conormal count exceeds normal count by one (p in {2,3,5}, n <= 18)", 60,
       check_count_identity},
      {2, "Lem 2.10, Lem 2.11", "closed-form JS matches the one-normal-node test (p in {2,3,5}, n <= 18)",
       60, check_js_equivalence},
      {3, "Lem 2.7", "lowering then raising round-trips with shifted signature counts (p in {2,3}, n <= 14)",
       60, check_crystal_roundtrip},
      {4, "Lem 2.9, Lem 3.2, Lem 8.3", "sign twist: involution, p = 2 identity, anchors, residue negation",
       120, check_mullineux},
      {5, "Lem 5.9, Lem 8.3", "three-row fixed partitions exist exactly for n = 0 mod 6, uniquely",
       60, check_fixed_family},
      {6, "Lem 2.1, Lem 2.2, Lem 9.1, Lem 9.4, Sec 12", "splitting congruences and the basic spin rule",
       60, check_splitting},
      {7, "Lem 8.1", "two-row restriction certificates match Gram ranks (p in {2,3}, n <= 10)",
       300, check_two_row_oracle},
      {8, "Thm 9.3, Thm 10.1, Thm 10.2, Sec 11", "pinned classifier instances and rank identities",
       300, check_classifier_instances},
      {9, "Thm 1, Thm 9.2", "full scan coherence for p in {2,3}, 5 <= n <= 14", 600,
       check_scan_coherence},
  };
  return checks;
}

}  // namespace partmod
