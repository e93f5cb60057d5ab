#include "partmod/classifier.hpp"

#include <algorithm>
#include <thread>

#include "partmod/branching.hpp"
#include "partmod/io.hpp"
#include "partmod/mullineux.hpp"

namespace partmod {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Trivial: return "Trivial";
    case Verdict::NotIrreducible: return "NotIrreducible";
    case Verdict::Irreducible: return "Irreducible";
    case Verdict::BasicSpinOpen: return "BasicSpinOpen";
  }
  return "?";
}

Partition case_i_product(const Partition& la, int p) {
  if (!splits(la, p) || !is_js(la, p))
    fail(Errc::PreconditionViolated,
         format_partition(la) + " must split and have a unique normal node");

  auto rem = removable_nodes(la);
  auto add = addable_nodes(la);
  Node top = rem.front();
  Node second_lowest = add[add.size() - 2];

  std::vector<int> parts = la.parts();
  parts[top.row - 1] -= 1;
  if (second_lowest.row == la.height() + 1)
    parts.push_back(1);
  else
    parts[second_lowest.row - 1] += 1;
  std::erase(parts, 0);

  Partition product(parts);  // NotAPartition here would be an internal defect
  if (!is_p_regular(product, p))
    fail(Errc::IrregularResult, format_partition(product) + " is not " +
                                    std::to_string(p) + "-regular");
  return product;
}

Partition char2_exceptional_family(int n, int j) {
  if (n % 4 != 2 || n < 6) fail(Errc::OutOfRange, "rank must be 2 mod 4 and at least 6");
  if (j < 0 || j > (n - 6) / 4)
    fail(Errc::OutOfRange, "family index " + std::to_string(j) + " outside 0.." +
                               std::to_string((n - 6) / 4));
  std::vector<int> parts{n / 2 - j, n / 2 - j - 1, j + 1};
  if (j > 0) parts.push_back(j);
  return Partition(parts);
}

namespace {

AltLabel checked_label(const AltLabel& label, int p, int n) {
  if (label.partition.size() != n)
    fail(Errc::SizeMismatch, format_label(label) + " is not a partition of " + std::to_string(n));
  return make_label(label.partition, p, label.variant);
}

AltLabel natural_label(int p, int n) {
  return make_label(Partition({n - 1, 1}), p, Variant::Whole);
}

Classification not_irreducible(std::vector<std::string> citations) {
  return Classification{Verdict::NotIrreducible, std::nullopt, std::nullopt,
                        std::move(citations), std::nullopt};
}

BasicSpinReport spin_report(const Partition& non_spin, int p, int n, SpinSubcase subcase) {
  BasicSpinReport report;
  report.subcase = subcase;
  report.non_spin_factor = non_spin;
  report.normal_node_count = normal_count(non_spin, p);
  if (subcase == SpinSubcase::SplitNonSplit) {
    report.bound = (n % 2 == 1) ? 2 : 3;
    report.product_height_bound = (n % 2 == 1) ? 6 : 8;
  } else {
    report.bound = (n % 2 == 1) ? 3 : 4;
    report.product_height_bound = (n % 2 == 1) ? 10 : 12;
  }
  report.passes = report.normal_node_count <= report.bound;
  report.product_height_floor = (non_spin.height() + 1) / 2;
  return report;
}

Classification spin_branch(const Partition& non_spin, int p, int n, SpinSubcase subcase) {
  BasicSpinReport report = spin_report(non_spin, p, n, subcase);
  if (!report.passes) {
    Classification out = not_irreducible({"Sec 11"});
    out.report = report;
    return out;
  }
  return Classification{Verdict::BasicSpinOpen, std::nullopt, std::nullopt,
                        {"Thm 1(iii)", "Sec 11"}, report};
}

}  // namespace

Classification classify(int p, int n, const AltLabel& lhs_in, const AltLabel& rhs_in) {
  if (p != 2 && p != 3)
    fail(Errc::UnsupportedCharacteristic, "classification covers p = 2 and 3, got " +
                                              std::to_string(p));
  if (n < 5) fail(Errc::PreconditionViolated, "classification needs n >= 5");
  AltLabel lhs = checked_label(lhs_in, p, n);
  AltLabel rhs = checked_label(rhs_in, p, n);

  if (is_dim_one(lhs.partition, p) || is_dim_one(rhs.partition, p))
    return Classification{Verdict::Trivial, std::nullopt, std::nullopt, {"Thm 1"}, std::nullopt};

  bool lhs_split = lhs.variant != Variant::Whole;
  bool rhs_split = rhs.variant != Variant::Whole;

  if (!lhs_split && !rhs_split)
    return not_irreducible({p == 2 ? "Sec 12 Case 1" : "Sec 12 Case 2"});

  Partition spin = basic_spin(n);

  if (lhs_split != rhs_split) {
    const AltLabel& split_factor = lhs_split ? lhs : rhs;
    const AltLabel& whole_factor = lhs_split ? rhs : lhs;
    const Partition& la = split_factor.partition;

    if (whole_factor == natural_label(p, n)) {
      if (p == 2) {
        if (n % 2 == 1 && is_js(la, 2)) {
          Partition product = case_i_product(la, 2);
          return Classification{Verdict::Irreducible,
                                make_label(product, 2, Variant::Whole),
                                std::nullopt,
                                {"Thm 1(i)", "Thm 9.3"},
                                std::nullopt};
        }
        if (n % 2 == 0) return not_irreducible({"Thm 9.3"});
        return not_irreducible({"Thm 9.3", "Lem 2.11"});
      }
      if (n % 3 != 0 && is_js(la, 3)) {
        Partition product = case_i_product(la, 3);
        return Classification{Verdict::Irreducible,
                              make_label(product, 3, Variant::Whole),
                              mullineux(product, 3),
                              {"Thm 1(i)", "Thm 10.1"},
                              std::nullopt};
      }
      return not_irreducible({"Thm 10.1"});
    }

    if (p == 2 && (la == spin || whole_factor.partition == spin)) {
      const Partition& non_spin = (la == spin) ? whole_factor.partition : la;
      return spin_branch(non_spin, p, n, SpinSubcase::SplitNonSplit);
    }

    return not_irreducible({p == 2 ? "Thm 9.2" : "Thm 10.1"});
  }

  // Both factors split.
  if (p == 3) {
    Partition witness({4, 1, 1});
    if (n == 6 && lhs.partition == witness && rhs.partition == witness &&
        lhs.variant != rhs.variant) {
      return Classification{Verdict::Irreducible,
                            make_label(Partition({4, 2}), 3, Variant::Whole),
                            std::nullopt,
                            {"Thm 1(ii)", "Thm 10.2"},
                            std::nullopt};
    }
    return not_irreducible({"Thm 10.2"});
  }
  if (lhs.partition == spin || rhs.partition == spin) {
    const Partition& non_spin = (lhs.partition == spin) ? rhs.partition : lhs.partition;
    return spin_branch(non_spin, p, n, SpinSubcase::BothSplit);
  }
  return not_irreducible({"Thm 10.1"});
}

std::vector<AltLabel> all_labels(int p, int n) {
  std::vector<AltLabel> labels;
  for_each_p_regular(n, p, [&](const Partition& la) {
    if (splits(la, p)) {
      labels.push_back({la, Variant::Plus});
      labels.push_back({la, Variant::Minus});
    } else if (p == 2 || canonical_partition(la, p) == la) {
      labels.push_back({la, Variant::Whole});
    }
  });
  return labels;
}

std::vector<ScanRow> classify_all(int p, int n, int jobs) {
  if (jobs < 1) fail(Errc::OutOfRange, "worker count must be positive");
  std::vector<AltLabel> labels = all_labels(p, n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i; j < labels.size(); ++j) pairs.push_back({i, j});

  std::vector<ScanRow> rows(pairs.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto& [i, j] = pairs[k];
      rows[k] = ScanRow{labels[i], labels[j], classify(p, n, labels[i], labels[j])};
    }
  };

  if (jobs == 1 || pairs.size() < 2) {
    work(0, pairs.size());
    return rows;
  }
  std::vector<std::thread> workers;
  std::size_t chunk = (pairs.size() + jobs - 1) / jobs;
  for (int w = 0; w < jobs; ++w) {
    std::size_t begin = std::min(pairs.size(), w * chunk);
    std::size_t end = std::min(pairs.size(), begin + chunk);
    if (begin < end) workers.emplace_back(work, begin, end);
  }
  for (auto& worker : workers) worker.join();
  return rows;
}

}  // namespace partmod
