#include "partmod/alternating.hpp"

#include <string>

#include "partmod/branching.hpp"
#include "partmod/io.hpp"
#include "partmod/mullineux.hpp"

namespace partmod {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Whole: return "whole";
    case Variant::Plus: return "plus";
    case Variant::Minus: return "minus";
  }
  return "?";
}

bool splits(const Partition& la, int p) {
  if (!is_p_regular(la, p))
    fail(Errc::IrregularInput, format_partition(la) + " is not " + std::to_string(p) + "-regular");
  if (p == 2) {
    for (int i = 1; 2 * i - 1 <= la.height(); ++i) {
      int odd = la.part(2 * i - 1);
      int even = la.part(2 * i);
      if (odd - even > 2) return false;
      if ((odd + even) % 4 == 2) return false;
    }
    return true;
  }
  return is_mullineux_fixed(la, p);
}

Partition sign_label(int n, int p) {
  if (n < 0) fail(Errc::OutOfRange, "negative rank");
  if (n == 0) return Partition{};
  return mullineux(Partition({n}), p);
}

bool is_dim_one(const Partition& la, int p) {
  if (la.empty()) return true;
  return la == Partition({la.size()}) || la == sign_label(la.size(), p);
}

Partition canonical_partition(const Partition& la, int p) {
  if (p == 2) return la;
  Partition twist = mullineux(la, p);
  return twist > la ? twist : la;
}

AltLabel make_label(const Partition& la, int p, Variant variant) {
  bool split = splits(la, p);
  if (split && variant == Variant::Whole)
    fail(Errc::VariantInconsistent,
         format_partition(la) + " splits, a +/- variant is required");
  if (!split && variant != Variant::Whole)
    fail(Errc::VariantInconsistent,
         format_partition(la) + " does not split, no +/- variant applies");
  return AltLabel{split ? la : canonical_partition(la, p), variant};
}

std::vector<AltLabel> alt_labels(const Partition& la, int p) {
  if (splits(la, p)) return {{la, Variant::Plus}, {la, Variant::Minus}};
  return {{canonical_partition(la, p), Variant::Whole}};
}

SplitJsReport split_js_diagnostics(const Partition& la, int p) {
  if (!splits(la, p) || !is_js(la, p))
    fail(Errc::PreconditionViolated,
         format_partition(la) + " must split and have a unique normal node");

  SplitJsReport report;
  int n = la.size();
  int h = la.height();
  if (p == 2) {
    bool odd = true;
    for (int part : la.parts())
      if (part % 2 == 0) odd = false;
    report.clauses.push_back({"Lem 9.1", "every part is odd", odd});
    report.clauses.push_back(
        {"Lem 9.1",
         "n = " + std::to_string(n) + " matches h^2 = " + std::to_string(h * h) + " mod 4",
         (n - h * h) % 4 == 0});
  } else {
    report.clauses.push_back(
        {"Lem 9.4",
         "n = " + std::to_string(n) + " matches h^2 = " + std::to_string(h * h) + " mod " +
             std::to_string(p),
         (n - h * h) % p == 0});
    report.clauses.push_back({"Lem 2.2", "at least three rows", h >= 3});
  }
  report.all_pass = true;
  for (const auto& clause : report.clauses) report.all_pass = report.all_pass && clause.pass;
  return report;
}

}  // namespace partmod
