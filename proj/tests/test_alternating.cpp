#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "partmod/alternating.hpp"
#include "partmod/branching.hpp"
#include "partmod/io.hpp"
#include "partmod/mullineux.hpp"
#include "partmod/partition.hpp"

using namespace partmod;

namespace {

template <typename F>
Errc thrown_code(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a partmod::Error");
  return Errc::InternalDefect;
}

}  // namespace

TEST_CASE("splitting test") {
  CHECK(splits(Partition({5, 3}), 2));
  CHECK_FALSE(splits(Partition({6, 4}), 2));
  CHECK_FALSE(splits(Partition({5, 2, 1}), 2));
  CHECK(splits(Partition({5, 3, 1}), 2));
  CHECK(splits(Partition({2, 1}), 2));
  CHECK_FALSE(splits(Partition({4, 2}), 2));

  CHECK(splits(Partition({4, 1, 1}), 3));
  CHECK(splits(Partition({7, 3, 2}), 3));
  CHECK_FALSE(splits(Partition({5}), 3));
  CHECK_FALSE(splits(Partition({3, 2}), 3));

  CHECK(thrown_code([] { splits(Partition({1, 1}), 2); }) == Errc::IrregularInput);
  CHECK(thrown_code([] { splits(Partition({2, 2, 2}), 3); }) == Errc::IrregularInput);
}

TEST_CASE("dimension one labels") {
  CHECK(sign_label(5, 3) == Partition({3, 2}));
  CHECK(sign_label(5, 2) == Partition({5}));
  CHECK(sign_label(12, 3) == mullineux(Partition({12}), 3));

  CHECK(is_dim_one(Partition({5}), 3));
  CHECK(is_dim_one(Partition({3, 2}), 3));
  CHECK_FALSE(is_dim_one(Partition({4, 1}), 3));
  CHECK(is_dim_one(Partition({5}), 2));
  CHECK_FALSE(is_dim_one(Partition({4, 1}), 2));
  CHECK(is_dim_one(Partition{}, 2));
}

TEST_CASE("canonical representatives") {
  CHECK(canonical_partition(Partition({3, 2}), 3) == Partition({5}));
  CHECK(canonical_partition(Partition({5}), 3) == Partition({5}));
  CHECK(canonical_partition(Partition({4, 1}), 3) == Partition({4, 1}));
  CHECK(canonical_partition(Partition({2, 2, 1}), 3) == Partition({4, 1}));
  CHECK(canonical_partition(Partition({3, 2}), 2) == Partition({3, 2}));
}

TEST_CASE("label construction") {
  AltLabel plus = make_label(Partition({5, 3}), 2, Variant::Plus);
  CHECK(plus.partition == Partition({5, 3}));
  CHECK(plus.variant == Variant::Plus);

  AltLabel canon = make_label(Partition({2, 2, 1}), 3, Variant::Whole);
  CHECK(canon.partition == Partition({4, 1}));
  CHECK(canon.variant == Variant::Whole);

  CHECK(thrown_code([] { make_label(Partition({5, 3}), 2, Variant::Whole); }) ==
        Errc::VariantInconsistent);
  CHECK(thrown_code([] { make_label(Partition({4, 2}), 2, Variant::Plus); }) ==
        Errc::VariantInconsistent);
  CHECK(thrown_code([] { make_label(Partition({5}), 3, Variant::Minus); }) ==
        Errc::VariantInconsistent);
}

TEST_CASE("label sets") {
  auto split_pair = alt_labels(Partition({5, 3, 1}), 2);
  REQUIRE(split_pair.size() == 2);
  CHECK(split_pair[0] == AltLabel{Partition({5, 3, 1}), Variant::Plus});
  CHECK(split_pair[1] == AltLabel{Partition({5, 3, 1}), Variant::Minus});

  auto whole = alt_labels(Partition({8, 1}), 2);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0] == AltLabel{Partition({8, 1}), Variant::Whole});

  auto twisted = alt_labels(Partition({3, 2}), 3);
  REQUIRE(twisted.size() == 1);
  CHECK(twisted[0] == AltLabel{Partition({5}), Variant::Whole});

  CHECK(std::string(variant_name(Variant::Whole)) == "whole");
  CHECK(std::string(variant_name(Variant::Plus)) == "plus");
  CHECK(std::string(variant_name(Variant::Minus)) == "minus");
}

TEST_CASE("split JS diagnostics") {
  SplitJsReport a = split_js_diagnostics(Partition({5, 3, 1}), 2);
  CHECK(a.all_pass);
  REQUIRE(a.clauses.size() == 2);
  CHECK(a.clauses[0].citation == "Lem 9.1");
  CHECK(a.clauses[1].citation == "Lem 9.1");

  SplitJsReport b = split_js_diagnostics(Partition({4, 1, 1}), 3);
  CHECK(b.all_pass);
  REQUIRE(b.clauses.size() == 2);
  CHECK(b.clauses[0].citation == "Lem 9.4");
  CHECK(b.clauses[1].citation == "Lem 2.2");

  SplitJsReport c = split_js_diagnostics(Partition({5, 3}), 2);
  CHECK(c.all_pass);

  CHECK(thrown_code([] { split_js_diagnostics(Partition({5, 2}), 2); }) ==
        Errc::PreconditionViolated);
  CHECK(thrown_code([] { split_js_diagnostics(Partition({8, 1}), 2); }) ==
        Errc::PreconditionViolated);
}

TEST_CASE("split heights in characteristic three") {
  for (int n = 5; n <= 14; ++n)
    for_each_p_regular(n, 3, [&](const Partition& la) {
      if (splits(la, 3)) {
        CAPTURE(format_partition(la));
        CHECK(la.height() >= 3);
      }
    });
}

TEST_CASE("split JS diagnostics pass whenever the precondition holds") {
  for (int p : {2, 3})
    for (int n = 5; n <= 14; ++n)
      for_each_p_regular(n, p, [&](const Partition& la) {
        if (!splits(la, p) || !is_js(la, p)) return;
        CAPTURE(format_partition(la));
        CHECK(split_js_diagnostics(la, p).all_pass);
      });
}
