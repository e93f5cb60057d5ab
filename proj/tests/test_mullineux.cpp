#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

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

TEST_CASE("rim strips") {
  RimStrip strip = p_rim(Partition({4, 1, 1}), 3);
  CHECK(strip.nodes == std::vector<Node>{{1, 4}, {1, 3}, {1, 2}, {2, 1}, {3, 1}});
  CHECK(strip.remainder == Partition({1}));

  RimStrip row = p_rim(Partition({5}), 3);
  CHECK(row.nodes == std::vector<Node>{{1, 5}, {1, 4}, {1, 3}});
  CHECK(row.remainder == Partition({2}));

  RimStrip hook = p_rim(Partition({2, 1}), 3);
  CHECK(hook.nodes == std::vector<Node>{{1, 2}, {1, 1}, {2, 1}});
  CHECK(hook.remainder == Partition{});

  CHECK(thrown_code([] { p_rim(Partition{}, 3); }) == Errc::EmptyPartition);
}

TEST_CASE("symbols") {
  MullineuxSymbol a = mullineux_symbol(Partition({4, 1, 1}), 3);
  CHECK(a.sizes == std::vector<int>{5, 1});
  CHECK(a.rows == std::vector<int>{3, 1});

  MullineuxSymbol b = mullineux_symbol(Partition({7, 3, 2}), 3);
  CHECK(b.sizes == std::vector<int>{6, 5, 1});
  CHECK(b.rows == std::vector<int>{3, 3, 1});

  CHECK(thrown_code([] { mullineux_symbol(Partition({2, 2, 2}), 3); }) ==
        Errc::IrregularInput);
}

TEST_CASE("symbol reconstruction") {
  CHECK(partition_from_symbol({{6, 5, 1}, {3, 3, 1}}, 3) == Partition({7, 3, 2}));
  CHECK(partition_from_symbol({{5, 1}, {3, 1}}, 3) == Partition({4, 1, 1}));
  CHECK(thrown_code([] { partition_from_symbol({{1}, {2}}, 3); }) == Errc::NoSuchPartition);
  CHECK(thrown_code([] { partition_from_symbol({{3, 1}, {1}}, 3); }) ==
        Errc::PreconditionViolated);
  CHECK(thrown_code([] { partition_from_symbol({{3, 0}, {1, 1}}, 3); }) ==
        Errc::PreconditionViolated);
}

TEST_CASE("sign twist images") {
  CHECK(mullineux(Partition({5}), 3) == Partition({3, 2}));
  CHECK(mullineux(Partition({3, 2}), 3) == Partition({5}));
  CHECK(mullineux(Partition({4, 3, 3, 2}), 3) == Partition({7, 5}));
  CHECK(mullineux(Partition({6}), 3) == Partition({3, 3}));
  CHECK(mullineux(Partition({4}), 3) == Partition({2, 2}));
  CHECK(mullineux(Partition({4, 1}), 3) == Partition({2, 2, 1}));
  CHECK(mullineux(Partition({5, 1}), 3) == Partition({3, 2, 1}));
  CHECK(mullineux(Partition({4, 2}), 3) == Partition({2, 2, 1, 1}));
  CHECK(mullineux(Partition({2, 1, 1}), 3) == Partition({3, 1}));
  CHECK(mullineux(Partition{}, 3) == Partition{});

  CHECK(is_mullineux_fixed(Partition({7, 3, 2}), 3));
  CHECK(is_mullineux_fixed(Partition({4, 1, 1}), 3));
  CHECK_FALSE(is_mullineux_fixed(Partition({5}), 3));
}

TEST_CASE("sign twist is an involution") {
  for (int p : {3, 5})
    for (int n = 1; n <= 12; ++n)
      for_each_p_regular(n, p, [&](const Partition& la) {
        CAPTURE(format_partition(la));
        Partition image = mullineux(la, p);
        CHECK(image.size() == n);
        CHECK(is_p_regular(image, p));
        CHECK(mullineux(image, p) == la);
      });
}

TEST_CASE("sign twist is trivial in characteristic two") {
  for (int n = 1; n <= 14; ++n)
    for_each_p_regular(n, 2, [&](const Partition& la) {
      CAPTURE(format_partition(la));
      CHECK(mullineux(la, 2) == la);
    });
}

TEST_CASE("first column is preserved") {
  // The first symbol column is (|la|, height), so images keep the strip sizes.
  for (int n = 1; n <= 10; ++n)
    for_each_p_regular(n, 3, [&](const Partition& la) {
      MullineuxSymbol sa = mullineux_symbol(la, 3);
      MullineuxSymbol sb = mullineux_symbol(mullineux(la, 3), 3);
      CHECK(sa.sizes == sb.sizes);
    });
}
