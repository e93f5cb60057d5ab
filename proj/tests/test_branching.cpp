#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "partmod/alternating.hpp"
#include "partmod/branching.hpp"
#include "partmod/io.hpp"
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

std::string word_of(const SignatureReport& report) {
  std::string word;
  for (const auto& entry : report.sequence) word += entry.sign;
  return word;
}

// Cancel "+ above -" pairs in a random order instead of one sweep.
std::vector<bool> random_order_reduction(const SignatureReport& report, std::mt19937& rng) {
  std::vector<bool> alive(report.sequence.size(), true);
  for (;;) {
    std::vector<std::size_t> plus_sites;
    for (std::size_t i = 0; i < alive.size(); ++i) {
      if (!alive[i] || report.sequence[i].sign != '+') continue;
      std::size_t j = i + 1;
      while (j < alive.size() && !alive[j]) ++j;
      if (j < alive.size() && report.sequence[j].sign == '-') plus_sites.push_back(i);
    }
    if (plus_sites.empty()) return alive;
    std::size_t pick = plus_sites[rng() % plus_sites.size()];
    std::size_t j = pick + 1;
    while (!alive[j]) ++j;
    alive[pick] = false;
    alive[j] = false;
  }
}

void all_p_regular(int n, int p, const std::function<void(const Partition&)>& fn) {
  for_each_p_regular(n, p, fn);
}

}  // namespace

TEST_CASE("signature words and survivors") {
  SignatureReport r0 = signature(Partition({3, 1}), 2, 0);
  CHECK(word_of(r0) == "-++");
  CHECK(r0.epsilon == 1);
  CHECK(r0.phi == 2);
  REQUIRE(r0.good.has_value());
  CHECK(*r0.good == Node{1, 3});
  REQUIRE(r0.cogood.has_value());
  CHECK(*r0.cogood == Node{2, 2});

  SignatureReport r1 = signature(Partition({5, 3, 1}), 2, 0);
  CHECK(word_of(r1) == "-+-");
  CHECK(r1.epsilon == 1);
  CHECK(r1.phi == 0);
  CHECK(r1.normal_nodes() == std::vector<Node>{{1, 5}});
  CHECK_FALSE(r1.cogood.has_value());

  SignatureReport r2 = signature(Partition({5, 3, 1}), 2, 1);
  CHECK(word_of(r2) == "+-++");
  CHECK(r2.epsilon == 0);
  CHECK(r2.phi == 2);
  CHECK(r2.conormal_nodes() == std::vector<Node>{{3, 2}, {4, 1}});
  REQUIRE(r2.cogood.has_value());
  CHECK(*r2.cogood == Node{3, 2});

  SignatureReport r3 = signature(Partition({2, 1}), 2, 1);
  CHECK(word_of(r3) == "--");
  CHECK(r3.epsilon == 2);
  REQUIRE(r3.good.has_value());
  CHECK(*r3.good == Node{2, 1});

  CHECK(thrown_code([] { signature(Partition({1, 1}), 2, 0); }) == Errc::IrregularInput);
}

TEST_CASE("cancellation order does not matter") {
  std::mt19937 rng(20240817);
  for (int p : {2, 3})
    for (int n = 1; n <= 10; ++n)
      all_p_regular(n, p, [&](const Partition& la) {
        for (int res = 0; res < p; ++res) {
          SignatureReport report = signature(la, p, res);
          for (int trial = 0; trial < 4; ++trial) {
            std::vector<bool> alive = random_order_reduction(report, rng);
            for (std::size_t i = 0; i < alive.size(); ++i) {
              CAPTURE(format_partition(la));
              CHECK(alive[i] == report.sequence[i].survives);
            }
          }
        }
      });
}

TEST_CASE("normal and conormal counts") {
  CHECK(normal_count(Partition({5, 2, 1}), 2) == 3);
  CHECK(normal_count(Partition({4, 3, 2}), 2) == 3);
  CHECK(normal_count(Partition({5, 3}), 2) == 1);
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 10; ++n)
      all_p_regular(n, p, [&](const Partition& la) {
        CHECK(conormal_count(la, p) == normal_count(la, p) + 1);
      });
}

TEST_CASE("good node removal") {
  CHECK(remove_good(Partition({3, 1}), 2, 0, 1) == Partition({2, 1}));
  CHECK(remove_good(Partition({2, 1}), 2, 1, 2) == Partition({1}));
  CHECK(remove_good(Partition({5}), 3, 1, 1) == Partition({4}));
  CHECK(thrown_code([] { remove_good(Partition({3, 1}), 2, 0, 2); }) ==
        Errc::NotEnoughNormalNodes);
  CHECK(thrown_code([] { remove_good(Partition({5}), 3, 0, 1); }) ==
        Errc::NotEnoughNormalNodes);
}

TEST_CASE("cogood node addition") {
  CHECK(add_cogood(Partition({3, 1}), 2, 0, 1) == Partition({3, 2}));
  CHECK(add_cogood(Partition{}, 2, 0, 1) == Partition({1}));
  CHECK(add_cogood(Partition{}, 3, 0, 1) == Partition({1}));
  CHECK(thrown_code([] { add_cogood(Partition({1}), 2, 0, 1); }) ==
        Errc::NotEnoughConormalNodes);
}

TEST_CASE("crystal operators invert each other") {
  for (int p : {2, 3})
    for (int n = 1; n <= 10; ++n)
      all_p_regular(n, p, [&](const Partition& la) {
        for (int res = 0; res < p; ++res) {
          SignatureReport before = signature(la, p, res);
          if (before.epsilon < 1) continue;
          Partition down = remove_good(la, p, res, 1);
          SignatureReport after = signature(down, p, res);
          CHECK(after.epsilon == before.epsilon - 1);
          CHECK(after.phi == before.phi + 1);
          CHECK(add_cogood(down, p, res, 1) == la);
        }
      });
}

TEST_CASE("JS detection") {
  CHECK(is_js(Partition({5, 3, 1}), 2));
  CHECK(is_js(Partition({2, 1}), 3));
  CHECK_FALSE(is_js(Partition({3, 1}), 3));
  CHECK(is_js(Partition({4, 1, 1}), 3));
  CHECK_FALSE(is_js(Partition({5, 2}), 2));
  CHECK(is_js(Partition({4, 2}), 2));
  CHECK_FALSE(is_js(Partition{}, 2));
  CHECK_FALSE(is_js(Partition{}, 3));
  CHECK(thrown_code([] { is_js(Partition({2, 2, 2}), 3); }) == Errc::IrregularInput);

  for (int p : {2, 3, 5})
    for (int n = 1; n <= 10; ++n)
      all_p_regular(n, p, [&](const Partition& la) {
        CHECK(is_js_closed_form(la, p) == is_js_by_signature(la, p));
        CHECK(is_js(la, p) == (normal_count(la, p) == 1));
      });
}

TEST_CASE("JS distinguished nodes sit at the rim ends") {
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 12; ++n)
      all_p_regular(n, p, [&](const Partition& la) {
        if (!is_js(la, p)) return;
        CAPTURE(format_partition(la));
        auto rem = removable_nodes(la);
        auto add = addable_nodes(la);
        std::vector<Node> normals, conormals;
        for (int res = 0; res < p; ++res) {
          SignatureReport report = signature(la, p, res);
          auto ns = report.normal_nodes();
          auto cs = report.conormal_nodes();
          normals.insert(normals.end(), ns.begin(), ns.end());
          conormals.insert(conormals.end(), cs.begin(), cs.end());
        }
        std::sort(conormals.begin(), conormals.end());
        REQUIRE(normals.size() == 1);
        CHECK(normals.front() == rem.front());
        REQUIRE(conormals.size() == 2);
        CHECK(conormals[0] == add[add.size() - 2]);
        CHECK(conormals[1] == add[add.size() - 1]);
      });
}

TEST_CASE("split JS residues at p = 2") {
  for (int n = 5; n <= 16; ++n)
    all_p_regular(n, 2, [&](const Partition& la) {
      if (!splits(la, 2) || !is_js(la, 2)) return;
      CAPTURE(format_partition(la));
      SignatureReport zero = signature(la, 2, 0);
      SignatureReport one = signature(la, 2, 1);
      CHECK(zero.epsilon == 1);  // the unique normal node has residue 0
      if (n % 2 == 1) {
        CHECK(one.phi == 2);
        CHECK(zero.phi == 0);
      } else {
        REQUIRE(n % 4 == 0);
        CHECK(zero.phi == 2);
        CHECK(one.phi == 0);
      }
    });
}

TEST_CASE("branching multiplicities") {
  CHECK(branching_multiplicity(Partition({2, 1}), 2, {2, 1}) == 2);
  CHECK(branching_multiplicity(Partition({2, 1}), 2, {1, 2}) == 1);
  CHECK(thrown_code([] { branching_multiplicity(Partition({2, 1}), 2, {1, 1}); }) ==
        Errc::NotNormal);
  CHECK(thrown_code([] { branching_multiplicity(Partition({3, 1}), 2, {2, 1}); }) ==
        Errc::NotNormal);

  // A unique normal node always has multiplicity one.
  for (int p : {2, 3})
    for (int n = 1; n <= 10; ++n)
      all_p_regular(n, p, [&](const Partition& la) {
        if (!is_js(la, p)) return;
        CHECK(branching_multiplicity(la, p, removable_nodes(la).front()) == 1);
      });
}

TEST_CASE("two-row restriction certificates") {
  TwoRowRestriction a = two_row_restriction(Partition({5, 2}), 2);
  CHECK(a.digits == std::vector<int>{1, 1, 0});
  CHECK(a.t == 2);
  CHECK(a.delta == 0);
  REQUIRE(a.terms.size() == 3);
  CHECK(a.terms[0] == std::pair<Partition, int>{Partition({4, 2}), 1});
  CHECK(a.terms[1] == std::pair<Partition, int>{Partition({5, 1}), 2});
  CHECK(a.terms[2] == std::pair<Partition, int>{Partition({6}), 2});

  TwoRowRestriction b = two_row_restriction(Partition({4, 2}), 3);
  CHECK(b.digits == std::vector<int>{2, 0});
  CHECK(b.t == 1);
  CHECK(b.delta == 1);
  REQUIRE(b.terms.size() == 2);
  CHECK(b.terms[0] == std::pair<Partition, int>{Partition({3, 2}), 1});
  CHECK(b.terms[1] == std::pair<Partition, int>{Partition({4, 1}), 2});

  CHECK(thrown_code([] { two_row_restriction(Partition({4, 1}), 3); }) ==
        Errc::OutsideLemmaScope);
  CHECK(thrown_code([] { two_row_restriction(Partition({5, 3, 1}), 2); }) ==
        Errc::PreconditionViolated);
  CHECK(thrown_code([] { two_row_restriction(Partition({3, 3}), 3); }) ==
        Errc::PreconditionViolated);

  // Every surviving term is a p-regular partition one rank down.
  for (int p : {2, 3})
    for (int n = 4; n <= 16; ++n)
      for (int k = 1; 2 * k < n; ++k) {
        Partition la({n - k, k});
        if (!is_p_regular(la, p)) continue;
        try {
          TwoRowRestriction cert = two_row_restriction(la, p);
          CHECK(cert.t >= 1);
          bool base_present = false;
          for (const auto& [mu, mult] : cert.terms) {
            CHECK(mu.size() == n - 1);
            CHECK(is_p_regular(mu, p));
            CHECK((mult == 1 || mult == 2));
            if (mu == Partition({n - k - 1, k})) base_present = true;
          }
          if (k >= 1 && is_p_regular(Partition({n - k - 1, k}), p))
            CHECK(base_present);
        } catch (const Error& e) {
          CHECK(e.code() == Errc::OutsideLemmaScope);
        }
      }
}
