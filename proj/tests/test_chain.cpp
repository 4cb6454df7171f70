#include <doctest.h>

#include <algorithm>

#include "addchain/chain.hpp"
#include "addchain/search.hpp"
#include "test_helpers.hpp"

using namespace addchain;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ChainError& e) {
    return e.code();
  }
  FAIL("expected a ChainError");
  return Errc::NotAChain;
}

}  // namespace

TEST_CASE("validate accepts the worked examples") {
  const AdditionChain c =
      AdditionChain::validate({1, 2, 3, 5}, {{1, 1}, {2, 1}, {3, 2}});
  CHECK(c.length() == 3);
  CHECK(c.target() == 5);

  const AdditionChain doubling = AdditionChain::validate({1, 2, 4}, {{1, 1}, {2, 2}});
  CHECK(doubling.length() == 2);
}

TEST_CASE("validate rejects malformed chains") {
  CHECK(code_of([] {
          AdditionChain::validate({1, 2, 5}, {{1, 1}, {2, 1}});
        }) == Errc::NotAChain);
  CHECK(code_of([] {
          AdditionChain::validate({1, 3, 4}, {{1, 1}, {2, 1}});
        }) == Errc::BadPrefix);
  CHECK(code_of([] {
          AdditionChain::validate({2, 4}, {{1, 1}});
        }) == Errc::BadPrefix);
  CHECK(code_of([] {
          AdditionChain::validate({1, 2, 4, 4}, {{1, 1}, {2, 2}, {3, 1}});
        }) == Errc::NotIncreasing);
  CHECK(code_of([] { AdditionChain::validate({}, {}); }) == Errc::NotAChain);
  // step indices must point strictly earlier
  CHECK(code_of([] {
          AdditionChain::validate({1, 2, 3}, {{1, 1}, {3, 1}});
        }) == Errc::NotAChain);
}

TEST_CASE("infer prefers star provenance") {
  const AdditionChain c = AdditionChain::infer({1, 2, 3, 4});
  CHECK(c.step(4) == Step{3, 1});  // 4 = 3 + 1, not 2 + 2
  CHECK(is_star_chain(c));
  CHECK(code_of([] { AdditionChain::infer({1, 2, 5}); }) == Errc::NotAChain);
}

TEST_CASE("is_star_chain judges the stored provenance") {
  CHECK(is_star_chain(AdditionChain::infer({1, 2, 3, 5, 8})));
  CHECK(is_star_chain(AdditionChain::infer({1, 2})));
  const AdditionChain non_star =
      AdditionChain::validate({1, 2, 3, 4}, {{1, 1}, {2, 1}, {2, 2}});
  CHECK_FALSE(is_star_chain(non_star));
}

TEST_CASE("decompose matches the definition") {
  const GeneratorSeq g = decompose(AdditionChain::infer({1, 2, 3, 5}));
  CHECK(g.determiners() == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(g.regulators() == std::vector<std::uint64_t>{1, 1, 2});

  const GeneratorSeq g2 = decompose(AdditionChain::infer({1, 2, 3, 5, 8}));
  CHECK(g2.determiners() == std::vector<std::uint64_t>{1, 2, 3, 5});
  CHECK(g2.regulators() == std::vector<std::uint64_t>{1, 1, 2, 3});

  const AdditionChain non_star =
      AdditionChain::validate({1, 2, 3, 4}, {{1, 1}, {2, 1}, {2, 2}});
  CHECK(code_of([&] { decompose(non_star); }) == Errc::NotStarChain);
}

TEST_CASE("recompose inverts decompose") {
  const AdditionChain minimal = recompose(GeneratorSeq::from_parts({1}, {1}));
  CHECK(minimal.terms() == std::vector<std::uint64_t>{1, 2});

  const AdditionChain c = recompose(GeneratorSeq::from_parts({1, 2, 3}, {1, 1, 2}));
  CHECK(c.terms() == std::vector<std::uint64_t>{1, 2, 3, 5});

  CHECK(code_of([] {
          GeneratorSeq::from_parts({1, 2}, {1, 5});
        }) == Errc::RegulatorNotInChain);
  CHECK(code_of([] {
          GeneratorSeq::from_parts({1, 3}, {1, 1});
        }) == Errc::NotAChain);  // recurrence broken
}

TEST_CASE("truncate keeps indices and rejects oversized drops") {
  const AdditionChain c = AdditionChain::infer({1, 2, 3, 5, 8});
  const TruncatedChain t = truncate(c, 2);
  CHECK(t.kept_terms() == std::vector<std::uint64_t>{3, 5, 8});
  CHECK(t.kept_indices == std::vector<std::uint32_t>{3, 4, 5});

  const TruncatedChain identity = truncate(c, 0);
  CHECK(identity.kept_terms() == c.terms());

  const AdditionChain two = AdditionChain::infer({1, 2});
  CHECK(code_of([&] { truncate(two, 2); }) == Errc::DropTooLarge);
}

TEST_CASE("telescoping holds for every star chain with target <= 24") {
  // independent subset enumeration, no length cap
  std::uint64_t checked = 0;
  for (std::uint64_t n = 2; n <= 24; ++n) {
    for (const auto& terms : testing::subset_star_chains(n)) {
      const GeneratorSeq g = decompose(AdditionChain::infer(terms));
      std::uint64_t sum = 0;
      for (auto r : g.regulators()) sum += r;
      REQUIRE(sum == n - 1);
      ++checked;
    }
  }
  CHECK(checked > 1000);  // the corpus is genuinely large
}

TEST_CASE("round-trip and monotonicity over the enumerated corpus") {
  for (std::uint64_t n = 2; n <= 16; ++n) {
    enumerate_star_chains(n, 12, [&](const AdditionChain& c) {
      const GeneratorSeq g = decompose(c);
      CHECK(recompose(g) == c);
      for (std::size_t j = 2; j < g.size() + 1; ++j)
        REQUIRE(g.determiner(j + 1) == g.determiner(j) + g.regulator(j));
    });
  }
}

TEST_CASE("the DFS enumerator agrees with the subset oracle") {
  for (std::uint64_t n = 2; n <= 16; ++n) {
    std::vector<std::vector<std::uint64_t>> expected;
    for (auto& terms : testing::subset_star_chains(n))
      if (terms.size() <= 13) expected.push_back(terms);
    std::sort(expected.begin(), expected.end());

    std::vector<std::vector<std::uint64_t>> got;
    enumerate_star_chains(n, 12, [&](const AdditionChain& c) { got.push_back(c.terms()); });
    std::sort(got.begin(), got.end());
    REQUIRE(got == expected);
  }
}

TEST_CASE("decompose rejects every enumerated non-star chain") {
  std::uint64_t stars = 0, non_stars = 0;
  testing::enumerate_general_chains(16, 5, [&](const std::vector<std::uint64_t>& terms,
                                               const std::vector<Step>& steps) {
    const AdditionChain c = AdditionChain::validate(terms, steps);
    if (is_star_chain(c)) {
      ++stars;
      CHECK(recompose(decompose(c)) == c);
    } else {
      ++non_stars;
      CHECK_THROWS_AS(decompose(c), ChainError);
    }
  });
  CHECK(stars > 100);
  CHECK(non_stars > 100);
}
