#include <doctest.h>

#include <random>

#include "addchain/schedule.hpp"
#include "addchain/search.hpp"

using namespace addchain;

TEST_CASE("emit and evaluate worked examples") {
  const Schedule s8 = emit(AdditionChain::infer({1, 2, 4, 8}));
  CHECK(s8.multiplications() == 3);
  CHECK(evaluate(s8, 3, 1000) == 561);  // 3^8 mod 1000

  const Schedule s2 = emit(AdditionChain::infer({1, 2}));
  CHECK(evaluate(s2, 7, 10) == 9);  // 49 mod 10

  const Schedule s5 = emit(AdditionChain::infer({1, 2, 3, 5}));
  CHECK(evaluate(s5, 2, 97) == 32);  // 2^5 mod 97
}

TEST_CASE("listing format") {
  const Schedule s = emit(AdditionChain::infer({1, 2, 3}));
  CHECK(s.listing() == "t2 = t1 * t1\nt3 = t2 * t1\n");
}

TEST_CASE("degenerate operands") {
  const Schedule s = emit(AdditionChain::infer({1, 2, 4}));
  CHECK(evaluate(s, 0, 97) == 0);
  CHECK_THROWS_AS(evaluate(s, 3, 1), ChainError);
  CHECK_THROWS_AS(evaluate(s, 3, 0), ChainError);
}

TEST_CASE("schedules match square-and-multiply on random triples") {
  std::mt19937_64 rng(20240311);
  std::uniform_int_distribution<std::uint64_t> base_dist(0, 1'000'000'007ULL);
  std::uniform_int_distribution<std::uint64_t> mod_dist(2, 1'000'000'007ULL);
  std::uniform_int_distribution<std::uint64_t> exp_dist(1, 512);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t base = base_dist(rng);
    const std::uint64_t modulus = mod_dist(rng);
    const std::uint64_t n = exp_dist(rng);
    const Schedule schedule = emit(binary_upper_bound(n));
    REQUIRE(evaluate(schedule, base, modulus) == powmod(base, n, modulus));
  }
}

TEST_CASE("shortest chains never need more multiplications than binary") {
  std::uint64_t strict_wins = 0;
  for (std::uint64_t n = 1; n <= 160; ++n) {
    const SearchResult res = shortest_chain(n);
    const Schedule best = emit(*res.witness);
    const Schedule binary = emit(binary_upper_bound(n));
    REQUIRE(best.multiplications() <= binary.multiplications());
    if (best.multiplications() < binary.multiplications()) ++strict_wins;
    REQUIRE(evaluate(best, 3, 1'000'000'007ULL) ==
            powmod(3, n, 1'000'000'007ULL));
  }
  CHECK(strict_wins > 0);  // e.g. n = 15: 5 vs 6
}
