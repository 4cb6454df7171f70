#include <doctest.h>

#include "addchain/identities.hpp"
#include "addchain/scholz.hpp"
#include "addchain/search.hpp"

using namespace addchain;

namespace {

GeneratorSeq gens_of(std::vector<std::uint64_t> terms) {
  return decompose(AdditionChain::infer(std::move(terms)));
}

}  // namespace

TEST_CASE("classic check on the small cases") {
  const ScholzRecord r2 = classic_scholz_check(2);
  CHECK(r2.complete);
  CHECK(*r2.iota_n == 1);
  CHECK(*r2.iota_mersenne == 2);  // iota(3)
  CHECK(*r2.classic_ok);

  const ScholzRecord r3 = classic_scholz_check(3);
  CHECK(*r3.iota_mersenne == 4);  // iota(7)
  CHECK(*r3.classic_ok);

  const ScholzRecord r4 = classic_scholz_check(4);
  CHECK(*r4.iota_mersenne == 5);  // iota(15), equality case
  CHECK(*r4.classic_ok);
  CHECK(*r4.iota_mersenne == 3 + *r4.iota_n);
}

TEST_CASE("reformulated rhs worked examples") {
  CHECK(reformulated_rhs(gens_of({1, 2, 3, 5})) == 7);    // = iota(5) + 5 - 1
  CHECK(reformulated_rhs(gens_of({1, 2, 4, 8})) == 10);   // = iota(8) + 8 - 1
  CHECK(reformulated_rhs(gens_of({1, 2, 3})) == 4);       // = iota(3) + 3 - 1
  CHECK_THROWS_AS(reformulated_rhs(gens_of({1, 2})), ChainError);
}

TEST_CASE("consistency law over a solver sweep") {
  CHECK(*consistency_check(3));
  CHECK(*consistency_check(5));
  for (std::uint64_t n = 3; n <= 32; ++n) {
    const auto ok = consistency_check(n);
    REQUIRE(ok.has_value());
    REQUIRE(*ok);
  }
}

TEST_CASE("bound checks") {
  const BoundChecks b3 = bound_checks(3);
  CHECK(*b3.half_plus_ok);            // 2 <= 2
  CHECK_FALSE(*b3.half_applicable);   // only 1,2,3 with r_3 = 1

  const BoundChecks b7 = bound_checks(7);
  CHECK(*b7.half_plus_ok);  // 4 <= 4

  const BoundChecks b8 = bound_checks(8);
  CHECK(*b8.half_applicable);  // 1,2,4,8 qualifies
  CHECK(*b8.half_ok);          // 3 <= 4
}

TEST_CASE("sweep emits ordered records and flags budget cuts") {
  const auto records = sweep(2, 8);
  REQUIRE(records.size() == 7);
  for (std::size_t i = 0; i < records.size(); ++i) {
    REQUIRE(records[i].n == i + 2);
    REQUIRE(records[i].complete);
    REQUIRE(*records[i].classic_ok);
    REQUIRE_FALSE(records[i].falsified());
    if (records[i].n >= 3) {
      REQUIRE(*records[i].consistency_ok);
      REQUIRE(*records[i].reformulated_rhs ==
              static_cast<std::uint64_t>(*records[i].iota_n) + records[i].n - 1);
    }
  }

  const auto single = sweep(3, 3);
  REQUIRE(single.size() == 1);
  CHECK(single[0].n == 3);

  SearchBudget tiny;
  tiny.max_nodes = 1;
  const auto cut = sweep(2, 12, tiny);
  REQUIRE(cut.size() == 11);
  bool any_incomplete = false;
  for (const auto& rec : cut) {
    any_incomplete = any_incomplete || !rec.complete;
    if (rec.iota_mersenne)  // anything reported must still be true
      REQUIRE_FALSE(rec.falsified());
  }
  CHECK(any_incomplete);

  CHECK_THROWS_AS(sweep(2, 64), ChainError);  // Mersenne would overflow 64-bit
}
