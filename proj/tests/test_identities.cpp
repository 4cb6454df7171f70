#include <doctest.h>

#include "addchain/identities.hpp"
#include "addchain/search.hpp"
#include "test_helpers.hpp"

using namespace addchain;

namespace {

GeneratorSeq gens_of(std::initializer_list<std::uint64_t> terms) {
  return decompose(AdditionChain::infer(std::vector<std::uint64_t>(terms)));
}

}  // namespace

TEST_CASE("regulator sum telescopes to n - 1") {
  CHECK(regulator_sum(gens_of({1, 2, 3, 5})) == 4);
  CHECK(regulator_sum(gens_of({1, 2})) == 1);
  CHECK(regulator_sum(gens_of({1, 2, 3, 5, 8})) == 7);
}

TEST_CASE("length sandwich brackets the length") {
  const GeneratorSeq g = gens_of({1, 2, 3, 5, 8});
  const LengthSandwich s = length_sandwich(g);
  CHECK(s.lower.num == 7);
  CHECK(s.lower.den == 3);
  CHECK(s.upper.num == 7);
  CHECK(s.upper.den == 1);
  CHECK(sandwich_lower_holds(s, 4));
  CHECK(sandwich_upper_holds(s, 4));

  const LengthSandwich minimal = length_sandwich(gens_of({1, 2}));
  CHECK(minimal.lower.num == 1);
  CHECK(minimal.lower.den == 1);
  CHECK(sandwich_lower_holds(minimal, 1));
  CHECK(sandwich_upper_holds(minimal, 1));

  const LengthSandwich doubling = length_sandwich(gens_of({1, 2, 4, 8}));
  CHECK(doubling.lower.num == 7);
  CHECK(doubling.lower.den == 4);
  CHECK(sandwich_lower_holds(doubling, 3));
  CHECK(sandwich_upper_holds(doubling, 3));
}

TEST_CASE("determiner closed form") {
  const LhsRhs a = determiner_closed_form(gens_of({1, 2, 3, 5}));
  CHECK(a.lhs == 3);
  CHECK(a.rhs == 3);

  const LhsRhs b = determiner_closed_form(gens_of({1, 2, 3, 5, 8}));
  CHECK(b.lhs == 6);
  CHECK(b.rhs == 6);

  const LhsRhs boundary = determiner_closed_form(gens_of({1, 2, 4}));
  CHECK(boundary.lhs == 1);
  CHECK(boundary.rhs == 1);

  CHECK_THROWS_AS(determiner_closed_form(gens_of({1, 2})), ChainError);
}

TEST_CASE("step integral uses unit intervals over [2, delta-1]") {
  CHECK(step_integral(gens_of({1, 2, 3, 5, 8})) == 1);
  CHECK(step_integral(gens_of({1, 2, 3, 5})) == 0);
  CHECK(step_integral(gens_of({1, 2, 3, 5, 8, 13})) == 3);
  CHECK(step_integral(gens_of({1, 2})) == 0);
}

TEST_CASE("determiner integral identity") {
  const LhsRhs a = determiner_integral_identity(gens_of({1, 2, 3, 5}));
  CHECK(a.lhs == 6);
  CHECK(a.rhs == 6);

  const LhsRhs b = determiner_integral_identity(gens_of({1, 2, 3, 5, 8}));
  CHECK(b.lhs == 11);
  CHECK(b.rhs == 11);

  const LhsRhs boundary = determiner_integral_identity(gens_of({1, 2, 4}));
  CHECK(boundary.lhs == 3);
  CHECK(boundary.rhs == 3);
}

TEST_CASE("element sum identity") {
  const LhsRhs a = element_sum_identity(gens_of({1, 2, 3, 5}));
  CHECK(a.lhs == 10);
  CHECK(a.rhs == 10);

  const LhsRhs b = element_sum_identity(gens_of({1, 2, 3, 5, 8}));
  CHECK(b.lhs == 18);
  CHECK(b.rhs == 18);

  const LhsRhs boundary = element_sum_identity(gens_of({1, 2, 4}));
  CHECK(boundary.lhs == 6);
  CHECK(boundary.rhs == 6);
}

TEST_CASE("element sum lower bound, equality on pure doubling") {
  CHECK(element_sum_lower_bound(gens_of({1, 2, 3, 5})));
  CHECK(element_sum_lower_bound(gens_of({1, 2})));
  const GeneratorSeq doubling = gens_of({1, 2, 4, 8});
  CHECK(element_sum_lower_bound(doubling));
  std::uint64_t esum = 0;
  for (std::size_t j = 2; j <= doubling.size() + 1; ++j) esum += doubling.term(j);
  CHECK(esum == 2 * doubling.target() - 2);
}

TEST_CASE("evaluate_all aggregates the verdicts") {
  const IdentityReport rep = evaluate_all(AdditionChain::infer({1, 2, 3, 5, 8}));
  CHECK(rep.all_hold());
  CHECK(rep.target == 8);
  CHECK(rep.length == 4);
  CHECK(rep.regulator_sum == 7);
  CHECK(rep.determiner_sum_to_delta == 6);
  CHECK(rep.determiner_sum_full == 11);
  CHECK(rep.element_sum == 18);
  CHECK(rep.step_integral == 1);

  CHECK(evaluate_all(AdditionChain::infer({1, 2, 4, 5, 9})).all_hold());

  const AdditionChain non_star =
      AdditionChain::validate({1, 2, 3, 4}, {{1, 1}, {2, 1}, {2, 2}});
  CHECK_THROWS_AS(evaluate_all(non_star), ChainError);
}

TEST_CASE("minimal chain disengages the delta >= 2 identities") {
  const IdentityReport rep = evaluate_all(AdditionChain::infer({1, 2}));
  CHECK(rep.verdicts.telescoping);
  CHECK(rep.verdicts.element_sum_bound);
  CHECK_FALSE(rep.verdicts.determiner_closed_form.has_value());
  CHECK_FALSE(rep.verdicts.determiner_integral.has_value());
  CHECK_FALSE(rep.verdicts.element_sum_identity.has_value());
  CHECK(rep.all_hold());
}

TEST_CASE("every identity holds on the full small corpus") {
  std::uint64_t chains = 0;
  for (std::uint64_t n = 3; n <= 16; ++n) {
    enumerate_star_chains(n, 10, [&](const AdditionChain& c) {
      const GeneratorSeq g = decompose(c);
      const IdentityReport rep = evaluate_all(g);
      REQUIRE(rep.all_hold());
      if (g.size() >= 2) {
        const LhsRhs abel = abel_cross_check(g);
        REQUIRE(abel.lhs == abel.rhs);
        // proof-form of the integral identity, via a_{delta+1} - r_delta
        const std::size_t delta = g.size();
        const auto integral = determiner_integral_identity(g);
        const __int128 proof_rhs =
            static_cast<__int128>(g.target()) - 1 + (delta - 1) +
            g.determiner(delta + 1) - g.regulator(delta) -
            g.regulator(delta + 1) + step_integral(g);
        REQUIRE(static_cast<__int128>(integral.rhs) == proof_rhs);
      }
      ++chains;
    });
  }
  CHECK(chains > 1000);
}

TEST_CASE("step integral is monotone under chain extension") {
  for (std::uint64_t n = 3; n <= 12; ++n) {
    enumerate_star_chains(n, 8, [&](const AdditionChain& c) {
      const GeneratorSeq g = decompose(c);
      // extend by one doubling step
      std::vector<std::uint64_t> longer = c.terms();
      longer.push_back(2 * longer.back());
      const GeneratorSeq g2 = decompose(AdditionChain::infer(longer));
      REQUIRE(step_integral(g2) >= step_integral(g));
    });
  }
}

TEST_CASE("reports depend only on the term sequence") {
  // same terms, different provenance for the non-final step
  const AdditionChain a = AdditionChain::validate(
      {1, 2, 3, 4, 7}, {{1, 1}, {2, 1}, {3, 1}, {4, 3}});
  const GeneratorSeq g = decompose(a);
  CHECK(determiner_closed_form(g).lhs == determiner_closed_form(g).rhs);
  const AdditionChain b = AdditionChain::infer({1, 2, 3, 4, 7});
  CHECK(decompose(b).determiners() == g.determiners());
  CHECK(decompose(b).regulators() == g.regulators());
}
