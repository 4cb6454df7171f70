#include "addchain/identities.hpp"

#include <algorithm>
#include <limits>

namespace addchain {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

std::uint64_t narrow(u128 value, const char* what) {
  if (value > std::numeric_limits<std::uint64_t>::max())
    throw ChainError(Errc::Overflow, std::string("Overflow: ") + what);
  return static_cast<std::uint64_t>(value);
}

std::uint64_t narrow_signed(i128 value, const char* what) {
  if (value < 0 || value > static_cast<i128>(std::numeric_limits<std::uint64_t>::max()))
    throw ChainError(Errc::Overflow, std::string("Overflow: ") + what);
  return static_cast<std::uint64_t>(value);
}

void require_delta2(const GeneratorSeq& gens) {
  if (gens.size() < 2)
    throw ChainError(Errc::DegenerateLength,
                     "DegenerateLength: identity needs chain length >= 2");
}

}  // namespace

std::uint64_t regulator_sum(const GeneratorSeq& gens) {
  u128 sum = 0;
  for (auto r : gens.regulators()) sum += r;
  return narrow(sum, "regulator sum");
}

LengthSandwich length_sandwich(const GeneratorSeq& gens) {
  const auto& r = gens.regulators();
  const auto [lo, hi] = std::minmax_element(r.begin(), r.end());
  const std::uint64_t n_minus_1 = narrow(
      static_cast<u128>(gens.target()) - 1, "n - 1");
  return LengthSandwich{{n_minus_1, *hi}, {n_minus_1, *lo}};
}

bool sandwich_lower_holds(const LengthSandwich& s, std::size_t delta) {
  return static_cast<u128>(s.lower.num) <= static_cast<u128>(delta) * s.lower.den;
}

bool sandwich_upper_holds(const LengthSandwich& s, std::size_t delta) {
  return static_cast<u128>(delta) * s.upper.den <= static_cast<u128>(s.upper.num);
}

LhsRhs determiner_closed_form(const GeneratorSeq& gens) {
  require_delta2(gens);
  const std::size_t delta = gens.size();
  u128 lhs = 0;
  for (std::size_t j = 2; j <= delta; ++j) lhs += gens.determiner(j);
  u128 rhs = delta - 1;
  for (std::size_t j = 2; j + 1 <= delta; ++j)
    rhs += static_cast<u128>(delta - j) * gens.regulator(j);
  return {narrow(lhs, "determiner sum"), narrow(rhs, "closed form")};
}

std::uint64_t step_integral(const GeneratorSeq& gens) {
  const std::size_t delta = gens.size();
  if (delta <= 3) return 0;
  u128 prefix = 0;
  u128 total = 0;
  for (std::size_t m = 2; m <= delta - 2; ++m) {
    prefix += gens.regulator(m);
    total += prefix;
  }
  return narrow(total, "step integral");
}

LhsRhs determiner_integral_identity(const GeneratorSeq& gens) {
  require_delta2(gens);
  const std::size_t delta = gens.size();
  u128 lhs = 0;
  for (std::size_t j = 2; j <= delta + 1; ++j) lhs += gens.determiner(j);
  const i128 rhs = static_cast<i128>(gens.target()) - 1 + (delta - 1) +
                   gens.determiner(delta) - gens.regulator(delta + 1) +
                   step_integral(gens);
  return {narrow(lhs, "determiner sum"), narrow_signed(rhs, "integral identity")};
}

LhsRhs element_sum_identity(const GeneratorSeq& gens) {
  require_delta2(gens);
  const std::size_t delta = gens.size();
  u128 lhs = 0;
  for (std::size_t j = 2; j <= delta + 1; ++j) lhs += gens.term(j);
  const i128 rhs = 2 * (static_cast<i128>(gens.target()) - 1) + (delta - 1) +
                   gens.determiner(delta) - gens.regulator(delta + 1) +
                   step_integral(gens);
  return {narrow(lhs, "element sum"), narrow_signed(rhs, "element sum identity")};
}

bool element_sum_lower_bound(const GeneratorSeq& gens) {
  const std::size_t delta = gens.size();
  u128 sum = 0;
  for (std::size_t j = 2; j <= delta + 1; ++j) sum += gens.term(j);
  return sum >= 2 * static_cast<u128>(gens.target()) - 2;
}

LhsRhs abel_cross_check(const GeneratorSeq& gens) {
  const std::size_t delta = gens.size();
  u128 lhs = 0;
  u128 rhs = step_integral(gens);
  for (std::size_t j = 2; j + 1 <= delta; ++j) {
    lhs += static_cast<u128>(delta - j) * gens.regulator(j);
    rhs += gens.regulator(j);
  }
  return {narrow(lhs, "weighted regulator sum"), narrow(rhs, "abel form")};
}

IdentityReport evaluate_all(const AdditionChain& chain) {
  return evaluate_all(decompose(chain));
}

IdentityReport evaluate_all(const GeneratorSeq& gens) {
  const std::size_t delta = gens.size();
  IdentityReport rep;
  rep.target = gens.target();
  rep.length = delta;

  rep.regulator_sum = regulator_sum(gens);
  rep.verdicts.telescoping = rep.regulator_sum == rep.target - 1;
  rep.telescoping_residual = static_cast<std::int64_t>(rep.regulator_sum - (rep.target - 1));

  rep.sandwich = length_sandwich(gens);
  rep.verdicts.sandwich_lower = sandwich_lower_holds(rep.sandwich, delta);
  rep.verdicts.sandwich_upper = sandwich_upper_holds(rep.sandwich, delta);

  rep.step_integral = addchain::step_integral(gens);

  u128 full = 0, esum = 0;
  for (std::size_t j = 2; j <= delta + 1; ++j) {
    full += gens.determiner(j);
    esum += gens.term(j);
  }
  rep.determiner_sum_full = narrow(full, "determiner sum");
  rep.determiner_sum_to_delta =
      rep.determiner_sum_full - gens.determiner(delta + 1);
  rep.element_sum = narrow(esum, "element sum");
  rep.verdicts.element_sum_bound = element_sum_lower_bound(gens);

  if (delta >= 2) {
    const LhsRhs closed = determiner_closed_form(gens);
    rep.verdicts.determiner_closed_form = closed.holds();
    rep.determiner_closed_form_residual = closed.residual();

    const LhsRhs integral = determiner_integral_identity(gens);
    rep.verdicts.determiner_integral = integral.holds();
    rep.determiner_integral_residual = integral.residual();

    const LhsRhs element = element_sum_identity(gens);
    rep.verdicts.element_sum_identity = element.holds();
    rep.element_sum_identity_residual = element.residual();
  }
  return rep;
}

}  // namespace addchain
