#pragma once

#include <cstdint>
#include <optional>

#include "addchain/chain.hpp"

namespace addchain {

/// Exact rational num/den, kept unreduced for transparency.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Both sides of an identity, evaluated independently.
struct LhsRhs {
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  std::int64_t residual() const { return static_cast<std::int64_t>(lhs - rhs); }
  bool holds() const { return lhs == rhs; }
};

/// Sum of all regulators; equals n - 1 for every valid decomposition
/// (the sum telescopes through the chain).
std::uint64_t regulator_sum(const GeneratorSeq& gens);

/// ((n-1)/sup r_j, (n-1)/inf r_j); the chain length always lies between.
struct LengthSandwich {
  Rational lower;
  Rational upper;
};
LengthSandwich length_sandwich(const GeneratorSeq& gens);

/// Exact check lower <= delta <= upper by cross-multiplication.
bool sandwich_lower_holds(const LengthSandwich& s, std::size_t delta);
bool sandwich_upper_holds(const LengthSandwich& s, std::size_t delta);

/// lhs = sum_{j=2}^{delta} a_j, rhs = (delta-1) + sum_{j=2}^{delta-1} (delta-j) r_j.
/// Throws DegenerateLength for delta < 2.
LhsRhs determiner_closed_form(const GeneratorSeq& gens);

/// Integral of the left-closed step function t -> sum_{2<=j<=floor(t)} r_j
/// over [2, delta-1]: sum_{m=2}^{delta-2} R(m). Zero when delta <= 3.
std::uint64_t step_integral(const GeneratorSeq& gens);

/// lhs = sum_{j=2}^{delta+1} a_j,
/// rhs = (n-1) + (delta-1) + a_delta - r_{delta+1} + step_integral.
/// Throws DegenerateLength for delta < 2.
LhsRhs determiner_integral_identity(const GeneratorSeq& gens);

/// lhs = sum_{j=2}^{delta+1} s_j, rhs = 2(n-1) + (delta-1) + a_delta
/// - r_{delta+1} + step_integral. Throws DegenerateLength for delta < 2.
LhsRhs element_sum_identity(const GeneratorSeq& gens);

/// sum s_j >= 2n - 2; equality exactly for pure doubling chains.
bool element_sum_lower_bound(const GeneratorSeq& gens);

/// Partial-summation cross-check:
/// sum_{j=2}^{delta-1} (delta-j) r_j == sum_{j=2}^{delta-1} r_j + step_integral.
LhsRhs abel_cross_check(const GeneratorSeq& gens);

/// Evaluation of every identity for one star chain. Verdicts that require
/// delta >= 2 are disengaged (nullopt) on the minimal chain [1, 2].
struct IdentityVerdicts {
  bool telescoping = false;
  bool sandwich_lower = false;
  bool sandwich_upper = false;
  std::optional<bool> determiner_closed_form;
  std::optional<bool> determiner_integral;
  bool element_sum_bound = false;
  std::optional<bool> element_sum_identity;

  bool all_hold() const {
    return telescoping && sandwich_lower && sandwich_upper &&
           determiner_closed_form.value_or(true) &&
           determiner_integral.value_or(true) && element_sum_bound &&
           element_sum_identity.value_or(true);
  }
};

struct IdentityReport {
  std::uint64_t target = 0;
  std::size_t length = 0;
  std::uint64_t regulator_sum = 0;
  std::uint64_t determiner_sum_to_delta = 0;  // sum_{j=2}^{delta} a_j
  std::uint64_t determiner_sum_full = 0;      // sum_{j=2}^{delta+1} a_j
  std::uint64_t element_sum = 0;              // sum_{j=2}^{delta+1} s_j
  std::uint64_t step_integral = 0;
  LengthSandwich sandwich;
  IdentityVerdicts verdicts;
  std::int64_t telescoping_residual = 0;
  std::int64_t determiner_closed_form_residual = 0;
  std::int64_t determiner_integral_residual = 0;
  std::int64_t element_sum_identity_residual = 0;

  bool all_hold() const { return verdicts.all_hold(); }
};

/// Decomposes and evaluates everything. Throws NotStarChain.
IdentityReport evaluate_all(const AdditionChain& chain);

/// Same, for an already-decomposed chain.
IdentityReport evaluate_all(const GeneratorSeq& gens);

}  // namespace addchain
