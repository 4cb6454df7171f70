#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "addchain/chain.hpp"

namespace addchain {

/// Straight-line exponentiation program derived from a chain. Register t_j
/// holds base^(terms[j]); registers are written once and never overwritten.
struct Schedule {
  struct Instruction {
    std::uint32_t dst;  // register index, 1-based by chain position
    std::uint32_t lhs;
    std::uint32_t rhs;
    friend bool operator==(const Instruction&, const Instruction&) = default;
  };
  std::vector<Instruction> instructions;

  std::size_t multiplications() const noexcept { return instructions.size(); }
  /// One line per instruction: "t<j> = t<p> * t<q>".
  std::string listing() const;
};

/// One multiplication per chain step.
Schedule emit(const AdditionChain& chain);

/// Runs the schedule over `base` modulo `modulus`; the result equals
/// base^target mod modulus. Throws BadModulus for modulus < 2.
std::uint64_t evaluate(const Schedule& schedule, std::uint64_t base,
                       std::uint64_t modulus);

/// Reference square-and-multiply, used to cross-check schedules.
std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent,
                     std::uint64_t modulus);

}  // namespace addchain
