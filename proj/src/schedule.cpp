#include "addchain/schedule.hpp"

#include <sstream>

namespace addchain {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

std::string Schedule::listing() const {
  std::ostringstream out;
  for (const auto& ins : instructions)
    out << 't' << ins.dst << " = t" << ins.lhs << " * t" << ins.rhs << '\n';
  return out.str();
}

Schedule emit(const AdditionChain& chain) {
  Schedule schedule;
  schedule.instructions.reserve(chain.steps().size());
  for (std::size_t j = 2; j <= chain.terms().size(); ++j) {
    const Step& s = chain.step(j);
    schedule.instructions.push_back(
        {static_cast<std::uint32_t>(j), s.p, s.q});
  }
  return schedule;
}

std::uint64_t evaluate(const Schedule& schedule, std::uint64_t base,
                       std::uint64_t modulus) {
  if (modulus < 2)
    throw ChainError(Errc::BadModulus, "BadModulus: modulus must be >= 2");
  std::vector<std::uint64_t> regs(schedule.instructions.size() + 2, 0);
  regs[1] = base % modulus;
  for (const auto& ins : schedule.instructions) {
    // SSA shape guaranteed by emit: operands precede the destination
    regs[ins.dst] = mulmod(regs[ins.lhs], regs[ins.rhs], modulus);
  }
  return schedule.instructions.empty() ? regs[1]
                                       : regs[schedule.instructions.back().dst];
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent,
                     std::uint64_t modulus) {
  if (modulus < 2)
    throw ChainError(Errc::BadModulus, "BadModulus: modulus must be >= 2");
  std::uint64_t result = 1 % modulus;
  std::uint64_t acc = base % modulus;
  while (exponent) {
    if (exponent & 1) result = mulmod(result, acc, modulus);
    acc = mulmod(acc, acc, modulus);
    exponent >>= 1;
  }
  return result;
}

}  // namespace addchain
