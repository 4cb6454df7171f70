#include "addchain/chain.hpp"

#include <algorithm>
#include <limits>

namespace addchain {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotAChain: return "NotAChain";
    case Errc::BadPrefix: return "BadPrefix";
    case Errc::NotIncreasing: return "NotIncreasing";
    case Errc::Overflow: return "Overflow";
    case Errc::NotStarChain: return "NotStarChain";
    case Errc::RegulatorNotInChain: return "RegulatorNotInChain";
    case Errc::DropTooLarge: return "DropTooLarge";
    case Errc::DegenerateLength: return "DegenerateLength";
    case Errc::BadModulus: return "BadModulus";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::CorruptCache: return "CorruptCache";
    case Errc::BadRecord: return "BadRecord";
  }
  return "UnknownError";
}

namespace {

[[noreturn]] void fail(Errc code, const std::string& msg) {
  throw ChainError(code, std::string(errc_name(code)) + ": " + msg);
}

void check_shape(const std::vector<std::uint64_t>& terms) {
  if (terms.empty()) fail(Errc::NotAChain, "empty term sequence");
  if (terms.front() != 1) fail(Errc::BadPrefix, "chain must start with 1");
  if (terms.size() >= 2 && terms[1] != 2)
    fail(Errc::BadPrefix, "chain must open 1, 2");
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i] <= terms[i - 1])
      fail(Errc::NotIncreasing,
           "terms must be strictly increasing at index " + std::to_string(i + 1));
  }
}

}  // namespace

AdditionChain AdditionChain::validate(std::vector<std::uint64_t> terms,
                                      std::vector<Step> steps) {
  check_shape(terms);
  if (steps.size() + 1 != terms.size())
    fail(Errc::NotAChain, "expected one step per term after the first");
  for (std::size_t j = 2; j <= terms.size(); ++j) {
    Step& s = steps[j - 2];
    if (s.p < s.q) std::swap(s.p, s.q);
    if (s.q < 1 || s.p >= j)
      fail(Errc::NotAChain,
           "step " + std::to_string(j) + " references indices out of range");
    const std::uint64_t a = terms[s.p - 1];
    const std::uint64_t b = terms[s.q - 1];
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
      fail(Errc::Overflow, "step " + std::to_string(j) + " overflows 64 bits");
    if (a + b != terms[j - 1])
      fail(Errc::NotAChain, "step " + std::to_string(j) + ": " +
                                std::to_string(a) + "+" + std::to_string(b) +
                                " != " + std::to_string(terms[j - 1]));
  }
  return AdditionChain(std::move(terms), std::move(steps));
}

AdditionChain AdditionChain::infer(std::vector<std::uint64_t> terms) {
  check_shape(terms);
  std::vector<Step> steps;
  steps.reserve(terms.size() > 0 ? terms.size() - 1 : 0);
  for (std::size_t j = 2; j <= terms.size(); ++j) {
    const std::uint64_t want = terms[j - 1];
    Step found{0, 0};
    // Star provenance first: addend terms[j-2] plus some earlier term.
    const std::uint64_t prev = terms[j - 2];
    if (want > prev) {
      const std::uint64_t need = want - prev;
      for (std::size_t q = j - 1; q >= 1; --q) {
        if (terms[q - 1] == need) {
          found = {static_cast<std::uint32_t>(j - 1), static_cast<std::uint32_t>(q)};
          break;
        }
        if (terms[q - 1] < need) break;
      }
    }
    if (found.p == 0) {
      for (std::size_t p = j - 1; p >= 1 && found.p == 0; --p) {
        for (std::size_t q = p; q >= 1; --q) {
          const unsigned __int128 sum =
              static_cast<unsigned __int128>(terms[p - 1]) + terms[q - 1];
          if (sum == want) {
            found = {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q)};
            break;
          }
          if (sum < want) break;
        }
      }
    }
    if (found.p == 0)
      fail(Errc::NotAChain, "term " + std::to_string(want) +
                                " is not a sum of two earlier terms");
    steps.push_back(found);
  }
  return AdditionChain(std::move(terms), std::move(steps));
}

std::uint64_t GeneratorSeq::term(std::size_t j) const {
  if (j == 1) return 1;
  return determiner(j) + regulator(j);
}

GeneratorSeq GeneratorSeq::from_parts(std::vector<std::uint64_t> determiners,
                                      std::vector<std::uint64_t> regulators) {
  if (determiners.empty() || determiners.size() != regulators.size())
    fail(Errc::NotAChain, "determiner/regulator sequences must be nonempty and equal length");
  if (determiners[0] != 1 || regulators[0] != 1)
    fail(Errc::NotAChain, "first generator must be 1 + 1");
  std::vector<std::uint64_t> terms{1, 2};
  for (std::size_t i = 1; i < determiners.size(); ++i) {
    if (determiners[i] != determiners[i - 1] + regulators[i - 1])
      fail(Errc::NotAChain, "determiner recurrence broken at generator " +
                                std::to_string(i + 2));
    const std::uint64_t r = regulators[i];
    if (!std::binary_search(terms.begin(), terms.end(), r))
      fail(Errc::RegulatorNotInChain,
           "regulator " + std::to_string(r) + " is not an earlier chain term");
    if (determiners[i] > std::numeric_limits<std::uint64_t>::max() - r)
      fail(Errc::Overflow, "term overflows 64 bits");
    terms.push_back(determiners[i] + r);
  }
  return GeneratorSeq(std::move(determiners), std::move(regulators));
}

bool is_star_chain(const AdditionChain& chain) {
  const auto& terms = chain.terms();
  for (std::size_t j = 3; j <= terms.size(); ++j) {
    const Step& s = chain.step(j);
    if (s.p != j - 1 && s.q != j - 1) return false;
  }
  return true;
}

GeneratorSeq decompose(const AdditionChain& chain) {
  if (chain.terms().size() < 2)
    fail(Errc::DegenerateLength, "single-term chain has no generators");
  if (!is_star_chain(chain))
    fail(Errc::NotStarChain, "decomposition requires star-form provenance");
  const auto& terms = chain.terms();
  std::vector<std::uint64_t> a, r;
  a.reserve(terms.size() - 1);
  r.reserve(terms.size() - 1);
  for (std::size_t j = 2; j <= terms.size(); ++j) {
    a.push_back(terms[j - 2]);
    r.push_back(terms[j - 1] - terms[j - 2]);
  }
  return GeneratorSeq::from_parts(std::move(a), std::move(r));
}

AdditionChain recompose(const GeneratorSeq& gens) {
  GeneratorSeq checked = GeneratorSeq::from_parts(gens.determiners(), gens.regulators());
  const std::size_t delta = checked.size();
  std::vector<std::uint64_t> terms{1};
  std::vector<Step> steps;
  terms.reserve(delta + 1);
  steps.reserve(delta);
  for (std::size_t j = 2; j <= delta + 1; ++j) {
    const std::uint64_t r = checked.regulator(j);
    std::uint32_t q = 0;
    for (std::size_t i = terms.size(); i >= 1; --i) {
      if (terms[i - 1] == r) {
        q = static_cast<std::uint32_t>(i);
        break;
      }
    }
    // from_parts established membership
    steps.push_back({static_cast<std::uint32_t>(j - 1), q});
    terms.push_back(checked.determiner(j) + r);
  }
  return AdditionChain::validate(std::move(terms), std::move(steps));
}

TruncatedChain truncate(const AdditionChain& chain, std::size_t drop_prefix) {
  if (drop_prefix >= chain.length())
    fail(Errc::DropTooLarge, "cannot drop " + std::to_string(drop_prefix) +
                                 " terms from a chain of length " +
                                 std::to_string(chain.length()));
  std::vector<std::uint32_t> kept;
  kept.reserve(chain.terms().size() - drop_prefix);
  for (std::size_t j = drop_prefix + 1; j <= chain.terms().size(); ++j)
    kept.push_back(static_cast<std::uint32_t>(j));
  return TruncatedChain{chain, std::move(kept)};
}

std::vector<std::uint64_t> TruncatedChain::kept_terms() const {
  std::vector<std::uint64_t> out;
  out.reserve(kept_indices.size());
  for (auto j : kept_indices) out.push_back(base.term(j));
  return out;
}

}  // namespace addchain
