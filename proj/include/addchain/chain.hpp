#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace addchain {

enum class Errc {
  NotAChain,
  BadPrefix,
  NotIncreasing,
  Overflow,
  NotStarChain,
  RegulatorNotInChain,
  DropTooLarge,
  DegenerateLength,
  BadModulus,
  BudgetExceeded,
  CorruptCache,
  BadRecord,
};

const char* errc_name(Errc code) noexcept;

class ChainError : public std::runtime_error {
 public:
  ChainError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// One addition step: term j = terms[p] + terms[q], indices 1-based, p >= q.
struct Step {
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  friend bool operator==(const Step&, const Step&) = default;
};

/// An addition chain 1, 2, ..., n with per-step addend provenance.
/// Terms are strictly increasing; chains always open "1, 2" (the single-term
/// chain [1] is the one exception, admitted so that trivial targets have a
/// witness). Instances are immutable once validated.
class AdditionChain {
 public:
  /// Validates and takes ownership. steps[i] is the provenance of
  /// terms[i + 1], i.e. there is one Step per term after the first.
  /// Throws ChainError with NotAChain / BadPrefix / NotIncreasing / Overflow.
  static AdditionChain validate(std::vector<std::uint64_t> terms,
                                std::vector<Step> steps);

  /// Validates a bare term sequence, inferring provenance. A star step
  /// (one addend equal to the previous term) is preferred where it exists,
  /// otherwise the pair with the largest indices is used.
  static AdditionChain infer(std::vector<std::uint64_t> terms);

  const std::vector<std::uint64_t>& terms() const noexcept { return terms_; }
  const std::vector<Step>& steps() const noexcept { return steps_; }

  std::uint64_t target() const noexcept { return terms_.back(); }
  /// Paper-style length: number of terms minus one.
  std::size_t length() const noexcept { return terms_.size() - 1; }

  /// 1-based term access, term(1) == 1.
  std::uint64_t term(std::size_t j) const { return terms_.at(j - 1); }
  /// Provenance of term j (j >= 2).
  const Step& step(std::size_t j) const { return steps_.at(j - 2); }

  friend bool operator==(const AdditionChain&, const AdditionChain&) = default;

 private:
  AdditionChain(std::vector<std::uint64_t> terms, std::vector<Step> steps)
      : terms_(std::move(terms)), steps_(std::move(steps)) {}

  std::vector<std::uint64_t> terms_;
  std::vector<Step> steps_;
};

/// The determiner/regulator sequences (a_j, r_j), j = 2..L, of a star chain:
/// s_j = a_j + r_j, a_2 = r_2 = 1, and a_{i+1} = a_i + r_i, which forces
/// a_j to equal the previous term. Every r_j is itself a chain element.
class GeneratorSeq {
 public:
  /// Builds from explicit sequences, checking all invariants.
  /// Throws RegulatorNotInChain / NotAChain on violation.
  static GeneratorSeq from_parts(std::vector<std::uint64_t> determiners,
                                 std::vector<std::uint64_t> regulators);

  /// Number of generators == chain length (delta).
  std::size_t size() const noexcept { return determiners_.size(); }
  std::uint64_t target() const noexcept {
    return determiners_.back() + regulators_.back();
  }

  /// 1-based paper indexing: j runs over 2..size()+1.
  std::uint64_t determiner(std::size_t j) const { return determiners_.at(j - 2); }
  std::uint64_t regulator(std::size_t j) const { return regulators_.at(j - 2); }
  /// Chain term s_j, j = 1..size()+1.
  std::uint64_t term(std::size_t j) const;

  const std::vector<std::uint64_t>& determiners() const noexcept { return determiners_; }
  const std::vector<std::uint64_t>& regulators() const noexcept { return regulators_; }

  friend bool operator==(const GeneratorSeq&, const GeneratorSeq&) = default;

 private:
  GeneratorSeq(std::vector<std::uint64_t> d, std::vector<std::uint64_t> r)
      : determiners_(std::move(d)), regulators_(std::move(r)) {}

  std::vector<std::uint64_t> determiners_;
  std::vector<std::uint64_t> regulators_;
};

/// A chain with a dropped prefix; kept indices stay 1-based into the base
/// chain so step provenance remains readable.
struct TruncatedChain {
  AdditionChain base;
  std::vector<std::uint32_t> kept_indices;

  std::vector<std::uint64_t> kept_terms() const;
};

/// True iff every step past [1, 2] uses the immediately preceding term as an
/// addend (addend order does not matter). Star-ness is judged on the stored
/// provenance, not on whether some other provenance would qualify.
bool is_star_chain(const AdditionChain& chain);

/// Definition-literal decomposition: a_j = s_{j-1}, r_j = s_j - s_{j-1}.
/// Throws NotStarChain for chains whose provenance is not star-form and
/// DegenerateLength for the single-term chain.
GeneratorSeq decompose(const AdditionChain& chain);

/// Inverse of decompose; recompose(decompose(c)) == c for star chains.
AdditionChain recompose(const GeneratorSeq& gens);

/// Drops `drop_prefix` leading terms. Throws DropTooLarge unless
/// drop_prefix < length (at least two terms are kept).
TruncatedChain truncate(const AdditionChain& chain, std::size_t drop_prefix);

}  // namespace addchain
