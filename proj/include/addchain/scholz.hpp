#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "addchain/chain.hpp"
#include "addchain/search.hpp"

namespace addchain {

class LengthCache;

/// Per-n verdicts for both conjecture formulations and the length bounds.
/// Fields that a budget cut off stay disengaged and the record is flagged
/// incomplete instead of guessed.
struct ScholzRecord {
  std::uint64_t n = 0;
  std::uint64_t mersenne = 0;  // 2^n - 1
  std::optional<int> iota_n;
  std::optional<int> star_iota_n;
  std::optional<int> iota_mersenne;
  /// iota(2^n - 1) <= n - 1 + iota(n).
  std::optional<bool> classic_ok;
  /// sum a_j + r_iota + r_{iota+1} + 1 - step integral, over the
  /// deterministic shortest star witness; needs n >= 3.
  std::optional<std::uint64_t> reformulated_rhs;
  std::optional<bool> reformulated_ok;
  /// reformulated_rhs == iota(n) + n - 1 (witness-independent identity).
  std::optional<bool> consistency_ok;
  /// Whether some shortest star chain keeps every regulator past the
  /// opening step >= 2 (the hypothesis of the n/2 bound).
  std::optional<bool> half_applicable;
  std::optional<bool> half_ok;  // engaged only when applicable
  std::optional<bool> half_plus_ok;
  bool complete = false;

  /// True when some engaged verdict is false — a falsification to report
  /// loudly, never suppress.
  bool falsified() const {
    const auto bad = [](const std::optional<bool>& v) { return v && !*v; };
    return bad(classic_ok) || bad(reformulated_ok) || bad(consistency_ok) ||
           bad(half_ok) || bad(half_plus_ok);
  }
};

/// Classic formulation for one n (2 <= n <= 63).
ScholzRecord classic_scholz_check(std::uint64_t n, const SearchBudget& budget = {},
                                  LengthCache* cache = nullptr);

/// RHS of the reformulated conjecture for a shortest star chain's
/// decomposition. Throws DegenerateLength for chains shorter than 2.
std::uint64_t reformulated_rhs(const GeneratorSeq& gens);

/// reformulated_rhs == iota(n) + n - 1 for the solver's deterministic
/// shortest star witness; nullopt if the budget ran out first.
std::optional<bool> consistency_check(std::uint64_t n, const SearchBudget& budget = {},
                                      LengthCache* cache = nullptr);

struct BoundChecks {
  std::optional<bool> half_applicable;
  std::optional<bool> half_ok;
  std::optional<bool> half_plus_ok;
};

/// iota(n) <= (n+1)/2 unconditionally; iota(n) <= n/2 when some shortest
/// star chain has all regulators >= 2 past the opening step (else N/A).
BoundChecks bound_checks(std::uint64_t n, const SearchBudget& budget = {},
                         LengthCache* cache = nullptr);

/// One record per n in [n_min, n_max], emitted in order of n. The budget is
/// a shared deadline: once spent, later records come back incomplete.
std::vector<ScholzRecord> sweep(std::uint64_t n_min, std::uint64_t n_max,
                                const SearchBudget& budget = {},
                                LengthCache* cache = nullptr,
                                const std::function<void(const ScholzRecord&)>& emit = {});

}  // namespace addchain
