#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "addchain/chain.hpp"

namespace addchain {

class LengthCache;

/// Work limits for a search. Empty limits mean unlimited. Exceeding a
/// budget is a distinct, reported outcome, never a silent approximation.
struct SearchBudget {
  std::optional<std::chrono::milliseconds> wall;
  std::optional<std::uint64_t> max_nodes;

  bool unlimited() const { return !wall && !max_nodes; }
};

struct SearchResult {
  std::uint64_t target = 0;
  /// True when every requested part of the search ran to exactness.
  bool complete = false;
  /// Exact shortest length, or -1 when unknown (budget, or star-only mode).
  int shortest_length = -1;
  std::optional<AdditionChain> witness;
  /// Exact shortest star-chain length, or -1 when unknown.
  int star_shortest_length = -1;
  std::optional<AdditionChain> star_witness;
  /// Always meaningful: proven bracket for the shortest length.
  int length_lower_bound = 0;
  int length_upper_bound = 0;
  std::uint64_t nodes_expanded = 0;
  std::chrono::nanoseconds wall_time{0};
};

/// Square-and-multiply chain for n: length floor(log2 n) + popcount(n) - 1.
/// Always a star chain.
AdditionChain binary_upper_bound(std::uint64_t n);

/// floor(log2 n) + ceil(log2 popcount(n)); never exceeds the shortest
/// length (checked against the BFS oracle in the test suite).
int lower_bound(std::uint64_t n);

/// Exact shortest addition chain via iterative-deepening DFS with a
/// doubling-reach prune. Deterministic: among optimal chains the witness is
/// the lexicographically smallest term sequence. With star_only the search
/// space is restricted to star chains and only the star fields are filled;
/// otherwise both the general and the star optimum are computed.
/// A cache, when given, is consulted and updated for general results.
SearchResult shortest_chain(std::uint64_t n, bool star_only = false,
                            const SearchBudget& budget = {},
                            LengthCache* cache = nullptr);

/// Ground-truth shortest lengths for every 2 <= m <= n_max by breadth-first
/// enumeration over term-set states, deduplicated per level by identical
/// term-sets only. Memory-guarded: n_max <= 4096, and oversized frontiers
/// abort with BudgetExceeded.
std::map<std::uint64_t, int> bfs_oracle(std::uint64_t n_max);

/// Every star chain producing exactly `target` with length <= max_len, in
/// lexicographic term order, each exactly once. Guards: target <= 64,
/// max_len <= 12 (BudgetExceeded otherwise).
void enumerate_star_chains(std::uint64_t target, int max_len,
                           const std::function<void(const AdditionChain&)>& visit);
std::vector<AdditionChain> enumerate_star_chains(std::uint64_t target, int max_len);

/// Whether some star chain for n of length exactly `length` has every
/// regulator past the opening step >= min_regulator. nullopt if the budget
/// ran out before the question was settled.
std::optional<bool> exists_star_chain_all_regulators_ge(
    std::uint64_t n, int length, std::uint64_t min_regulator,
    const SearchBudget& budget = {});

/// Depth-limited feasibility: is there a chain for n of length <= `length`?
/// Never consults lower_bound, so it can refute it independently. Throws
/// BudgetExceeded if the budget dies before the question is settled.
bool chain_exists_within(std::uint64_t n, int length, bool star_only = false,
                         const SearchBudget& budget = {});

}  // namespace addchain
