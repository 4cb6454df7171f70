#include "addchain/search.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <limits>
#include <vector>

#include "addchain/cache.hpp"

namespace addchain {

namespace {

using Clock = std::chrono::steady_clock;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kMaxTarget = (std::uint64_t{1} << 63) - 1;

struct BudgetState {
  std::optional<Clock::time_point> deadline;
  std::optional<u64> max_nodes;
  u64 nodes = 0;
  bool exceeded = false;

  explicit BudgetState(const SearchBudget& b) {
    if (b.wall) deadline = Clock::now() + *b.wall;
    max_nodes = b.max_nodes;
  }

  bool tick() {
    ++nodes;
    if (exceeded) return true;
    if (max_nodes && nodes > *max_nodes)
      exceeded = true;
    else if (deadline && (nodes & 2047) == 0 && Clock::now() > *deadline)
      exceeded = true;
    return exceeded;
  }
};

// ceil(n / 2^shift), overflow-free.
inline u64 ceil_shift(u64 n, int shift) {
  if (shift >= 64) return n ? 1 : 0;
  return ((n - 1) >> shift) + 1;
}

inline int ceil_log2(u64 v) {
  return v <= 1 ? 0 : std::bit_width(v - 1);
}

/// Depth-limited DFS over strictly increasing chains from [1, 2].
/// Fast mode tries largest candidate sums first; lex mode tries smallest
/// first, so the first chain found is the lexicographically smallest one.
class DepthSearcher {
 public:
  DepthSearcher(u64 n, bool star, u64 min_regulator, BudgetState& budget)
      : n_(n), star_(star), min_regulator_(min_regulator), budget_(budget) {}

  bool run(int depth, bool lex, std::vector<u64>* witness) {
    lex_ = lex;
    terms_.clear();
    terms_.reserve(static_cast<std::size_t>(depth) + 2);
    terms_ = {1, 2};
    bufs_.resize(static_cast<std::size_t>(depth) + 1);
    const bool found = dfs(depth - 1);
    if (found && witness) *witness = terms_;
    return found;
  }

 private:
  bool dfs(int rem) {
    const u64 last = terms_.back();
    if (last == n_) return true;
    if (budget_.tick()) return false;
    if (rem <= 0) return false;
    if (last < ceil_shift(n_, rem)) return false;
    if ((n_ & 1) && rem >= 2 && !odd_reachable(last, rem)) return false;
    if (rem == 1) {
      if (!final_step_exists(last)) return false;
      terms_.push_back(n_);  // complete the chain so the witness is whole
      return true;
    }

    auto& buf = bufs_[static_cast<std::size_t>(rem)];
    gather_candidates(last, buf);
    const u64 floor_next = ceil_shift(n_, rem - 1);
    if (lex_) {
      for (u64 s : buf) {
        if (s < floor_next) continue;
        terms_.push_back(s);
        if (dfs(rem - 1)) return true;
        terms_.pop_back();
      }
    } else {
      for (u64 s : buf) {
        if (s < floor_next) break;
        terms_.push_back(s);
        if (dfs(rem - 1)) return true;
        terms_.pop_back();
      }
    }
    return false;
  }

  // Odd targets cannot be reached by a final doubling, so with rem >= 2
  // steps left the reach is at most M(rem-1) + M(rem-2) = 3*last*2^(rem-2).
  bool odd_reachable(u64 last, int rem) const {
    if (rem - 2 >= 64) return true;
    return 3 * static_cast<u128>(last) * (static_cast<u128>(1) << (rem - 2)) >= n_;
  }

  bool final_step_exists(u64 last) const {
    if (star_) {
      const u64 need = n_ - last;
      if (need < min_regulator_) return false;
      return std::binary_search(terms_.begin(), terms_.end(), need);
    }
    std::size_t i = 0, j = terms_.size() - 1;
    while (i <= j) {
      const u64 sum = terms_[i] + terms_[j];
      if (sum == n_) return true;
      if (sum < n_) {
        ++i;
      } else {
        if (j == 0) break;
        --j;
      }
    }
    return false;
  }

  void gather_candidates(u64 last, std::vector<u64>& buf) {
    buf.clear();
    const std::size_t k = terms_.size();
    if (star_) {
      for (std::size_t j = k; j-- > 0;) {
        const u64 t = terms_[j];
        if (t < min_regulator_) break;
        const u64 s = last + t;
        if (s <= n_) buf.push_back(s);
      }
      // already sorted descending
    } else {
      for (std::size_t i = k; i-- > 0;) {
        const u64 ti = terms_[i];
        if (2 * ti <= last) break;
        for (std::size_t j = i + 1; j-- > 0;) {
          const u64 s = ti + terms_[j];
          if (s <= last) break;
          if (s <= n_) buf.push_back(s);
        }
      }
      std::sort(buf.begin(), buf.end(), std::greater<>());
      buf.erase(std::unique(buf.begin(), buf.end()), buf.end());
    }
    if (lex_) std::reverse(buf.begin(), buf.end());
  }

  u64 n_;
  bool star_;
  u64 min_regulator_;
  BudgetState& budget_;
  bool lex_ = false;
  std::vector<u64> terms_;
  std::vector<std::vector<u64>> bufs_;
};

struct IddfsOutcome {
  bool exact = false;
  int length = -1;
  std::vector<u64> witness;
  int exhausted_below = 0;  // every depth < this was searched out
};

IddfsOutcome iddfs(u64 n, bool star, int start_depth, BudgetState& budget) {
  IddfsOutcome out;
  for (int d = std::max(start_depth, 2);; ++d) {
    DepthSearcher fast(n, star, 1, budget);
    std::vector<u64> fast_witness;
    const bool found = fast.run(d, false, &fast_witness);
    if (found) {
      out.exact = true;
      out.length = d;
      DepthSearcher lex(n, star, 1, budget);
      std::vector<u64> best;
      if (lex.run(d, true, &best))
        out.witness = std::move(best);
      else
        out.witness = std::move(fast_witness);  // budget ran out mid-tie-break
      return out;
    }
    if (budget.exceeded) {
      out.exhausted_below = d;
      return out;
    }
  }
}

AdditionChain trivial_chain(u64 n) {
  if (n == 1) return AdditionChain::infer({1});
  return AdditionChain::infer({1, 2});
}

}  // namespace

AdditionChain binary_upper_bound(u64 n) {
  if (n == 0) throw ChainError(Errc::NotAChain, "NotAChain: target must be positive");
  std::vector<u64> terms{1};
  std::vector<Step> steps;
  for (int b = std::bit_width(n) - 2; b >= 0; --b) {
    const auto k = static_cast<std::uint32_t>(terms.size());
    terms.push_back(terms.back() * 2);
    steps.push_back({k, k});
    if ((n >> b) & 1) {
      terms.push_back(terms.back() + 1);
      steps.push_back({static_cast<std::uint32_t>(k + 1), 1});
    }
  }
  return AdditionChain::validate(std::move(terms), std::move(steps));
}

int lower_bound(u64 n) {
  if (n == 0) return 0;
  return (std::bit_width(n) - 1) + ceil_log2(static_cast<u64>(std::popcount(n)));
}

SearchResult shortest_chain(u64 n, bool star_only, const SearchBudget& budget,
                            LengthCache* cache) {
  if (n == 0 || n > kMaxTarget)
    throw ChainError(Errc::NotAChain, "NotAChain: target out of range");
  const auto t0 = Clock::now();
  SearchResult res;
  res.target = n;

  if (n <= 2) {
    AdditionChain c = trivial_chain(n);
    res.shortest_length = res.star_shortest_length = static_cast<int>(c.length());
    res.length_lower_bound = res.length_upper_bound = static_cast<int>(c.length());
    res.star_witness = c;
    res.witness = std::move(c);
    res.complete = true;
    res.wall_time = Clock::now() - t0;
    return res;
  }

  BudgetState bs(budget);
  res.length_lower_bound = std::max(lower_bound(n), 2);
  res.length_upper_bound = static_cast<int>(binary_upper_bound(n).length());

  bool general_done = star_only;
  if (!star_only) {
    bool cache_hit = false;
    if (cache) {
      if (auto entry = cache->get(n)) {
        try {
          AdditionChain witness = AdditionChain::infer(entry->witness_terms);
          if (witness.target() == n &&
              static_cast<int>(witness.length()) == entry->length) {
            res.shortest_length = entry->length;
            res.witness = std::move(witness);
            general_done = cache_hit = true;
          }
        } catch (const ChainError&) {
          // unusable entry; recompute
        }
      }
    }
    if (!general_done) {
      IddfsOutcome out = iddfs(n, false, res.length_lower_bound, bs);
      if (out.exact) {
        res.shortest_length = out.length;
        res.witness = AdditionChain::infer(out.witness);
        general_done = true;
        if (cache && !cache_hit) cache->put(n, out.length, *res.witness);
      } else {
        res.length_lower_bound = std::max(res.length_lower_bound, out.exhausted_below);
      }
    }
  }

  bool star_done = false;
  if (general_done && !bs.exceeded) {
    const int star_start = star_only
                               ? res.length_lower_bound
                               : std::max(res.length_lower_bound, res.shortest_length);
    IddfsOutcome out = iddfs(n, true, star_start, bs);
    if (out.exact) {
      res.star_shortest_length = out.length;
      res.star_witness = AdditionChain::infer(out.witness);
      star_done = true;
    }
  }

  res.complete = general_done && star_done;
  if (res.complete) {
    const int exact = star_only ? res.star_shortest_length : res.shortest_length;
    res.length_lower_bound = res.length_upper_bound = exact;
  }
  res.nodes_expanded = bs.nodes;
  res.wall_time = Clock::now() - t0;
  return res;
}

std::map<u64, int> bfs_oracle(u64 n_max) {
  if (n_max > 4096)
    throw ChainError(Errc::BudgetExceeded,
                     "BudgetExceeded: bfs_oracle is limited to n_max <= 4096");
  std::map<u64, int> out;
  if (n_max < 2) return out;
  out[2] = 1;
  if (n_max == 2) return out;

  std::vector<int> len(n_max + 1, -1);
  len[1] = 0;
  len[2] = 1;
  std::size_t unfound = n_max - 2;

  // Flat frontier of fixed-width increasing term-sets. Identical-set
  // dominance never fires here: a state's predecessor is uniquely itself
  // minus its maximum, so two distinct states cannot produce the same
  // child set and there is nothing to dedup (hence also: no pruning).
  std::vector<std::uint16_t> frontier{1, 2};
  std::size_t width = 2;
  int level = 1;
  std::vector<std::uint16_t> next;
  std::vector<u64> sums;
  constexpr std::size_t kMaxFlat = std::size_t{1} << 27;

  while (unfound > 0) {
    ++level;
    if (level > 40)
      throw ChainError(Errc::BudgetExceeded, "BudgetExceeded: bfs_oracle level guard");
    next.clear();
    const std::size_t nstates = frontier.size() / width;
    if (nstates == 0)
      throw ChainError(Errc::BudgetExceeded, "BudgetExceeded: bfs_oracle dead frontier");
    for (std::size_t s = 0; s < nstates && unfound > 0; ++s) {
      const std::uint16_t* state = frontier.data() + s * width;
      const std::uint16_t last = state[width - 1];
      sums.clear();
      for (std::size_t i = 0; i < width; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
          const u64 sum = static_cast<u64>(state[i]) + state[j];
          if (sum > last && sum <= n_max) sums.push_back(sum);
        }
      }
      std::sort(sums.begin(), sums.end());
      sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
      for (u64 sum : sums) {
        if (len[sum] < 0) {
          len[sum] = level;
          if (--unfound == 0) break;
        }
        if (sum < n_max) {  // a state ending at n_max has no extensions
          next.insert(next.end(), state, state + width);
          next.push_back(static_cast<std::uint16_t>(sum));
        }
      }
      if (next.size() > kMaxFlat)
        throw ChainError(Errc::BudgetExceeded,
                         "BudgetExceeded: bfs_oracle frontier guard");
    }
    if (unfound == 0) break;
    width += 1;
    frontier.swap(next);
  }

  for (u64 m = 2; m <= n_max; ++m) out[m] = len[m];
  return out;
}

bool chain_exists_within(u64 n, int length, bool star_only,
                         const SearchBudget& budget) {
  if (n == 0 || n > kMaxTarget)
    throw ChainError(Errc::NotAChain, "NotAChain: target out of range");
  if (n <= 2) return static_cast<int>(n) - 1 <= length;
  if (length < 2) return false;
  BudgetState bs(budget);
  DepthSearcher searcher(n, star_only, 1, bs);
  const bool found = searcher.run(length, false, nullptr);
  if (!found && bs.exceeded)
    throw ChainError(Errc::BudgetExceeded,
                     "BudgetExceeded: feasibility undecided within budget");
  return found;
}

void enumerate_star_chains(u64 target, int max_len,
                           const std::function<void(const AdditionChain&)>& visit) {
  if (target > 64 || max_len > 12)
    throw ChainError(Errc::BudgetExceeded,
                     "BudgetExceeded: enumeration guarded to target <= 64, max_len <= 12");
  if (target < 2 || max_len < 1)
    throw ChainError(Errc::NotAChain, "NotAChain: nothing to enumerate");

  std::vector<u64> terms{1, 2};
  std::vector<Step> steps{{1, 1}};

  const std::function<void()> rec = [&] {
    const u64 last = terms.back();
    if (last == target) {
      visit(AdditionChain::validate(terms, steps));
      return;
    }
    const int used = static_cast<int>(terms.size()) - 1;
    if (used == max_len) return;
    if (last < ceil_shift(target, max_len - used)) return;
    const auto k = static_cast<std::uint32_t>(terms.size());
    for (std::uint32_t j = 0; j < k; ++j) {
      const u64 s = last + terms[j];
      if (s > target) break;
      terms.push_back(s);
      steps.push_back({k, j + 1});
      rec();
      terms.pop_back();
      steps.pop_back();
    }
  };
  rec();
}

std::vector<AdditionChain> enumerate_star_chains(u64 target, int max_len) {
  std::vector<AdditionChain> out;
  enumerate_star_chains(target, max_len,
                        [&](const AdditionChain& c) { out.push_back(c); });
  return out;
}

std::optional<bool> exists_star_chain_all_regulators_ge(
    u64 n, int length, u64 min_regulator, const SearchBudget& budget) {
  if (n < 3 || length < 2) return false;
  BudgetState bs(budget);
  DepthSearcher searcher(n, true, min_regulator, bs);
  const bool found = searcher.run(length, false, nullptr);
  if (!found && bs.exceeded) return std::nullopt;
  return found;
}

}  // namespace addchain
