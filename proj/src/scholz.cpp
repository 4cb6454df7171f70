#include "addchain/scholz.hpp"

#include <limits>

#include "addchain/cache.hpp"
#include "addchain/identities.hpp"

namespace addchain {

namespace {

using Clock = std::chrono::steady_clock;

/// Shared deadline so one stubborn target cannot starve earlier ones of
/// their honest "incomplete" flag.
struct Deadline {
  std::optional<Clock::time_point> at;
  std::optional<std::uint64_t> max_nodes;

  explicit Deadline(const SearchBudget& b) {
    if (b.wall) at = Clock::now() + *b.wall;
    max_nodes = b.max_nodes;
  }

  SearchBudget remaining() const {
    SearchBudget b;
    if (at) {
      const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
          *at - Clock::now());
      b.wall = left.count() > 0 ? left : std::chrono::milliseconds(0);
    }
    b.max_nodes = max_nodes;
    return b;
  }
};

ScholzRecord build_record(std::uint64_t n, const Deadline& deadline,
                          LengthCache* cache) {
  if (n < 2 || n > 63)
    throw ChainError(Errc::BadRecord,
                     "BadRecord: Mersenne targets need 2 <= n <= 63 in 64-bit");
  ScholzRecord rec;
  rec.n = n;
  rec.mersenne = (std::uint64_t{1} << n) - 1;

  const SearchResult rn = shortest_chain(n, false, deadline.remaining(), cache);
  bool complete = rn.complete;
  if (rn.shortest_length >= 0) rec.iota_n = rn.shortest_length;
  if (rn.star_shortest_length >= 0) rec.star_iota_n = rn.star_shortest_length;

  const SearchResult rm =
      shortest_chain(rec.mersenne, false, deadline.remaining(), cache);
  complete = complete && rm.complete;
  if (rm.shortest_length >= 0) rec.iota_mersenne = rm.shortest_length;

  if (rec.iota_n && rec.iota_mersenne)
    rec.classic_ok =
        static_cast<std::uint64_t>(*rec.iota_mersenne) <= n - 1 + *rec.iota_n;

  if (n >= 3 && rn.star_witness && rn.star_witness->length() >= 2) {
    const GeneratorSeq gens = decompose(*rn.star_witness);
    rec.reformulated_rhs = reformulated_rhs(gens);
    if (rec.iota_mersenne)
      rec.reformulated_ok =
          static_cast<std::uint64_t>(*rec.iota_mersenne) <= *rec.reformulated_rhs;
    if (rec.iota_n)
      rec.consistency_ok =
          *rec.reformulated_rhs == static_cast<std::uint64_t>(*rec.iota_n) + n - 1;
  }

  if (rec.iota_n) {
    rec.half_plus_ok = 2 * static_cast<std::uint64_t>(*rec.iota_n) <= n + 1;
    if (n >= 3 && rec.star_iota_n) {
      const auto qualifying = exists_star_chain_all_regulators_ge(
          n, *rec.star_iota_n, 2, deadline.remaining());
      if (qualifying) {
        rec.half_applicable = *qualifying;
        if (*qualifying)
          rec.half_ok = 2 * static_cast<std::uint64_t>(*rec.iota_n) <= n;
      } else {
        complete = false;
      }
    } else if (n == 2) {
      rec.half_applicable = false;
    }
  }

  rec.complete = complete;
  return rec;
}

}  // namespace

ScholzRecord classic_scholz_check(std::uint64_t n, const SearchBudget& budget,
                                  LengthCache* cache) {
  const Deadline deadline(budget);
  return build_record(n, deadline, cache);
}

std::uint64_t reformulated_rhs(const GeneratorSeq& gens) {
  const std::size_t iota = gens.size();
  if (iota < 2)
    throw ChainError(Errc::DegenerateLength,
                     "DegenerateLength: reformulated bound needs length >= 2");
  unsigned __int128 sum = 0;
  for (std::size_t j = 2; j <= iota; ++j) sum += gens.determiner(j);
  const __int128 rhs = static_cast<__int128>(sum) + gens.regulator(iota) +
                       gens.regulator(iota + 1) + 1 - step_integral(gens);
  if (rhs < 0 || rhs > static_cast<__int128>(std::numeric_limits<std::uint64_t>::max()))
    throw ChainError(Errc::Overflow, "Overflow: reformulated bound");
  return static_cast<std::uint64_t>(rhs);
}

std::optional<bool> consistency_check(std::uint64_t n, const SearchBudget& budget,
                                      LengthCache* cache) {
  if (n < 3)
    throw ChainError(Errc::BadRecord, "BadRecord: consistency check needs n >= 3");
  const SearchResult res = shortest_chain(n, false, budget, cache);
  if (!res.complete || !res.star_witness) return std::nullopt;
  const std::uint64_t rhs = reformulated_rhs(decompose(*res.star_witness));
  return rhs == static_cast<std::uint64_t>(res.shortest_length) + n - 1;
}

BoundChecks bound_checks(std::uint64_t n, const SearchBudget& budget,
                         LengthCache* cache) {
  if (n < 3)
    throw ChainError(Errc::BadRecord, "BadRecord: bound checks need n >= 3");
  const Deadline deadline(budget);
  BoundChecks out;
  const SearchResult res = shortest_chain(n, false, deadline.remaining(), cache);
  if (res.shortest_length < 0) return out;
  out.half_plus_ok = 2 * static_cast<std::uint64_t>(res.shortest_length) <= n + 1;
  if (res.star_shortest_length < 0) return out;
  const auto qualifying = exists_star_chain_all_regulators_ge(
      n, res.star_shortest_length, 2, deadline.remaining());
  if (!qualifying) return out;
  out.half_applicable = *qualifying;
  if (*qualifying)
    out.half_ok = 2 * static_cast<std::uint64_t>(res.shortest_length) <= n;
  return out;
}

std::vector<ScholzRecord> sweep(std::uint64_t n_min, std::uint64_t n_max,
                                const SearchBudget& budget, LengthCache* cache,
                                const std::function<void(const ScholzRecord&)>& emit) {
  if (n_min < 2 || n_max > 63 || n_min > n_max)
    throw ChainError(Errc::BadRecord,
                     "BadRecord: sweep range must satisfy 2 <= n_min <= n_max <= 63");
  const Deadline deadline(budget);
  std::vector<ScholzRecord> records;
  records.reserve(n_max - n_min + 1);
  for (std::uint64_t n = n_min; n <= n_max; ++n) {
    records.push_back(build_record(n, deadline, cache));
    if (emit) emit(records.back());
  }
  return records;
}

}  // namespace addchain
