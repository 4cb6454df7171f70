#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "addchain/cache.hpp"
#include "addchain/identities.hpp"
#include "addchain/schedule.hpp"
#include "addchain/scholz.hpp"
#include "addchain/search.hpp"
#include "addchain/serialize.hpp"

namespace {

using namespace addchain;

constexpr int kExitOk = 0;
constexpr int kExitFalsification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
  std::string format = "text";
  std::string cache_path;
  std::uint64_t budget_ms = 0;

  SearchBudget budget() const {
    SearchBudget b;
    if (budget_ms > 0) b.wall = std::chrono::milliseconds(budget_ms);
    return b;
  }

  std::unique_ptr<LengthCache> open_cache() const {
    std::string path = cache_path;
    if (path.empty()) {
      if (const char* env = std::getenv("SCHOLZ_CACHE")) path = env;
    }
    if (path.empty()) return nullptr;
    return std::make_unique<LengthCache>(path);
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_budget = true) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--cache", opts.cache_path,
                  "Length cache file (falls back to $SCHOLZ_CACHE)");
  if (with_budget)
    cmd->add_option("--budget-ms", opts.budget_ms,
                    "Wall-clock budget in milliseconds (0 = unlimited)");
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw CLI::ValidationError("--range", "expected <a>..<b>");
  try {
    const std::uint64_t a = std::stoull(text.substr(0, dots));
    const std::uint64_t b = std::stoull(text.substr(dots + 2));
    if (a > b) throw CLI::ValidationError("--range", "empty range");
    return {a, b};
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("--range", "expected <a>..<b>");
  } catch (const std::out_of_range&) {
    throw CLI::ValidationError("--range", "value out of range");
  }
}

std::string join_terms(const std::vector<std::uint64_t>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(terms[i]);
  }
  return out;
}

std::string read_stdin() {
  std::string all, line;
  while (std::getline(std::cin, line)) {
    if (!line.empty()) {
      all = line;
      break;
    }
  }
  return all;
}

const char* opt_bool(const std::optional<bool>& v, const char* na = "unknown") {
  if (!v) return na;
  return *v ? "true" : "false";
}

// ---- solve ---------------------------------------------------------------

int run_solve(std::uint64_t n, bool star_only, const CommonOpts& opts) {
  auto cache = opts.open_cache();
  const SearchResult res = shortest_chain(n, star_only, opts.budget(), cache.get());
  if (opts.format == "json") {
    std::cout << to_json(res).dump() << '\n';
  } else {
    std::cout << "n=" << res.target << '\n';
    if (!star_only) {
      std::cout << "length="
                << (res.shortest_length >= 0 ? std::to_string(res.shortest_length)
                                             : "unknown")
                << '\n';
      if (res.witness) std::cout << "witness=" << join_terms(res.witness->terms()) << '\n';
    }
    std::cout << "star_length="
              << (res.star_shortest_length >= 0
                      ? std::to_string(res.star_shortest_length)
                      : "unknown")
              << '\n';
    if (res.star_witness)
      std::cout << "star_witness=" << join_terms(res.star_witness->terms()) << '\n';
    if (!res.complete)
      std::cout << "length_lower_bound=" << res.length_lower_bound << '\n'
                << "length_upper_bound=" << res.length_upper_bound << '\n';
    std::cout << "status=" << (res.complete ? "exact" : "bounds-only") << '\n';
  }
  return res.complete ? kExitOk : kExitBudget;
}

// ---- decompose -----------------------------------------------------------

int run_decompose(const CommonOpts& opts) {
  const std::string line = read_stdin();
  const AdditionChain chain = parse_record(line);
  const GeneratorSeq gens = decompose(chain);
  const IdentityReport report = evaluate_all(gens);

  if (opts.format == "json") {
    Json j;
    j["chain"] = to_json(chain);
    j["generators"] = to_json(gens);
    j["report"] = to_json(report);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "n=" << chain.target() << '\n'
              << "length=" << chain.length() << '\n'
              << "terms=" << join_terms(chain.terms()) << '\n'
              << "determiners=" << join_terms(gens.determiners()) << '\n'
              << "regulators=" << join_terms(gens.regulators()) << '\n';
    const auto& v = report.verdicts;
    std::cout << "telescoping=" << opt_bool(v.telescoping) << '\n'
              << "sandwich_lower=" << opt_bool(v.sandwich_lower) << '\n'
              << "sandwich_upper=" << opt_bool(v.sandwich_upper) << '\n'
              << "determiner_closed_form=" << opt_bool(v.determiner_closed_form, "skipped")
              << '\n'
              << "determiner_integral=" << opt_bool(v.determiner_integral, "skipped")
              << '\n'
              << "element_sum_bound=" << opt_bool(v.element_sum_bound) << '\n'
              << "element_sum_identity=" << opt_bool(v.element_sum_identity, "skipped")
              << '\n'
              << "all_hold=" << (report.all_hold() ? "true" : "false") << '\n';
  }
  if (!report.all_hold()) {
    std::cerr << "FALSIFICATION: chain " << format_record(chain)
              << " fails an identity; see verdicts\n";
    return kExitFalsification;
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyStats {
  std::uint64_t n = 0;
  std::uint64_t chains = 0;
  std::uint64_t failures = 0;
};

int run_verify(std::uint64_t lo, std::uint64_t hi, int max_len, const CommonOpts& opts) {
  std::vector<VerifyStats> stats;
  std::uint64_t total_chains = 0, total_failures = 0;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    VerifyStats st;
    st.n = n;
    enumerate_star_chains(n, max_len, [&](const AdditionChain& chain) {
      ++st.chains;
      const GeneratorSeq gens = decompose(chain);
      const IdentityReport report = evaluate_all(gens);
      bool ok = report.all_hold();
      if (gens.size() >= 2) ok = ok && abel_cross_check(gens).holds();
      if (!ok) {
        ++st.failures;
        std::cerr << "FALSIFICATION: chain " << format_record(chain)
                  << " fails an identity\n";
      }
    });
    total_chains += st.chains;
    total_failures += st.failures;
    stats.push_back(st);
  }

  if (opts.format == "json") {
    Json targets = Json::array();
    for (const auto& st : stats)
      targets.push_back({{"n", st.n}, {"chains", st.chains}, {"failures", st.failures}});
    Json j;
    j["max_len"] = max_len;
    j["targets"] = targets;
    j["chains"] = total_chains;
    j["failures"] = total_failures;
    std::cout << j.dump() << '\n';
  } else if (opts.format == "csv") {
    std::cout << "n,chains,failures\n";
    for (const auto& st : stats)
      std::cout << st.n << ',' << st.chains << ',' << st.failures << '\n';
  } else {
    for (const auto& st : stats)
      std::cout << "n=" << st.n << " chains=" << st.chains
                << " failures=" << st.failures << '\n';
    std::cout << "targets=" << stats.size() << " chains=" << total_chains
              << " failures=" << total_failures << '\n';
  }
  return total_failures == 0 ? kExitOk : kExitFalsification;
}

// ---- enumerate -------------------------------------------------------------

int run_enumerate(std::uint64_t n, int max_len, const CommonOpts& opts) {
  const std::vector<AdditionChain> chains = enumerate_star_chains(n, max_len);
  if (opts.format == "json") {
    Json arr = Json::array();
    for (const auto& c : chains) arr.push_back(to_json(c));
    Json j;
    j["target"] = n;
    j["max_len"] = max_len;
    j["count"] = chains.size();
    j["chains"] = arr;
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& c : chains) std::cout << format_record(c) << '\n';
  }
  return kExitOk;
}

// ---- scholz / sweep --------------------------------------------------------

int run_scholz(std::uint64_t lo, std::uint64_t hi, bool single, const CommonOpts& opts) {
  auto cache = opts.open_cache();
  const bool csv = opts.format == "csv";
  if (csv) std::cout << scholz_csv_header() << '\n';

  bool any_falsified = false;
  bool any_incomplete = false;
  Json arr = Json::array();
  sweep(lo, hi, opts.budget(), cache.get(), [&](const ScholzRecord& rec) {
    any_falsified = any_falsified || rec.falsified();
    any_incomplete = any_incomplete || !rec.complete;
    if (rec.falsified())
      std::cerr << "FALSIFICATION: scholz record n=" << rec.n
                << " has a false verdict; re-verify with the oracle\n";
    if (csv) {
      std::cout << scholz_csv_row(rec) << '\n';
    } else if (opts.format == "json") {
      arr.push_back(to_json(rec));
    } else {
      std::cout << "n=" << rec.n << " iota_n="
                << (rec.iota_n ? std::to_string(*rec.iota_n) : "unknown")
                << " iota_mersenne="
                << (rec.iota_mersenne ? std::to_string(*rec.iota_mersenne) : "unknown")
                << " classic_ok=" << opt_bool(rec.classic_ok) << " reformulated_rhs="
                << (rec.reformulated_rhs ? std::to_string(*rec.reformulated_rhs)
                                         : "unknown")
                << " consistency_ok=" << opt_bool(rec.consistency_ok) << " half_ok="
                << (rec.half_applicable && !*rec.half_applicable ? "NA"
                                                                 : opt_bool(rec.half_ok))
                << " half_plus_ok=" << opt_bool(rec.half_plus_ok) << " status="
                << (rec.complete ? "ok" : "incomplete") << '\n';
    }
  });
  if (opts.format == "json")
    std::cout << (single ? arr.at(0) : arr).dump() << '\n';

  if (any_falsified) return kExitFalsification;
  if (any_incomplete) return kExitBudget;
  return kExitOk;
}

// ---- emit --------------------------------------------------------------------

int run_emit(std::optional<std::uint64_t> n, bool star_only,
             std::optional<std::uint64_t> base, std::optional<std::uint64_t> modulus,
             const CommonOpts& opts) {
  std::optional<AdditionChain> chain;
  if (n) {
    auto cache = opts.open_cache();
    const SearchResult res = shortest_chain(*n, star_only, opts.budget(), cache.get());
    const auto& witness = star_only ? res.star_witness : res.witness;
    if (!witness) {
      std::cerr << "error: budget exceeded before a shortest chain was found\n";
      return kExitBudget;
    }
    chain = *witness;
  } else {
    chain = parse_record(read_stdin());
  }

  const Schedule schedule = emit(*chain);
  std::optional<std::uint64_t> value;
  if (base || modulus) {
    if (!base || !modulus)
      throw CLI::ValidationError("--base/--mod", "both are required together");
    value = evaluate(schedule, *base, *modulus);
  }

  if (opts.format == "json") {
    Json j;
    j["chain"] = to_json(*chain);
    j["schedule"] = to_json(schedule);
    j["base"] = base ? Json(*base) : Json(nullptr);
    j["modulus"] = modulus ? Json(*modulus) : Json(nullptr);
    j["value"] = value ? Json(*value) : Json(nullptr);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << schedule.listing();
    if (value) std::cout << "value=" << *value << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Addition-chain toolkit: exact shortest chains, "
               "determiner/regulator identity checks, Scholz conjecture sweeps, "
               "and exponentiation schedules"};
  app.require_subcommand(1);

  // solve
  CommonOpts solve_opts;
  std::uint64_t solve_n = 0;
  bool solve_star = false;
  auto* cmd_solve = app.add_subcommand("solve", "Shortest chain for one target");
  cmd_solve->add_option("--n", solve_n, "Target")->required();
  cmd_solve->add_flag("--star-only", solve_star, "Restrict the search to star chains");
  add_common(cmd_solve, solve_opts);

  // decompose
  CommonOpts dec_opts;
  auto* cmd_dec = app.add_subcommand(
      "decompose", "Read a chain record from stdin; print generators and identities");
  add_common(cmd_dec, dec_opts, false);

  // verify
  CommonOpts verify_opts;
  std::uint64_t verify_n = 0;
  std::string verify_range;
  int verify_max_len = 9;
  auto* cmd_verify = app.add_subcommand(
      "verify", "Exhaustively check every identity over enumerated star chains");
  auto* vn = cmd_verify->add_option("--n", verify_n, "Single target");
  auto* vr = cmd_verify->add_option("--range", verify_range, "Target range <a>..<b>");
  vn->excludes(vr);
  cmd_verify->add_option("--max-len", verify_max_len, "Maximum chain length");
  add_common(cmd_verify, verify_opts, false);

  // enumerate
  CommonOpts enum_opts;
  std::uint64_t enum_n = 0;
  int enum_max_len = 9;
  auto* cmd_enum = app.add_subcommand("enumerate", "List star chains for a target");
  cmd_enum->add_option("--n", enum_n, "Target")->required();
  cmd_enum->add_option("--max-len", enum_max_len, "Maximum chain length");
  add_common(cmd_enum, enum_opts, false);

  // scholz
  CommonOpts scholz_opts;
  std::uint64_t scholz_n = 0;
  std::string scholz_range;
  auto* cmd_scholz = app.add_subcommand("scholz", "Scholz conjecture records");
  auto* sn = cmd_scholz->add_option("--n", scholz_n, "Single n");
  auto* sr = cmd_scholz->add_option("--range", scholz_range, "Range <a>..<b>");
  sn->excludes(sr);
  add_common(cmd_scholz, scholz_opts);

  // sweep
  CommonOpts sweep_opts;
  sweep_opts.format = "csv";
  std::string sweep_range;
  auto* cmd_sweep = app.add_subcommand("sweep", "Stream Scholz records over a range");
  cmd_sweep->add_option("--range", sweep_range, "Range <a>..<b>")->required();
  add_common(cmd_sweep, sweep_opts);

  // emit
  CommonOpts emit_opts;
  std::uint64_t emit_n = 0;
  bool emit_star = false;
  std::uint64_t emit_base = 0, emit_mod = 0;
  auto* cmd_emit = app.add_subcommand(
      "emit", "Exponentiation schedule for a chain (stdin record or --n)");
  auto* en = cmd_emit->add_option("--n", emit_n, "Solve for this target first");
  cmd_emit->add_flag("--star-only", emit_star, "Use the star witness");
  auto* eb = cmd_emit->add_option("--base", emit_base, "Evaluate for this base");
  auto* em = cmd_emit->add_option("--mod", emit_mod, "Evaluate modulo this");
  add_common(cmd_emit, emit_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_solve->parsed()) return run_solve(solve_n, solve_star, solve_opts);
    if (cmd_dec->parsed()) return run_decompose(dec_opts);
    if (cmd_verify->parsed()) {
      std::uint64_t lo = 3, hi = 24;
      if (*vn) {
        lo = hi = verify_n;
      } else if (*vr) {
        std::tie(lo, hi) = parse_range(verify_range);
      }
      return run_verify(lo, hi, verify_max_len, verify_opts);
    }
    if (cmd_enum->parsed()) return run_enumerate(enum_n, enum_max_len, enum_opts);
    if (cmd_scholz->parsed()) {
      std::uint64_t lo = 2, hi = 12;
      bool single = false;
      if (*sn) {
        lo = hi = scholz_n;
        single = true;
      } else if (*sr) {
        std::tie(lo, hi) = parse_range(scholz_range);
      }
      return run_scholz(lo, hi, single, scholz_opts);
    }
    if (cmd_sweep->parsed()) {
      const auto [lo, hi] = parse_range(sweep_range);
      return run_scholz(lo, hi, false, sweep_opts);
    }
    if (cmd_emit->parsed()) {
      return run_emit(*en ? std::optional(emit_n) : std::nullopt, emit_star,
                      *eb ? std::optional(emit_base) : std::nullopt,
                      *em ? std::optional(emit_mod) : std::nullopt, emit_opts);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ChainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::BudgetExceeded ? kExitBudget : kExitUsage;
  }
  return kExitUsage;
}
