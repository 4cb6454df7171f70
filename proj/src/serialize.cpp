#include "addchain/serialize.hpp"

#include <charconv>
#include <sstream>

namespace addchain {

namespace {

std::uint64_t parse_u64_tok(std::string_view s) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ChainError(Errc::BadRecord,
                     "BadRecord: expected integer, got '" + std::string(s) + "'");
  return out;
}

std::vector<std::uint64_t> parse_u64_list(std::string_view s, char sep) {
  std::vector<std::uint64_t> out;
  while (!s.empty()) {
    const auto pos = s.find(sep);
    out.push_back(parse_u64_tok(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' ||
                        s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                        s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

Json steps_json(const AdditionChain& chain) {
  Json steps = Json::array();
  for (std::size_t j = 2; j <= chain.terms().size(); ++j) {
    const Step& s = chain.step(j);
    steps.push_back(Json::array({j, s.p, s.q}));
  }
  return steps;
}

Json optional_json(const std::optional<bool>& v) {
  if (!v) return nullptr;
  return *v;
}

std::string csv_cell(const std::optional<bool>& v) {
  if (!v) return "";
  return *v ? "true" : "false";
}

template <typename T>
std::string csv_cell(const std::optional<T>& v) {
  if (!v) return "";
  return std::to_string(*v);
}

}  // namespace

std::string format_record(const AdditionChain& chain) {
  std::ostringstream out;
  out << "n=" << chain.target() << "; terms=";
  const auto& terms = chain.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out << ',';
    out << terms[i];
  }
  out << "; steps=";
  for (std::size_t j = 2; j <= terms.size(); ++j) {
    const Step& s = chain.step(j);
    if (j > 2) out << ';';
    out << j << ':' << s.p << '+' << s.q;
  }
  return out.str();
}

AdditionChain parse_record(const std::string& raw) {
  const std::string_view line = trimmed(raw);
  if (line.empty()) throw ChainError(Errc::BadRecord, "BadRecord: empty input");

  if (!line.starts_with("n=")) {
    // bare witness format: comma-separated terms
    return AdditionChain::infer(parse_u64_list(line, ','));
  }

  const auto terms_at = line.find("; terms=");
  const auto steps_at = line.find("; steps=");
  if (terms_at == std::string_view::npos || steps_at == std::string_view::npos ||
      steps_at < terms_at)
    throw ChainError(Errc::BadRecord, "BadRecord: expected 'n=..; terms=..; steps=..'");

  const std::uint64_t target = parse_u64_tok(line.substr(2, terms_at - 2));
  const std::vector<std::uint64_t> terms = parse_u64_list(
      line.substr(terms_at + 8, steps_at - terms_at - 8), ',');

  std::vector<Step> steps(terms.size() > 0 ? terms.size() - 1 : 0);
  std::vector<bool> seen(steps.size(), false);
  std::string_view rest = line.substr(steps_at + 8);
  while (!rest.empty()) {
    const auto pos = rest.find(';');
    const std::string_view tok = rest.substr(0, pos);
    const auto colon = tok.find(':');
    const auto plus = tok.find('+');
    if (colon == std::string_view::npos || plus == std::string_view::npos || plus < colon)
      throw ChainError(Errc::BadRecord, "BadRecord: step must look like j:p+q");
    const std::uint64_t j = parse_u64_tok(tok.substr(0, colon));
    if (j < 2 || j > terms.size())
      throw ChainError(Errc::BadRecord, "BadRecord: step index out of range");
    steps[j - 2] = {
        static_cast<std::uint32_t>(parse_u64_tok(tok.substr(colon + 1, plus - colon - 1))),
        static_cast<std::uint32_t>(parse_u64_tok(tok.substr(plus + 1)))};
    seen[j - 2] = true;
    if (pos == std::string_view::npos) break;
    rest.remove_prefix(pos + 1);
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw ChainError(Errc::BadRecord,
                       "BadRecord: missing step for term " + std::to_string(i + 2));

  AdditionChain chain = AdditionChain::validate(terms, std::move(steps));
  if (chain.target() != target)
    throw ChainError(Errc::BadRecord, "BadRecord: n does not match the last term");
  return chain;
}

Json to_json(const AdditionChain& chain) {
  Json j;
  j["target"] = chain.target();
  j["terms"] = chain.terms();
  j["steps"] = steps_json(chain);
  return j;
}

Json to_json(const GeneratorSeq& gens) {
  Json j;
  j["target"] = gens.target();
  j["length"] = gens.size();
  j["determiners"] = gens.determiners();
  j["regulators"] = gens.regulators();
  return j;
}

Json to_json(const IdentityReport& report) {
  Json j;
  j["target"] = report.target;
  j["length"] = report.length;
  j["regulator_sum"] = report.regulator_sum;
  j["determiner_sum_to_delta"] = report.determiner_sum_to_delta;
  j["determiner_sum_full"] = report.determiner_sum_full;
  j["element_sum"] = report.element_sum;
  j["step_integral"] = report.step_integral;
  j["length_bounds"] = {
      {"lower", {{"num", report.sandwich.lower.num}, {"den", report.sandwich.lower.den}}},
      {"upper", {{"num", report.sandwich.upper.num}, {"den", report.sandwich.upper.den}}},
  };
  Json verdicts;
  verdicts["telescoping"] = report.verdicts.telescoping;
  verdicts["sandwich_lower"] = report.verdicts.sandwich_lower;
  verdicts["sandwich_upper"] = report.verdicts.sandwich_upper;
  verdicts["determiner_closed_form"] = optional_json(report.verdicts.determiner_closed_form);
  verdicts["determiner_integral"] = optional_json(report.verdicts.determiner_integral);
  verdicts["element_sum_bound"] = report.verdicts.element_sum_bound;
  verdicts["element_sum_identity"] = optional_json(report.verdicts.element_sum_identity);
  j["verdicts"] = verdicts;
  Json residuals;
  residuals["telescoping"] = report.telescoping_residual;
  residuals["determiner_closed_form"] = report.determiner_closed_form_residual;
  residuals["determiner_integral"] = report.determiner_integral_residual;
  residuals["element_sum_identity"] = report.element_sum_identity_residual;
  j["residuals"] = residuals;
  j["all_hold"] = report.all_hold();
  return j;
}

Json to_json(const SearchResult& result) {
  Json j;
  j["n"] = result.target;
  j["status"] = result.complete ? "exact" : "bounds-only";
  j["length"] = result.shortest_length >= 0 ? Json(result.shortest_length) : Json(nullptr);
  j["witness"] = result.witness ? to_json(*result.witness) : Json(nullptr);
  j["star_length"] = result.star_shortest_length >= 0
                         ? Json(result.star_shortest_length)
                         : Json(nullptr);
  j["star_witness"] = result.star_witness ? to_json(*result.star_witness) : Json(nullptr);
  j["length_lower_bound"] = result.length_lower_bound;
  j["length_upper_bound"] = result.length_upper_bound;
  j["nodes_expanded"] = result.nodes_expanded;
  return j;
}

Json to_json(const ScholzRecord& record) {
  Json j;
  j["n"] = record.n;
  j["mersenne"] = record.mersenne;
  j["iota_n"] = record.iota_n ? Json(*record.iota_n) : Json(nullptr);
  j["star_iota_n"] = record.star_iota_n ? Json(*record.star_iota_n) : Json(nullptr);
  j["iota_mersenne"] =
      record.iota_mersenne ? Json(*record.iota_mersenne) : Json(nullptr);
  j["classic_ok"] = optional_json(record.classic_ok);
  j["reformulated_rhs"] =
      record.reformulated_rhs ? Json(*record.reformulated_rhs) : Json(nullptr);
  j["reformulated_ok"] = optional_json(record.reformulated_ok);
  j["consistency_ok"] = optional_json(record.consistency_ok);
  j["half_applicable"] = optional_json(record.half_applicable);
  j["half_ok"] = optional_json(record.half_ok);
  j["half_plus_ok"] = optional_json(record.half_plus_ok);
  j["status"] = record.complete ? "ok" : "incomplete";
  return j;
}

Json to_json(const Schedule& schedule) {
  Json instructions = Json::array();
  std::vector<std::string> lines;
  for (const auto& ins : schedule.instructions) {
    instructions.push_back(Json::array({ins.dst, ins.lhs, ins.rhs}));
    lines.push_back("t" + std::to_string(ins.dst) + " = t" + std::to_string(ins.lhs) +
                    " * t" + std::to_string(ins.rhs));
  }
  Json j;
  j["instructions"] = instructions;
  j["listing"] = lines;
  return j;
}

std::string scholz_csv_header() {
  return "n,iota_n,iota_mersenne,classic_ok,reformulated_rhs,consistency_ok,"
         "half_ok,half_plus_ok,status";
}

std::string scholz_csv_row(const ScholzRecord& record) {
  std::ostringstream out;
  out << record.n << ',' << csv_cell(record.iota_n) << ','
      << csv_cell(record.iota_mersenne) << ',' << csv_cell(record.classic_ok) << ','
      << csv_cell(record.reformulated_rhs) << ',' << csv_cell(record.consistency_ok)
      << ',';
  if (record.half_applicable && !*record.half_applicable)
    out << "NA";
  else
    out << csv_cell(record.half_ok);
  out << ',' << csv_cell(record.half_plus_ok) << ','
      << (record.complete ? "ok" : "incomplete");
  return out.str();
}

}  // namespace addchain
