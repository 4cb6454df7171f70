#include <pybind11/chrono.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "addchain/cache.hpp"
#include "addchain/identities.hpp"
#include "addchain/schedule.hpp"
#include "addchain/scholz.hpp"
#include "addchain/search.hpp"
#include "addchain/serialize.hpp"

namespace py = pybind11;
using namespace addchain;

namespace {

SearchBudget make_budget(std::uint64_t budget_ms, std::uint64_t max_nodes) {
  SearchBudget b;
  if (budget_ms > 0) b.wall = std::chrono::milliseconds(budget_ms);
  if (max_nodes > 0) b.max_nodes = max_nodes;
  return b;
}

std::vector<Step> steps_from_pairs(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
  std::vector<Step> steps;
  steps.reserve(pairs.size());
  for (const auto& [p, q] : pairs) steps.push_back({p, q});
  return steps;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_from_steps(
    const std::vector<Step>& steps) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(steps.size());
  for (const auto& s : steps) pairs.emplace_back(s.p, s.q);
  return pairs;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Addition chains: validation, determiner/regulator decomposition, "
            "exact shortest-chain search, Scholz conjecture checks, and "
            "exponentiation schedules.";

  py::register_exception<ChainError>(m, "ChainError");

  py::class_<AdditionChain>(m, "AdditionChain")
      .def_static(
          "validate",
          [](std::vector<std::uint64_t> terms,
             const std::vector<std::pair<std::uint32_t, std::uint32_t>>& steps) {
            return AdditionChain::validate(std::move(terms), steps_from_pairs(steps));
          },
          py::arg("terms"), py::arg("steps"))
      .def_static("infer", &AdditionChain::infer, py::arg("terms"))
      .def_property_readonly("terms",
                             [](const AdditionChain& c) { return c.terms(); })
      .def_property_readonly(
          "steps", [](const AdditionChain& c) { return pairs_from_steps(c.steps()); })
      .def_property_readonly("target", &AdditionChain::target)
      .def_property_readonly("length", &AdditionChain::length)
      .def("record", [](const AdditionChain& c) { return format_record(c); })
      .def("__len__", &AdditionChain::length)
      .def("__eq__", [](const AdditionChain& a, const AdditionChain& b) { return a == b; })
      .def("__repr__", [](const AdditionChain& c) {
        return "<AdditionChain " + format_record(c) + ">";
      });

  py::class_<GeneratorSeq>(m, "GeneratorSeq")
      .def_static("from_parts", &GeneratorSeq::from_parts, py::arg("determiners"),
                  py::arg("regulators"))
      .def_property_readonly("determiners",
                             [](const GeneratorSeq& g) { return g.determiners(); })
      .def_property_readonly("regulators",
                             [](const GeneratorSeq& g) { return g.regulators(); })
      .def_property_readonly("target", &GeneratorSeq::target)
      .def("__len__", &GeneratorSeq::size)
      .def("__eq__", [](const GeneratorSeq& a, const GeneratorSeq& b) { return a == b; });

  py::class_<TruncatedChain>(m, "TruncatedChain")
      .def_readonly("base", &TruncatedChain::base)
      .def_readonly("kept_indices", &TruncatedChain::kept_indices)
      .def("kept_terms", &TruncatedChain::kept_terms);

  m.def("is_star_chain", &addchain::is_star_chain, py::arg("chain"));
  m.def("decompose", &addchain::decompose, py::arg("chain"));
  m.def("recompose", &addchain::recompose, py::arg("gens"));
  m.def("truncate", &addchain::truncate, py::arg("chain"), py::arg("drop_prefix"));

  py::class_<Rational>(m, "Rational")
      .def_readonly("num", &Rational::num)
      .def_readonly("den", &Rational::den)
      .def("__repr__", [](const Rational& r) {
        return std::to_string(r.num) + "/" + std::to_string(r.den);
      });

  py::class_<LengthSandwich>(m, "LengthSandwich")
      .def_readonly("lower", &LengthSandwich::lower)
      .def_readonly("upper", &LengthSandwich::upper);

  py::class_<LhsRhs>(m, "LhsRhs")
      .def_readonly("lhs", &LhsRhs::lhs)
      .def_readonly("rhs", &LhsRhs::rhs)
      .def_property_readonly("residual", &LhsRhs::residual)
      .def("holds", &LhsRhs::holds);

  py::class_<IdentityVerdicts>(m, "IdentityVerdicts")
      .def_readonly("telescoping", &IdentityVerdicts::telescoping)
      .def_readonly("sandwich_lower", &IdentityVerdicts::sandwich_lower)
      .def_readonly("sandwich_upper", &IdentityVerdicts::sandwich_upper)
      .def_readonly("determiner_closed_form", &IdentityVerdicts::determiner_closed_form)
      .def_readonly("determiner_integral", &IdentityVerdicts::determiner_integral)
      .def_readonly("element_sum_bound", &IdentityVerdicts::element_sum_bound)
      .def_readonly("element_sum_identity", &IdentityVerdicts::element_sum_identity)
      .def("all_hold", &IdentityVerdicts::all_hold);

  py::class_<IdentityReport>(m, "IdentityReport")
      .def_readonly("target", &IdentityReport::target)
      .def_readonly("length", &IdentityReport::length)
      .def_readonly("regulator_sum", &IdentityReport::regulator_sum)
      .def_readonly("determiner_sum_to_delta", &IdentityReport::determiner_sum_to_delta)
      .def_readonly("determiner_sum_full", &IdentityReport::determiner_sum_full)
      .def_readonly("element_sum", &IdentityReport::element_sum)
      .def_readonly("step_integral", &IdentityReport::step_integral)
      .def_readonly("sandwich", &IdentityReport::sandwich)
      .def_readonly("verdicts", &IdentityReport::verdicts)
      .def("all_hold", &IdentityReport::all_hold)
      .def("to_json", [](const IdentityReport& r) { return to_json(r).dump(); });

  m.def("regulator_sum", &regulator_sum, py::arg("gens"));
  m.def("length_sandwich", &length_sandwich, py::arg("gens"));
  m.def("determiner_closed_form", &determiner_closed_form, py::arg("gens"));
  m.def("step_integral", &step_integral, py::arg("gens"));
  m.def("determiner_integral_identity", &determiner_integral_identity, py::arg("gens"));
  m.def("element_sum_identity", &element_sum_identity, py::arg("gens"));
  m.def("element_sum_lower_bound", &element_sum_lower_bound, py::arg("gens"));
  m.def("abel_cross_check", &abel_cross_check, py::arg("gens"));
  m.def("evaluate_all",
        py::overload_cast<const AdditionChain&>(&evaluate_all), py::arg("chain"));

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("target", &SearchResult::target)
      .def_readonly("complete", &SearchResult::complete)
      .def_readonly("shortest_length", &SearchResult::shortest_length)
      .def_readonly("witness", &SearchResult::witness)
      .def_readonly("star_shortest_length", &SearchResult::star_shortest_length)
      .def_readonly("star_witness", &SearchResult::star_witness)
      .def_readonly("length_lower_bound", &SearchResult::length_lower_bound)
      .def_readonly("length_upper_bound", &SearchResult::length_upper_bound)
      .def_readonly("nodes_expanded", &SearchResult::nodes_expanded)
      .def("to_json", [](const SearchResult& r) { return to_json(r).dump(); });

  py::class_<LengthCache>(m, "LengthCache")
      .def(py::init<std::filesystem::path>(), py::arg("path"))
      .def("get",
           [](const LengthCache& c, std::uint64_t n)
               -> std::optional<std::pair<int, std::vector<std::uint64_t>>> {
             if (auto e = c.get(n)) return std::pair(e->length, e->witness_terms);
             return std::nullopt;
           },
           py::arg("n"))
      .def("put", &LengthCache::put, py::arg("n"), py::arg("length"), py::arg("witness"))
      .def_property_readonly("corrupt_lines", &LengthCache::corrupt_lines)
      .def("__len__", &LengthCache::size);

  m.def("binary_upper_bound", &binary_upper_bound, py::arg("n"));
  m.def("lower_bound", &lower_bound, py::arg("n"));
  m.def(
      "shortest_chain",
      [](std::uint64_t n, bool star_only, std::uint64_t budget_ms,
         std::uint64_t max_nodes, LengthCache* cache) {
        return shortest_chain(n, star_only, make_budget(budget_ms, max_nodes), cache);
      },
      py::arg("n"), py::arg("star_only") = false, py::arg("budget_ms") = 0,
      py::arg("max_nodes") = 0, py::arg("cache") = nullptr,
      py::call_guard<py::gil_scoped_release>());
  m.def("bfs_oracle", &bfs_oracle, py::arg("n_max"),
        py::call_guard<py::gil_scoped_release>());
  m.def("enumerate_star_chains",
        py::overload_cast<std::uint64_t, int>(&enumerate_star_chains),
        py::arg("target"), py::arg("max_len"));
  m.def(
      "exists_star_chain_all_regulators_ge",
      [](std::uint64_t n, int length, std::uint64_t min_regulator,
         std::uint64_t budget_ms) {
        return exists_star_chain_all_regulators_ge(n, length, min_regulator,
                                                   make_budget(budget_ms, 0));
      },
      py::arg("n"), py::arg("length"), py::arg("min_regulator") = 2,
      py::arg("budget_ms") = 0);

  py::class_<ScholzRecord>(m, "ScholzRecord")
      .def_readonly("n", &ScholzRecord::n)
      .def_readonly("mersenne", &ScholzRecord::mersenne)
      .def_readonly("iota_n", &ScholzRecord::iota_n)
      .def_readonly("star_iota_n", &ScholzRecord::star_iota_n)
      .def_readonly("iota_mersenne", &ScholzRecord::iota_mersenne)
      .def_readonly("classic_ok", &ScholzRecord::classic_ok)
      .def_readonly("reformulated_rhs", &ScholzRecord::reformulated_rhs)
      .def_readonly("reformulated_ok", &ScholzRecord::reformulated_ok)
      .def_readonly("consistency_ok", &ScholzRecord::consistency_ok)
      .def_readonly("half_applicable", &ScholzRecord::half_applicable)
      .def_readonly("half_ok", &ScholzRecord::half_ok)
      .def_readonly("half_plus_ok", &ScholzRecord::half_plus_ok)
      .def_readonly("complete", &ScholzRecord::complete)
      .def("falsified", &ScholzRecord::falsified)
      .def("to_json", [](const ScholzRecord& r) { return to_json(r).dump(); })
      .def("to_csv_row", &scholz_csv_row);

  m.def(
      "classic_scholz_check",
      [](std::uint64_t n, std::uint64_t budget_ms, LengthCache* cache) {
        return classic_scholz_check(n, make_budget(budget_ms, 0), cache);
      },
      py::arg("n"), py::arg("budget_ms") = 0, py::arg("cache") = nullptr,
      py::call_guard<py::gil_scoped_release>());
  m.def("reformulated_rhs", &reformulated_rhs, py::arg("gens"));
  m.def(
      "consistency_check",
      [](std::uint64_t n, std::uint64_t budget_ms, LengthCache* cache) {
        return consistency_check(n, make_budget(budget_ms, 0), cache);
      },
      py::arg("n"), py::arg("budget_ms") = 0, py::arg("cache") = nullptr,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "scholz_sweep",
      [](std::uint64_t n_min, std::uint64_t n_max, std::uint64_t budget_ms,
         LengthCache* cache) {
        return sweep(n_min, n_max, make_budget(budget_ms, 0), cache);
      },
      py::arg("n_min"), py::arg("n_max"), py::arg("budget_ms") = 0,
      py::arg("cache") = nullptr, py::call_guard<py::gil_scoped_release>());

  py::class_<Schedule::Instruction>(m, "Instruction")
      .def_readonly("dst", &Schedule::Instruction::dst)
      .def_readonly("lhs", &Schedule::Instruction::lhs)
      .def_readonly("rhs", &Schedule::Instruction::rhs);

  py::class_<Schedule>(m, "Schedule")
      .def_readonly("instructions", &Schedule::instructions)
      .def_property_readonly("multiplications", &Schedule::multiplications)
      .def("listing", &Schedule::listing);

  m.def("emit", &emit, py::arg("chain"));
  m.def("evaluate", &evaluate, py::arg("schedule"), py::arg("base"), py::arg("modulus"));
  m.def("powmod", &powmod, py::arg("base"), py::arg("exponent"), py::arg("modulus"));

  m.def("format_record", &format_record, py::arg("chain"));
  m.def("parse_record", &parse_record, py::arg("line"));
  m.def("scholz_csv_header", &scholz_csv_header);
}
