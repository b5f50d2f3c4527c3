#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "icode/cli.hpp"
#include "icode/constructors.hpp"
#include "icode/minrank.hpp"
#include "icode/model.hpp"
#include "icode/text_format.hpp"
#include "icode/verifier.hpp"

namespace py = pybind11;
using namespace icode;

namespace {

std::vector<std::vector<int>> to_rows(const BitMatrix& m) {
  std::vector<std::vector<int>> rows(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t i = 1; i <= m.rows(); ++i)
    for (std::size_t j = 1; j <= m.cols(); ++j) rows[i - 1][j - 1] = m.get(i, j) ? 1 : 0;
  return rows;
}

BitMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) throw DimensionError("matrix needs at least one row");
  BitMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j] & 1) m.set(i + 1, j + 1);
  }
  return m;
}

Case case_arg(const std::string& name) {
  auto c = parse_case(name);
  if (!c || *c == Case::General) throw InvalidParameters("unknown case '" + name + "'");
  return *c;
}

CaseParams params_arg(const std::string& name, std::size_t K, std::size_t D,
                      std::optional<std::size_t> lambda) {
  return make_case_params(case_arg(name), K, D, lambda);
}

py::dict receiver_dict(const ReceiverResult& r) {
  py::dict d;
  d["k"] = r.receiver;
  d["decodable"] = r.decodable;
  d["capped"] = r.status == SearchStatus::Capped;
  d["min_tx"] = r.min_tx;
  d["witness"] = r.witness;
  return d;
}

}  // namespace

PYBIND11_MODULE(_icode, m) {
  m.doc() = "Optimal scalar linear index codes over GF(2) and exact oracles";

  py::register_exception<InvalidParameters>(m, "InvalidParameters", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<Inconclusive>(m, "Inconclusive", PyExc_RuntimeError);

  py::class_<ProblemSpec>(m, "Problem")
      .def(py::init<std::size_t, std::vector<IndexSet>>(), py::arg("K"), py::arg("antidotes"))
      .def_static(
          "from_case",
          [](const std::string& name, std::size_t K, std::size_t D,
             std::optional<std::size_t> lambda) {
            return ProblemSpec::from_case(params_arg(name, K, D, lambda));
          },
          py::arg("case"), py::arg("K"), py::arg("D"), py::arg("lam") = py::none())
      .def_static("one_sided", &ProblemSpec::one_sided, py::arg("K"), py::arg("D"))
      .def_static("general", &ProblemSpec::general, py::arg("K"), py::arg("U"), py::arg("D"))
      .def_static("complete", &ProblemSpec::complete, py::arg("K"))
      .def_static("empty", &ProblemSpec::empty, py::arg("K"))
      .def_property_readonly("K", &ProblemSpec::K)
      .def("antidotes", &ProblemSpec::antidotes, py::arg("k"))
      .def("edges", &ProblemSpec::edges)
      .def("without_edge", &ProblemSpec::without_edge, py::arg("i"), py::arg("j"));

  m.def(
      "generate",
      [](const std::string& name, std::size_t K, std::size_t D, std::optional<std::size_t> lambda) {
        const CodeBook c = construct(params_arg(name, K, D, lambda));
        std::vector<std::string> symbols;
        for (const auto& s : c.symbols) symbols.push_back(symbol_to_string(s));
        py::dict d;
        d["matrix"] = to_rows(c.matrix);
        d["symbols"] = symbols;
        d["text"] = render_matrix(c.matrix);
        return d;
      },
      py::arg("case"), py::arg("K"), py::arg("D"), py::arg("lam") = py::none(),
      "Generator matrix (rows of 0/1) and symbol listing for one case instance.");

  m.def(
      "verify",
      [](const ProblemSpec& g, const std::vector<std::vector<int>>& matrix, unsigned threads) {
        const DecodeReport r = verify_all(g, from_rows(matrix), {}, threads);
        py::list out;
        for (const auto& rr : r.receivers) out.append(receiver_dict(rr));
        return out;
      },
      py::arg("problem"), py::arg("matrix"), py::arg("threads") = 1,
      "Per-receiver decodability, minimum transmissions and witness.");

  m.def(
      "minrank",
      [](const ProblemSpec& g, std::size_t max_edges, std::uint64_t max_nodes) {
        MinrankLimits limits;
        limits.max_free_entries = max_edges;
        limits.max_nodes = max_nodes;
        const MinrankResult r = minrank(g, limits);
        return py::make_tuple(r.value, to_rows(r.witness));
      },
      py::arg("problem"), py::arg("max_edges") = MinrankLimits{}.max_free_entries,
      py::arg("max_nodes") = MinrankLimits{}.max_nodes);

  m.def(
      "is_critical",
      [](const ProblemSpec& g) {
        const CriticalityReport r = is_critical(g);
        py::dict edges;
        for (const auto& e : r.edges) edges[py::make_tuple(e.i, e.j)] = e.critical;
        return py::make_tuple(r.critical, edges);
      },
      py::arg("problem"));

  m.def(
      "capacity",
      [](std::size_t K, std::size_t U, std::size_t D) {
        const Rational c = capacity_general(K, U, D);
        return py::make_tuple(c.num, c.den);
      },
      py::arg("K"), py::arg("U"), py::arg("D"), "Capacity per message as (num, den).");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one command-line invocation; returns (exit_code, stdout, stderr).");
}
