#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "harmchoice/axioms.hpp"
#include "harmchoice/census.hpp"
#include "harmchoice/cli.hpp"
#include "harmchoice/degree.hpp"
#include "harmchoice/distortion.hpp"
#include "harmchoice/io.hpp"
#include "harmchoice/report.hpp"

namespace py = pybind11;
using namespace harmchoice;

namespace {

// Reports cross the boundary as JSON text; the Python layer decodes them.
std::string sp_json(const std::string& dataset, const std::string& method, unsigned workers) {
  const Dataset d = parse_dataset(dataset);
  SpReport r;
  if (method == "both") r = sp(d.choice, workers);
  else if (method == "bruteforce") r = sp_bruteforce(d.choice, workers);
  else if (method == "axiomatic") r = sp_axiomatic(d.choice);
  else throw py::value_error("method must be 'both', 'bruteforce' or 'axiomatic'");
  return to_json(r, d.ground).dump();
}

std::vector<std::string> distort(const std::vector<std::string>& order, int index) {
  const GroundSet g(order);
  const LinearOrder d = harmful_distortion(LinearOrder::identity(g.size()), index);
  std::vector<std::string> out;
  for (Alternative a : d.ranking()) out.push_back(g.label(a));
  return out;
}

std::string generate(const std::vector<std::string>& order, std::optional<int> fixed, std::optional<int> cap,
                     std::optional<std::vector<std::pair<std::vector<std::string>, int>>> indices,
                     std::uint64_t seed) {
  const GroundSet g(order);
  IndexPolicy policy;
  const int given = fixed.has_value() + cap.has_value() + indices.has_value();
  if (given != 1) throw py::value_error("pass exactly one of fixed=, cap= or indices=");
  if (fixed) policy = FixedIndex{*fixed};
  else if (cap) policy = UniformIndexUpTo{*cap};
  else {
    ExplicitIndices map;
    for (const auto& [labels, i] : *indices) {
      std::vector<Alternative> members;
      for (const auto& l : labels) {
        const auto a = g.find(l);
        if (!a) throw Error(ErrorCode::InvalidMenu, "unknown alternative '" + l + "'");
        members.push_back(*a);
      }
      map.entries.emplace_back(Menu::of(members), i);
    }
    policy = std::move(map);
  }
  return dataset_to_json(g, generate_harmful(LinearOrder::identity(g.size()), policy, seed).choice);
}

}  // namespace

PYBIND11_MODULE(_harmchoice, m) {
  m.doc() = "Degree-of-self-punishment analysis of finite choice data";

  // Raised with args (message, code name).
  static PyObject* error_type =
      PyErr_NewException("harmchoice._harmchoice.HarmchoiceError", PyExc_ValueError, nullptr);
  m.attr("HarmchoiceError") = py::reinterpret_borrow<py::object>(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string code(to_string(e.code()));
      PyErr_SetObject(error_type, py::make_tuple(code + ": " + e.what(), code).ptr());
    }
  });

  m.attr("DEFAULT_SEED") = kDefaultSeed;

  m.def("normalize_dataset", [](const std::string& text) {
    const Dataset d = parse_dataset(text);
    return dataset_to_json(d.ground, d.choice);
  }, py::arg("text"), "Validate a dataset (JSON or text) and return it as canonical JSON");
  m.def("analyze", [](const std::string& text, unsigned workers) {
    return to_json(analyze(parse_dataset(text), workers)).dump();
  }, py::arg("text"), py::arg("workers") = 0);
  m.def("sp", &sp_json, py::arg("text"), py::arg("method") = "both", py::arg("workers") = 0);
  m.def("is_inconsistent", [](const std::string& text) { return is_inconsistent(parse_dataset(text).choice); },
        py::arg("text"));
  m.def("satisfies_warp", [](const std::string& text) { return satisfies_warp(parse_dataset(text).choice); },
        py::arg("text"));
  m.def("harmful_distortion", &distort, py::arg("order"), py::arg("index"));
  m.def("census", [](std::size_t n, unsigned workers) { return to_json(enumerate_census(n, workers)).dump(); },
        py::arg("n"), py::arg("workers") = 0, py::call_guard<py::gil_scoped_release>());
  m.def("sample_census", [](std::size_t n, std::uint64_t samples, std::uint64_t seed, unsigned workers) {
    return to_json(sample_census(n, samples, seed, workers)).dump();
  }, py::arg("n"), py::arg("samples"), py::arg("seed") = kDefaultSeed, py::arg("workers") = 0,
     py::call_guard<py::gil_scoped_release>());
  m.def("generate", &generate, py::arg("order"), py::kw_only(), py::arg("fixed") = py::none(),
        py::arg("cap") = py::none(), py::arg("indices") = py::none(), py::arg("seed") = kDefaultSeed);
  m.def("construct_inconsistent", [](int k) {
    const Dataset d = construct_inconsistent(k);
    return dataset_to_json(d.ground, d.choice);
  }, py::arg("k"));
  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = run_command(args, out, err);
    return py::make_tuple(status, out.str(), err.str());
  }, py::arg("args"), "Run the command-line tool in-process; returns (status, stdout, stderr)");
}
