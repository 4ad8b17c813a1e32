#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "starring/cli.hpp"
#include "starring/report.hpp"

namespace py = pybind11;
using namespace starring;

namespace {

struct Loaded {
  std::string name;
  BuiltRing built;
};

Loaded load(const std::string& source, const std::optional<std::string>& ring, std::size_t bound) {
  RingEnvironment env(parse_ringspec(source), bound);
  if (env.definitions().empty()) throw Error(ErrorKind::kUnknownIdentifier, "no ring definitions");
  const std::string name = ring.value_or(env.definitions().back().name);
  if (!env.contains(name)) throw Error(ErrorKind::kUnknownIdentifier, "unknown ring '" + name + "'");
  return {name, env.get(name)};
}

ReportConfig config(std::size_t bound, bool full_witnesses) { return {kDefaultSampleSeed, bound, full_witnesses}; }

std::string classify_json(const std::string& source, const std::optional<std::string>& ring, std::size_t bound,
                          bool full_witnesses) {
  const auto l = load(source, ring, bound);
  const auto s = Subject::from(l.built, l.name);
  return classification_json(l.name, *l.built.ring, s.report(), config(bound, full_witnesses)).dump();
}

std::string verify_json(const std::string& source, const std::optional<std::string>& ring,
                        const std::string& theorem, std::size_t bound) {
  const auto l = load(source, ring, bound);
  const auto s = Subject::from(l.built, l.name);
  std::vector<TheoremVerdict> vs;
  if (theorem == "all") {
    vs = verify_all(s);
  } else {
    vs.push_back(verify(theorem, s));
  }
  return verdicts_json(l.name, *l.built.ring, vs, config(bound, false)).dump();
}

std::string projections_json_of(const std::string& source, const std::optional<std::string>& ring,
                                std::size_t bound) {
  const auto l = load(source, ring, bound);
  RingAnalysis an(l.built.ring);
  return projections_json(l.name, an, config(bound, false)).dump();
}

std::string cover_json_of(const std::string& source, const std::string& element,
                          const std::optional<std::string>& ring, std::size_t bound) {
  const auto l = load(source, ring, bound);
  RingAnalysis an(l.built.ring);
  return cover_json(l.name, an, l.built.ring->parse(element), config(bound, false)).dump();
}

std::string validate_json(const std::string& source, const std::optional<std::string>& ring, std::size_t bound) {
  const auto l = load(source, ring, bound);
  return validation_json(l.name, *l.built.ring, validate_axioms(*l.built.ring, ValidationMode::complete()),
                         config(bound, false))
      .dump();
}

std::string unitify_check_json(const std::string& source, const std::optional<std::string>& ring,
                               std::size_t bound) {
  const auto l = load(source, ring, bound);
  if (!l.built.extension) throw Error(ErrorKind::kSubjectKindMismatch, l.name + " is not a unitify(...) ring");
  const auto s = Subject::from(l.built, l.name);
  return unitification_json(l.name, s, check_unitification(s), config(bound, false)).dump();
}

py::tuple run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"starring"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_starring, m) {
  m.doc() = "Finite rings with involution; every report is a JSON string.";

  static py::handle error = py::exception<Error>(m, "StarringError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.attr("DEFAULT_BOUND") = kDefaultCarrierBound;
  m.def("format_ringspec", [](const std::string& source) { return format_ringspec(parse_ringspec(source)); },
        py::arg("source"));
  m.def("theorem_ids", [] {
    std::vector<std::string> ids;
    for (const auto& t : theorem_registry()) ids.emplace_back(t.id);
    return ids;
  });
  m.def("classify", &classify_json, py::arg("source"), py::arg("ring") = py::none(),
        py::arg("bound") = kDefaultCarrierBound, py::arg("full_witnesses") = false);
  m.def("verify", &verify_json, py::arg("source"), py::arg("ring") = py::none(), py::arg("theorem") = "all",
        py::arg("bound") = kDefaultCarrierBound);
  m.def("projections", &projections_json_of, py::arg("source"), py::arg("ring") = py::none(),
        py::arg("bound") = kDefaultCarrierBound);
  m.def("cover", &cover_json_of, py::arg("source"), py::arg("element"), py::arg("ring") = py::none(),
        py::arg("bound") = kDefaultCarrierBound);
  m.def("validate", &validate_json, py::arg("source"), py::arg("ring") = py::none(),
        py::arg("bound") = kDefaultCarrierBound);
  m.def("unitify_check", &unitify_check_json, py::arg("source"), py::arg("ring") = py::none(),
        py::arg("bound") = kDefaultCarrierBound);
  m.def("c031_table",
        [](std::uint32_t n_max, std::uint64_t m_max, std::size_t bound) {
          return c031_json(verify_c031_table(n_max, m_max, bound), config(bound, false)).dump();
        },
        py::arg("n_max") = 2, py::arg("m_max") = 12, py::arg("bound") = kDefaultCarrierBound);
  m.def("search_nonunital",
        [](std::uint64_t order_max) {
          return search_json(search_nonunital_weakly_pqbaer(order_max), config(kDefaultCarrierBound, false)).dump();
        },
        py::arg("order_max") = kNonunitalSearchBudget);
  m.def("run_cli", &run, py::arg("args"), "Runs the command line; returns (exit code, stdout, stderr).");
}
