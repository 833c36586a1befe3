#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "valab/cli.hpp"
#include "valab/fixtures.hpp"
#include "valab/forms.hpp"
#include "valab/io.hpp"
#include "valab/semiconformal.hpp"

namespace py = pybind11;

namespace {

std::vector<std::string> strings(const valab::Vector& v) {
  std::vector<std::string> out;
  for (const auto& q : v) out.push_back(valab::to_string(q));
  return out;
}

std::vector<std::vector<std::string>> basis_strings(const valab::Subspace& s) {
  std::vector<std::vector<std::string>> out;
  for (const auto& v : s.basis_vectors()) out.push_back(strings(v));
  return out;
}

py::dict command_dict(const valab::CommandResult& r) {
  py::dict d;
  d["report_json"] = valab::report_json(r.command, r.fixture_id, r.report);
  d["exit_code"] = r.exit_code;
  d["errors"] = r.errors;
  return d;
}

}  // namespace

PYBIND11_MODULE(_valab, m) {
  m.doc() = "Exact checks and invariants for vertex algebroids";
  static py::exception<valab::Error> error(m, "ValabError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const valab::Error& e) {
      py::object kind = py::str(std::string(valab::to_string(e.kind())));
      PyErr_SetObject(error.ptr(), py::make_tuple(kind, e.what()).ptr());
    }
  });

  py::class_<valab::AlgebroidFile>(m, "AlgebroidFile")
      .def_readonly("id", &valab::AlgebroidFile::id)
      .def_readonly("has_algebroid", &valab::AlgebroidFile::has_algebroid)
      .def_property_readonly("a_names", [](const valab::AlgebroidFile& f) { return f.algebroid.a_names(); })
      .def_property_readonly("b_names", [](const valab::AlgebroidFile& f) { return f.algebroid.b_names(); })
      .def("serialize", &valab::serialize);

  m.def("parse_file", &valab::parse_file, py::arg("text"));
  m.def("load_file", [](const std::string& path) { return valab::load_file(path); }, py::arg("path"));

  m.def("ex61", &valab::fixtures::ex61, py::arg("k"));
  m.def("ex62", [](const std::string& alpha) { return valab::fixtures::ex62(valab::parse_rational(alpha)); },
        py::arg("alpha"));
  m.def("ex63", [](const std::string& rho) { return valab::fixtures::ex63(valab::parse_rational(rho)); },
        py::arg("rho"));
  m.def("semisimple", &valab::fixtures::semisimple, py::arg("l"));
  m.def("corpus_ids", [] {
    std::vector<std::string> ids;
    for (const auto& f : valab::fixtures::corpus()) ids.push_back(f.id);
    return ids;
  });

  m.def("check", [](const valab::AlgebroidFile& f) { return command_dict(valab::cmd_check(f)); });
  m.def("invariants", [](const valab::AlgebroidFile& f) { return command_dict(valab::cmd_invariants(f)); });
  m.def("semiconformal", [](const valab::AlgebroidFile& f) { return command_dict(valab::cmd_semiconformal(f)); });
  m.def("mutate", [](const valab::AlgebroidFile& f, std::uint64_t seed, std::size_t count) {
    return command_dict(valab::cmd_mutate(f, seed, count));
  }, py::arg("file"), py::arg("seed"), py::arg("count"));

  m.def("jacobson_radical", [](const valab::AlgebroidFile& f) { return basis_strings(valab::jacobson_radical(f.algebra())); });
  m.def("socle", [](const valab::AlgebroidFile& f) { return basis_strings(valab::socle(f.algebra())); });
  m.def("is_gorenstein", [](const valab::AlgebroidFile& f) { return valab::is_gorenstein(f.algebra()); });
  m.def("solve_l1", [](const valab::AlgebroidFile& f) {
    valab::AffineSpace s = valab::solve_L1(f.algebroid);
    py::dict d;
    d["particular"] = strings(s.particular);
    d["directions"] = basis_strings(s.homogeneous);
    return d;
  });
  m.def("heisenberg", [](const valab::AlgebroidFile& f) {
    auto ctx = valab::make_context(f.algebroid, f.grading, f.form, f.t);
    valab::HeisenbergWitness w = valab::heisenberg_search(ctx);
    py::dict d;
    d["g"] = strings(w.g);
    d["rho"] = valab::to_string(w.rho);
    d["beta"] = valab::to_string(w.beta);
    d["h_prime"] = strings(w.h_prime);
    d["normalized"] = w.normalized;
    if (w.h) d["h"] = strings(*w.h);
    return d;
  });
}
