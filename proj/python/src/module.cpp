#include <string>  // for string

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "partmon/certificate.hpp"
#include "partmon/exception.hpp"
#include "partmon/full.hpp"
#include "partmon/generators.hpp"
#include "partmon/normal_form.hpp"
#include "partmon/verify.hpp"

namespace py = pybind11;
using namespace partmon;

namespace {
  Word word(std::string const& text, degree_type n, std::string const& alphabet) {
    return parse_word(text, n, parse_alphabet(alphabet));
  }

  Diagram image(Word const& w) {
    return w.alphabet() == Alphabet::ET ? eval_phi(w) : eval_Phi(w);
  }

  py::dict decision(Decision const& d) {
    py::dict out;
    out["equal"] = d.equal;
    if (d.certificate) {
      out["steps"]       = d.certificate->size();
      out["certificate"] = to_jsonl(*d.certificate);
    }
    return out;
  }
}  // namespace

PYBIND11_MODULE(_partmon, m) {
  m.doc() = "Partition monoid diagrams, presentations and rewriting certificates";

  py::register_exception<Exception>(m, "PartmonError", PyExc_ValueError);

  py::class_<Diagram>(m, "Diagram")
      .def(py::init(&parse_diagram), py::arg("text"))
      .def_static("identity", &Diagram::identity)
      .def_property_readonly("degree", &Diagram::degree)
      .def_property_readonly("rank", &Diagram::rank)
      .def_property_readonly("dom", &Diagram::dom)
      .def_property_readonly("codom", &Diagram::codom)
      .def_property_readonly("ker", [](Diagram const& d) { return to_string(d.ker()); })
      .def_property_readonly("coker", [](Diagram const& d) { return to_string(d.coker()); })
      .def("is_unit", &Diagram::is_unit)
      .def("is_idempotent", &Diagram::is_idempotent)
      .def("render", [](Diagram const& d) { return render(d); })
      .def("__mul__", [](Diagram const& a, Diagram const& b) { return a * b; })
      .def("__eq__", [](Diagram const& a, Diagram const& b) { return a == b; })
      .def("__hash__", [](Diagram const& d) { return std::hash<Diagram>{}(d); })
      .def("__str__", [](Diagram const& d) { return to_string(d); })
      .def("__repr__", [](Diagram const& d) { return "Diagram('" + to_string(d) + "')"; });

  m.def("gen_e", &gen_e, py::arg("n"), py::arg("r"));
  m.def("gen_t", &gen_t, py::arg("n"), py::arg("i"), py::arg("j"));
  m.def("gen_s", &gen_s, py::arg("n"), py::arg("i"));
  m.def("gen_f", &gen_f, py::arg("n"), py::arg("i"), py::arg("j"));

  m.def(
      "evaluate",
      [](std::string const& w, degree_type n, std::string const& a) {
        return image(word(w, n, a));
      },
      py::arg("word"), py::arg("n"), py::arg("alphabet") = "et");

  m.def(
      "normal_form",
      [](std::string const& w, degree_type n, std::string const& a) {
        Word const u     = word(w, n, a);
        auto [nf, cert]  = u.alphabet() == Alphabet::ET ? normal_form_ET(u) : normal_form_full(u);
        py::dict out;
        out["word"]        = to_string(nf.word);
        out["ker"]         = to_string(nf.eps);
        out["alpha"]       = to_string(nf.alpha);
        out["coker"]       = to_string(nf.eta);
        out["steps"]       = cert.size();
        out["certificate"] = to_jsonl(cert);
        return out;
      },
      py::arg("word"), py::arg("n"), py::arg("alphabet") = "et");

  m.def(
      "equal",
      [](std::string const& u, std::string const& v, degree_type n, std::string const& a) {
        Word const x = word(u, n, a);
        Word const y = word(v, n, a);
        return decision(x.alphabet() == Alphabet::ET ? decide_sim(x, y) : decide_approx(x, y));
      },
      py::arg("u"), py::arg("v"), py::arg("n"), py::arg("alphabet") = "et");

  m.def(
      "replay",
      [](std::string const& jsonl) {
        ReplayResult const r = replay(from_jsonl(jsonl), ImageCheck::relations);
        return py::make_tuple(r.ok, r.message);
      },
      py::arg("jsonl"));

  m.def("factorize", [](Diagram const& d) { return to_string(factorize_diagram(d)); });
  m.def("bell", &bell, py::arg("m"));
  m.def(
      "count_Pn", [](degree_type n) { return enumerate_Pn(n).size(); }, py::arg("n"));
}
