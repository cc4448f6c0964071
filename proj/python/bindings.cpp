#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sufmsel/apps.hpp"
#include "sufmsel/driver.hpp"
#include "sufmsel/lcp.hpp"
#include "sufmsel/oracle.hpp"

namespace py = pybind11;
using namespace sufmsel;

namespace {

py::dict metrics_dict(const Meter& m) {
  py::dict d;
  d["symbol_cmp"] = m.symbol_cmp;
  d["key_cmp"] = m.key_cmp;
  py::dict ev;
  for (int k = 0; k < kEventKinds; ++k) ev[event_name(static_cast<EventKind>(k))] = m.events[k];
  d["events"] = ev;
  return d;
}

Options options(bool debug) {
  Options o;
  o.debug = debug;
  return o;
}

}  // namespace

PYBIND11_MODULE(_sufmsel, m) {
  py::register_exception<TextError>(m, "TextError", PyExc_ValueError);

  py::class_<Text>(m, "Text")
      .def(py::init([](const std::string& s, bool terminated) { return load_text(s, terminated); }), py::arg("text"),
           py::arg("terminated") = false)
      .def_static("from_symbols", &Text::from_symbols, py::arg("body"))
      .def("__len__", &Text::size)
      .def("__str__", &Text::render);

  py::class_<SelectionResult>(m, "Selection")
      .def_readonly("ranks", &SelectionResult::ranks)
      .def_readonly("positions", &SelectionResult::positions)
      .def_readonly("lcps", &SelectionResult::lcps)
      .def_property_readonly("metrics", [](const SelectionResult& r) { return metrics_dict(r.metrics); });

  py::class_<BwtSegment>(m, "BwtSegment")
      .def_readonly("ranks", &BwtSegment::ranks)
      .def_readonly("positions", &BwtSegment::positions)
      .def_readonly("symbols", &BwtSegment::symbols)
      .def_readonly("text", &BwtSegment::text)
      .def_property_readonly("metrics", [](const BwtSegment& s) { return metrics_dict(s.metrics); });

  py::class_<PartialIndex>(m, "PartialIndex")
      .def_readonly("ranks", &PartialIndex::ranks)
      .def_readonly("positions", &PartialIndex::positions)
      .def_readonly("lcps", &PartialIndex::lcps)
      .def_property_readonly("metrics", [](const PartialIndex& p) { return metrics_dict(p.metrics); });

  py::class_<LcpState>(m, "LcpState")
      .def("__len__", &LcpState::size)
      .def("query", &LcpState::lcp_query, py::arg("i"), py::arg("j"));

  m.def("multiselect", [](const Text& t, std::vector<std::int64_t> r, bool debug) { return multiselect(t, r, options(debug)); },
        py::arg("text"), py::arg("ranks"), py::arg("debug") = false);
  m.def("multiselect_consecutive",
        [](const Text& t, std::int64_t a, std::int64_t b, bool debug) { return multiselect_consecutive(t, a, b, options(debug)); },
        py::arg("text"), py::arg("a"), py::arg("b"), py::arg("debug") = false);
  m.def("bwt_segment", [](const Text& t, std::int64_t a, std::int64_t b) { return bwt_segment(t, a, b); });
  m.def("bwt_sample", [](const Text& t, std::vector<std::int64_t> r) { return bwt_sample(t, r); });
  m.def("sample_text_suffixes", [](const Text& t, std::int32_t q) { return sample_text_suffixes(t, q); });
  m.def("sa_chunk", [](const Text& t, std::int64_t a, std::int64_t b) { return sa_chunk(t, a, b); });
  m.def("partial_index", [](const Text& t, std::vector<std::int64_t> r) { return partial_index(t, r); });
  m.def("lcp_state", &lcp_state);
  m.def("tree", [](const Text& t, const PartialIndex& p) { return render_tree(t, build_partial_suffix_tree(t, p)); });
  m.def("to_json", [](const PartialIndex& p, const Text& t) { return to_json(p, t); });
  m.def("to_json", [](const BwtSegment& s, const Text& t) { return to_json(s, t); });
  m.def("oracle_sa", [](const Text& t) { return oracle_sa(t); });
  m.attr("schema_version") = kSchemaVersion;
}
