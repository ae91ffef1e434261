// Copyright 2026 The t2t3 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings for the t2t3 library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "t2t3/errors.h"
#include "t2t3/ingest.h"
#include "t2t3/scorer.h"
#include "t2t3/timeml.h"
#include "t2t3/transducer.h"

namespace py = pybind11;

namespace t2t3 {
namespace {

py::dict ReportDict(const ConversionReport& r) {
  py::dict d;
  d["timex2"] = r.timex2_total;
  d["timex2_leaves"] = r.timex2_leaves;
  d["nested_outers"] = r.nested_outers;
  d["timex3"] = r.timex3_emitted;
  py::dict paths;
  for (ConversionPath p : {ConversionPath::kSimple, ConversionPath::kSignalled,
                           ConversionPath::kNested, ConversionPath::kTrimmed})
    paths[py::str(std::string(ConversionPathName(p)))] = r.PathCount(p);
  d["paths"] = paths;
  py::list warnings;
  for (const ConversionWarning& w : r.warnings)
    warnings.append(py::make_tuple(w.kind, w.span.start, w.span.end, w.message));
  d["warnings"] = warnings;
  py::list dropped;
  for (const DroppedValue& v : r.dropped)
    dropped.append(py::make_tuple(v.span.start, v.span.end, v.val, v.reason));
  d["dropped"] = dropped;
  return d;
}

py::dict ScoreDict(const ScoreReport& r) {
  py::dict d;
  d["regime"] = std::string(ScoreRegimeName(r.regime));
  d["precision"] = r.precision;
  d["recall"] = r.recall;
  d["f1"] = r.f1;
  d["tp"] = r.tp;
  d["fp"] = r.fp;
  d["fn"] = r.fn;
  return d;
}

py::list ViolationList(const std::vector<Violation>& violations) {
  py::list out;
  for (const Violation& v : violations)
    out.append(py::make_tuple(std::string(ViolationCodeName(v.code)),
                              v.element_id, v.message));
  return out;
}

ConversionConfig MakeConfig(std::size_t trim_cutoff, bool untyped_tlinks) {
  ConversionConfig config;
  config.trim_cutoff = trim_cutoff;
  if (untyped_tlinks) config.signal_relation_map.clear();
  return config;
}

std::string TypeName(TimexType t) { return std::string(TimexTypeName(t)); }

}  // namespace
}  // namespace t2t3

PYBIND11_MODULE(t2t3, m) {
  using namespace t2t3;
  m.doc() = "TIMEX2 to TimeML conversion";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result(
      [&]() -> py::object { return py::exception<Error>(m, "Error"); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object& type = error.get_stored();
      py::object instance = type(e.what());
      instance.attr("kind") = e.kind();
      PyErr_SetObject(type.ptr(), instance.ptr());
    }
  });

  py::class_<Span>(m, "Span")
      .def(py::init<>())
      .def(py::init([](std::size_t s, std::size_t e) { return Span{s, e}; }))
      .def_readwrite("start", &Span::start)
      .def_readwrite("end", &Span::end)
      .def("__eq__", [](const Span& a, const Span& b) { return a == b; })
      .def("__repr__", [](const Span& s) {
        return "Span(" + std::to_string(s.start) + ", " + std::to_string(s.end) +
               ")";
      });

  py::class_<Document>(m, "Document")
      .def_property_readonly("text", &Document::text)
      .def_property_readonly("doc_id", &Document::doc_id)
      .def_property_readonly("dct", &Document::dct)
      .def("count_timex2", &Document::CountTimex2);

  py::class_<Timex3>(m, "Timex3")
      .def(py::init<>())
      .def_readwrite("tid", &Timex3::tid)
      .def_readwrite("span", &Timex3::span)
      .def_property(
          "type", [](const Timex3& t) { return TypeName(t.type); },
          [](Timex3& t, const std::string& name) {
            auto parsed = ParseTimexType(name);
            if (!parsed) throw py::value_error("unknown TIMEX3 type " + name);
            t.type = *parsed;
          })
      .def_readwrite("value", &Timex3::value)
      .def_readwrite("mod", &Timex3::mod)
      .def_readwrite("temporal_function", &Timex3::temporal_function)
      .def_readwrite("anchor_time_id", &Timex3::anchor_time_id);

  py::class_<Event>(m, "Event")
      .def(py::init<>())
      .def_readwrite("eid", &Event::eid)
      .def_readwrite("span", &Event::span)
      .def_readwrite("stem", &Event::stem);

  py::class_<Signal>(m, "Signal")
      .def(py::init<>())
      .def_readwrite("sid", &Signal::sid)
      .def_readwrite("span", &Signal::span);

  py::class_<TLink>(m, "TLink")
      .def(py::init<>())
      .def_readwrite("lid", &TLink::lid)
      .def_readwrite("time_id", &TLink::time_id)
      .def_readwrite("event_id", &TLink::event_id)
      .def_readwrite("related_to_time", &TLink::related_to_time)
      .def_readwrite("related_event_id", &TLink::related_event_id)
      .def_readwrite("signal_id", &TLink::signal_id)
      .def_property(
          "rel_type",
          [](const TLink& l) -> std::optional<std::string> {
            if (!l.rel_type) return std::nullopt;
            return std::string(RelTypeName(*l.rel_type));
          },
          [](TLink& l, std::optional<std::string> name) {
            if (!name) {
              l.rel_type.reset();
              return;
            }
            auto parsed = ParseRelType(*name);
            if (!parsed) throw py::value_error("unknown relType " + *name);
            l.rel_type = *parsed;
          });

  py::class_<TimeMLDocument>(m, "TimeMLDocument")
      .def(py::init<>())
      .def_readwrite("text", &TimeMLDocument::text)
      .def_readwrite("timex3s", &TimeMLDocument::timex3s)
      .def_readwrite("events", &TimeMLDocument::events)
      .def_readwrite("signals", &TimeMLDocument::signals)
      .def_readwrite("tlinks", &TimeMLDocument::tlinks)
      .def_readwrite("doc_id", &TimeMLDocument::doc_id)
      .def("__eq__", [](const TimeMLDocument& a, const TimeMLDocument& b) {
        return a == b;
      });

  m.def(
      "normalize_encoding",
      [](py::bytes raw, std::optional<std::string> declared) {
        return NormalizeEncoding(std::string(raw), std::move(declared));
      },
      py::arg("raw"), py::arg("declared") = py::none());
  m.def(
      "parse_inline",
      [](const std::u32string& markup, std::string doc_id,
         std::optional<std::string> dct) {
        return ParseInline(markup, InlineOptions{std::move(doc_id), std::move(dct)});
      },
      py::arg("markup"), py::arg("doc_id") = "", py::arg("dct") = py::none());
  m.def("infer_type",
        [](const std::string& val, bool set) { return TypeName(InferType(val, set)); },
        py::arg("val"), py::arg("set") = false);
  m.def(
      "convert_document",
      [](const Document& doc, std::size_t trim_cutoff, bool untyped_tlinks) {
        Conversion c = ConvertDocument(doc, MakeConfig(trim_cutoff, untyped_tlinks));
        return py::make_tuple(std::move(c.timeml), ReportDict(c.report));
      },
      py::arg("doc"), py::arg("trim_cutoff") = 6,
      py::arg("untyped_tlinks") = false);
  m.def(
      "convert",
      [](const std::u32string& markup, std::size_t trim_cutoff,
         bool untyped_tlinks) {
        Conversion c = ConvertDocument(ParseInline(markup),
                                       MakeConfig(trim_cutoff, untyped_tlinks));
        return Serialize(c.timeml);
      },
      py::arg("markup"), py::arg("trim_cutoff") = 6,
      py::arg("untyped_tlinks") = false,
      "Inline TIMEX2 markup to serialized TimeML.");
  m.def("serialize", &Serialize, py::arg("doc"));
  m.def("parse_timeml", &ParseTimeML, py::arg("xml"), py::arg("doc_id") = "");
  m.def("validate", [](const TimeMLDocument& doc) { return ViolationList(Validate(doc)); },
        py::arg("doc"));
  m.def("validate_serialized",
        [](const std::string& xml) { return ViolationList(ValidateSerialized(xml)); },
        py::arg("xml"));
  m.def("score_entity",
        [](const TimeMLDocument& g, const TimeMLDocument& s) {
          return ScoreDict(ScoreEntity(g, s));
        },
        py::arg("gold"), py::arg("sys"));
  m.def("score_token",
        [](const TimeMLDocument& g, const TimeMLDocument& s) {
          return ScoreDict(ScoreToken(g, s));
        },
        py::arg("gold"), py::arg("sys"));
}
