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

#include "t2t3/timeml.h"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "markup.h"
#include "t2t3/errors.h"
#include "t2t3/unicode.h"

namespace t2t3 {
namespace {

using internal::MarkupMode;
using internal::MarkupReader;
using internal::MarkupToken;

bool IsXmlChar(char32_t c) {
  return c == 0x9 || c == 0xA || c == 0xD || (c >= 0x20 && c <= 0xD7FF) ||
         (c >= 0xE000 && c <= 0xFFFD) || (c >= 0x10000 && c <= 0x10FFFF);
}

bool AllXmlChars(std::u32string_view s) {
  return std::all_of(s.begin(), s.end(), IsXmlChar);
}

bool AllXmlChars(std::string_view utf8) {
  const auto decoded = FromUtf8(utf8);
  return decoded && AllXmlChars(*decoded);
}

// Elements that follow the text and carry no extent.
bool IsLinkElement(std::u32string_view name) {
  return name == U"TLINK" || name == U"MAKEINSTANCE" || name == U"SLINK" ||
         name == U"ALINK";
}

bool IsValidId(std::string_view id, ElementClass cls) {
  const std::string_view prefix = IdPrefix(cls);
  if (id.size() <= prefix.size() || !id.starts_with(prefix)) return false;
  return std::all_of(id.begin() + prefix.size(), id.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

bool IsTimeMLMod(std::string_view mod) {
  static const auto* mods = new std::unordered_set<std::string_view>{
      "BEFORE",       "AFTER",         "ON_OR_BEFORE", "ON_OR_AFTER",
      "LESS_THAN",    "MORE_THAN",     "EQUAL_OR_LESS", "EQUAL_OR_MORE",
      "START",        "MID",           "END",          "APPROX"};
  return mods->count(mod) > 0;
}

// Escapes for character data and attribute values. Carriage returns (and
// in attributes also tabs and newlines) become references so that they
// survive XML end-of-line and attribute normalization.
void AppendEscaped(std::string& out, std::u32string_view text, bool attribute) {
  std::u32string buffer;
  auto flush = [&] {
    out += ToUtf8(buffer);
    buffer.clear();
  };
  for (char32_t c : text) {
    const char* escape = nullptr;
    switch (c) {
      case '&': escape = "&amp;"; break;
      case '<': escape = "&lt;"; break;
      case '>': escape = "&gt;"; break;
      case '"': escape = "&quot;"; break;
      case '\'': escape = "&apos;"; break;
      case '\r': escape = "&#13;"; break;
      case '\n': if (attribute) escape = "&#10;"; break;
      case '\t': if (attribute) escape = "&#9;"; break;
      default: break;
    }
    if (escape) {
      flush();
      out += escape;
    } else {
      buffer += c;
    }
  }
  flush();
}

void AppendAttribute(std::string& out, std::string_view name,
                     std::string_view value) {
  out += ' ';
  out += name;
  out += "=\"";
  AppendEscaped(out, U32(value), true);
  out += '"';
}

std::string OpenTag(const Timex3& t) {
  std::string s = "<TIMEX3";
  AppendAttribute(s, "tid", t.tid);
  AppendAttribute(s, "type", TimexTypeName(t.type));
  AppendAttribute(s, "value", t.value);
  if (t.mod) AppendAttribute(s, "mod", *t.mod);
  AppendAttribute(s, "temporalFunction", t.temporal_function ? "true" : "false");
  AppendAttribute(s, "functionInDocument",
                  FunctionInDocumentName(t.function_in_document));
  if (t.anchor_time_id) AppendAttribute(s, "anchorTimeID", *t.anchor_time_id);
  return s + ">";
}

std::string OpenTag(const Event& e) {
  std::string s = "<EVENT";
  AppendAttribute(s, "eid", e.eid);
  AppendAttribute(s, "class", EventClassName(e.event_class));
  if (e.stem) AppendAttribute(s, "stem", *e.stem);
  return s + ">";
}

std::string OpenTag(const Signal& sig) {
  std::string s = "<SIGNAL";
  AppendAttribute(s, "sid", sig.sid);
  return s + ">";
}

std::string LinkTag(const TLink& l) {
  std::string s = "<TLINK";
  AppendAttribute(s, "lid", l.lid);
  if (l.time_id) AppendAttribute(s, "timeID", *l.time_id);
  if (l.event_id) AppendAttribute(s, "eventID", *l.event_id);
  if (l.rel_type) AppendAttribute(s, "relType", RelTypeName(*l.rel_type));
  if (l.related_to_time) AppendAttribute(s, "relatedToTime", *l.related_to_time);
  if (l.related_event_id)
    AppendAttribute(s, "relatedEventID", *l.related_event_id);
  if (l.signal_id) AppendAttribute(s, "signalID", *l.signal_id);
  return s + "/>";
}

struct InlineElement {
  Span span;
  std::string id;
  std::string open;
  const char* close;
};

// Parser state shared by ParseTimeML and ValidateSerialized. With a
// `schema` sink, attribute problems are recorded there instead of thrown.
class TimeMLReader {
 public:
  TimeMLReader(std::u32string_view source, std::vector<Violation>* schema)
      : source_(source), reader_(source, MarkupMode::kStrict), schema_(schema) {}

  TimeMLDocument Read(std::string doc_id);

 private:
  struct Open {
    std::u32string name;
    std::size_t start;
    std::size_t tag_offset;
    MarkupToken tag;
  };

  void Problem(const MarkupToken& tag, const std::string& id,
               const std::string& message) {
    if (!schema_) reader_.Fail(message, tag.offset);
    schema_->push_back({ViolationCode::kBadAttr, id, message});
  }

  std::optional<std::string> Attr(const MarkupToken& tag,
                                  std::u32string_view name) const {
    for (const auto& [key, value] : tag.attributes)
      if (key == name) return ToUtf8(value);
    return std::nullopt;
  }

  void StartElement(const MarkupToken& tag);
  void EndElement(const MarkupToken& tag);
  void FinishInline(const Open& open, std::size_t end);
  void AddLink(const MarkupToken& tag);
  void AddLinkElement(const MarkupToken& tag);

  std::u32string_view source_;
  MarkupReader reader_;
  std::vector<Violation>* schema_;
  TimeMLDocument doc_;
  std::vector<Open> stack_;
  bool seen_root_ = false;
  bool root_closed_ = false;
  bool seen_link_ = false;
  // MAKEINSTANCE eiid -> eventID.
  std::unordered_map<std::string, std::string> instances_;
  struct PendingLink {
    TLink link;
    std::optional<std::string> source_instance;
    std::optional<std::string> target_instance;
  };
  std::vector<PendingLink> links_;
};

void TimeMLReader::StartElement(const MarkupToken& tag) {
  if (tag.name == U"TimeML") {
    if (seen_root_ || !stack_.empty())
      reader_.Fail("unexpected <TimeML>", tag.offset);
    seen_root_ = true;
  } else if (root_closed_) {
    reader_.Fail("element after the root element", tag.offset);
  }
  stack_.push_back(Open{tag.name, doc_.text.size(), tag.offset, tag});
}

void TimeMLReader::FinishInline(const Open& open, std::size_t end) {
  const MarkupToken& tag = open.tag;
  const Span span{open.start, end};
  if (tag.name == U"TIMEX3") {
    Timex3 t;
    t.tid = Attr(tag, U"tid").value_or("");
    t.span = span;
    if (auto type = Attr(tag, U"type")) {
      if (auto parsed = ParseTimexType(*type)) {
        t.type = *parsed;
      } else {
        Problem(tag, t.tid, "invalid TIMEX3 type '" + *type + "'");
      }
    } else {
      Problem(tag, t.tid, "TIMEX3 without type");
    }
    t.value = Attr(tag, U"value").value_or("");
    t.mod = Attr(tag, U"mod");
    if (auto tf = Attr(tag, U"temporalFunction")) {
      if (*tf == "true") {
        t.temporal_function = true;
      } else if (*tf != "false") {
        Problem(tag, t.tid, "invalid temporalFunction '" + *tf + "'");
      }
    }
    if (auto fid = Attr(tag, U"functionInDocument")) {
      if (auto parsed = ParseFunctionInDocument(*fid)) {
        t.function_in_document = *parsed;
      } else {
        Problem(tag, t.tid, "invalid functionInDocument '" + *fid + "'");
      }
    }
    t.anchor_time_id = Attr(tag, U"anchorTimeID");
    doc_.timex3s.push_back(std::move(t));
  } else if (tag.name == U"EVENT") {
    Event e;
    e.eid = Attr(tag, U"eid").value_or("");
    e.span = span;
    if (auto cls = Attr(tag, U"class")) {
      if (auto parsed = ParseEventClass(*cls)) {
        e.event_class = *parsed;
      } else {
        Problem(tag, e.eid, "invalid EVENT class '" + *cls + "'");
      }
    } else {
      Problem(tag, e.eid, "EVENT without class");
    }
    e.stem = Attr(tag, U"stem");
    doc_.events.push_back(std::move(e));
  } else if (tag.name == U"SIGNAL") {
    doc_.signals.push_back(Signal{Attr(tag, U"sid").value_or(""), span});
  }
}

void TimeMLReader::AddLink(const MarkupToken& tag) {
  PendingLink p;
  TLink& l = p.link;
  l.lid = Attr(tag, U"lid").value_or("");
  l.time_id = Attr(tag, U"timeID");
  l.event_id = Attr(tag, U"eventID");
  l.related_to_time = Attr(tag, U"relatedToTime");
  l.related_event_id = Attr(tag, U"relatedEventID");
  l.signal_id = Attr(tag, U"signalID");
  p.source_instance = Attr(tag, U"eventInstanceID");
  p.target_instance = Attr(tag, U"relatedToEventInstance");
  if (auto rel = Attr(tag, U"relType")) {
    // INCLUDED_BY is a common misspelling of IS_INCLUDED.
    if (*rel == "INCLUDED_BY") *rel = "IS_INCLUDED";
    if (auto parsed = ParseRelType(*rel)) {
      l.rel_type = *parsed;
    } else {
      Problem(tag, l.lid, "invalid relType '" + *rel + "'");
    }
  }
  links_.push_back(std::move(p));
}

void TimeMLReader::AddLinkElement(const MarkupToken& tag) {
  seen_link_ = true;
  if (tag.name == U"TLINK") {
    AddLink(tag);
  } else if (tag.name == U"MAKEINSTANCE") {
    if (auto eiid = Attr(tag, U"eiid"))
      instances_[*eiid] = Attr(tag, U"eventID").value_or("");
  }
}

void TimeMLReader::EndElement(const MarkupToken& tag) {
  if (stack_.empty() || stack_.back().name != tag.name)
    reader_.Fail("mismatched </" + ToUtf8(tag.name) + ">", tag.offset);
  Open open = std::move(stack_.back());
  stack_.pop_back();
  if (open.name == U"TimeML") {
    root_closed_ = true;
    return;
  }
  FinishInline(open, doc_.text.size());
}

TimeMLDocument TimeMLReader::Read(std::string doc_id) {
  doc_.doc_id = std::move(doc_id);
  while (auto token = reader_.Next()) {
    switch (token->kind) {
      case MarkupToken::kText: {
        const bool outside = (seen_root_ && stack_.empty()) ||
                             (!seen_root_ && stack_.empty() && doc_.text.empty() &&
                              Trim(token->text).empty());
        if (outside || seen_link_) {
          if (!Trim(token->text).empty())
            reader_.Fail(seen_link_ ? "text after link elements"
                                    : "text outside the root element",
                         token->offset);
          break;
        }
        if (!AllXmlChars(token->text))
          reader_.Fail("character not allowed in XML", token->offset);
        doc_.text += token->text;
        break;
      }
      case MarkupToken::kStartTag:
        StartElement(*token);
        break;
      case MarkupToken::kEndTag:
        if (!stack_.empty() && stack_.back().name == token->name &&
            IsLinkElement(token->name)) {
          // <TLINK ...></TLINK> is the same as <TLINK .../>.
          MarkupToken tag = std::move(stack_.back().tag);
          stack_.pop_back();
          AddLinkElement(tag);
          break;
        }
        EndElement(*token);
        break;
      case MarkupToken::kEmptyTag:
        if (root_closed_)
          reader_.Fail("element after the root element", token->offset);
        if (IsLinkElement(token->name)) {
          AddLinkElement(*token);
        } else if (token->name == U"TIMEX3" || token->name == U"EVENT" ||
                   token->name == U"SIGNAL") {
          FinishInline(Open{token->name, doc_.text.size(), token->offset, *token},
                       doc_.text.size());
        }
        break;
    }
  }
  if (!stack_.empty())
    reader_.Fail("unclosed <" + ToUtf8(stack_.back().name) + ">",
                 stack_.back().tag_offset);

  for (PendingLink& p : links_) {
    auto resolve = [&](const std::optional<std::string>& instance,
                       std::optional<std::string>& event_id) {
      if (!instance || event_id) return;
      auto it = instances_.find(*instance);
      event_id = it == instances_.end() ? *instance : it->second;
    };
    resolve(p.source_instance, p.link.event_id);
    resolve(p.target_instance, p.link.related_event_id);
    doc_.tlinks.push_back(std::move(p.link));
  }
  auto by_span = [](const auto& a, const auto& b) { return a.span < b.span; };
  std::stable_sort(doc_.timex3s.begin(), doc_.timex3s.end(), by_span);
  std::stable_sort(doc_.events.begin(), doc_.events.end(), by_span);
  std::stable_sort(doc_.signals.begin(), doc_.signals.end(), by_span);
  return std::move(doc_);
}

std::u32string DecodeXmlInput(std::string_view xml) {
  auto text = FromUtf8(xml);
  if (!text) throw MalformedXml("input is not valid UTF-8", 1, 1);
  // A byte order mark is not part of the document.
  if (!text->empty() && text->front() == 0xFEFF) text->erase(0, 1);
  return std::move(*text);
}

}  // namespace

std::string_view ViolationCodeName(ViolationCode code) {
  switch (code) {
    case ViolationCode::kDupId: return "DUP_ID";
    case ViolationCode::kDanglingRef: return "DANGLING_REF";
    case ViolationCode::kSpanOverlap: return "SPAN_OVERLAP";
    case ViolationCode::kBadAttr: return "BAD_ATTR";
    case ViolationCode::kMalformedXml: return "MALFORMED_XML";
    case ViolationCode::kEmptyValue: return "EMPTY_VALUE";
  }
  return "BAD_ATTR";
}

std::vector<Violation> Validate(const TimeMLDocument& doc) {
  std::vector<Violation> out;
  auto report = [&](ViolationCode code, const std::string& id,
                    std::string message) {
    out.push_back({code, id, std::move(message)});
  };

  if (!AllXmlChars(doc.text))
    report(ViolationCode::kMalformedXml, "",
           "text contains characters that XML 1.0 cannot represent");

  std::vector<InlineElement> inline_elements;
  auto check_element = [&](const std::string& id, const Span& span,
                           ElementClass cls, std::set<std::string>& seen) {
    if (!IsValidId(id, cls))
      report(ViolationCode::kBadAttr, id,
             "ID '" + id + "' does not have the form " +
                 std::string(IdPrefix(cls)) + "<digits>");
    if (!seen.insert(id).second)
      report(ViolationCode::kDupId, id, "ID '" + id + "' is used twice");
    if (span.start >= span.end || span.end > doc.text.size())
      report(ViolationCode::kBadAttr, id,
             "span [" + std::to_string(span.start) + "," +
                 std::to_string(span.end) + ") is empty or outside the text");
    inline_elements.push_back({span, id, {}, nullptr});
  };

  std::set<std::string> tids, eids, sids, lids;
  for (const Timex3& t : doc.timex3s) {
    check_element(t.tid, t.span, ElementClass::kTimex3, tids);
    if (t.value.empty())
      report(ViolationCode::kEmptyValue, t.tid, "TIMEX3 has an empty value");
    if (!AllXmlChars(t.value))
      report(ViolationCode::kBadAttr, t.tid, "value is not representable");
    if (t.mod && !IsTimeMLMod(*t.mod))
      report(ViolationCode::kBadAttr, t.tid, "invalid mod '" + *t.mod + "'");
  }
  for (const Event& e : doc.events) {
    check_element(e.eid, e.span, ElementClass::kEvent, eids);
    if (e.stem && !AllXmlChars(*e.stem))
      report(ViolationCode::kBadAttr, e.eid, "stem is not representable");
  }
  for (const Signal& s : doc.signals)
    check_element(s.sid, s.span, ElementClass::kSignal, sids);

  for (const Timex3& t : doc.timex3s)
    if (t.anchor_time_id && !tids.count(*t.anchor_time_id))
      report(ViolationCode::kDanglingRef, *t.anchor_time_id,
             t.tid + " anchors to missing TIMEX3 " + *t.anchor_time_id);

  for (const TLink& l : doc.tlinks) {
    if (!IsValidId(l.lid, ElementClass::kTLink))
      report(ViolationCode::kBadAttr, l.lid,
             "ID '" + l.lid + "' does not have the form l<digits>");
    if (!lids.insert(l.lid).second)
      report(ViolationCode::kDupId, l.lid, "ID '" + l.lid + "' is used twice");
    if (l.time_id.has_value() == l.event_id.has_value())
      report(ViolationCode::kBadAttr, l.lid,
             "TLINK needs exactly one of timeID and eventID");
    if (l.related_to_time.has_value() == l.related_event_id.has_value())
      report(ViolationCode::kBadAttr, l.lid,
             "TLINK needs exactly one of relatedToTime and relatedEventID");
    auto ref = [&](const std::optional<std::string>& id,
                   const std::set<std::string>& ids, const char* what) {
      if (id && !ids.count(*id))
        report(ViolationCode::kDanglingRef, *id,
               l.lid + " refers to missing " + what + " " + *id);
    };
    ref(l.time_id, tids, "TIMEX3");
    ref(l.related_to_time, tids, "TIMEX3");
    ref(l.event_id, eids, "EVENT");
    ref(l.related_event_id, eids, "EVENT");
    ref(l.signal_id, sids, "SIGNAL");
  }

  std::stable_sort(inline_elements.begin(), inline_elements.end(),
                   [](const InlineElement& a, const InlineElement& b) {
                     return a.span < b.span;
                   });
  std::size_t reach = 0;
  const InlineElement* reacher = nullptr;
  for (const InlineElement& e : inline_elements) {
    if (e.span.empty()) continue;
    if (reacher && e.span.start < reach)
      report(ViolationCode::kSpanOverlap, e.id,
             e.id + " overlaps " + reacher->id);
    if (e.span.end > reach) {
      reach = e.span.end;
      reacher = &e;
    }
  }
  return out;
}

std::string Serialize(const TimeMLDocument& doc) {
  const auto violations = Validate(doc);
  if (!violations.empty())
    throw InvalidDocument("cannot serialize an invalid document: " +
                          std::string(ViolationCodeName(violations[0].code)) +
                          " " + violations[0].message);

  std::vector<InlineElement> elements;
  for (const Timex3& t : doc.timex3s)
    elements.push_back({t.span, t.tid, OpenTag(t), "</TIMEX3>"});
  for (const Event& e : doc.events)
    elements.push_back({e.span, e.eid, OpenTag(e), "</EVENT>"});
  for (const Signal& s : doc.signals)
    elements.push_back({s.span, s.sid, OpenTag(s), "</SIGNAL>"});
  std::sort(elements.begin(), elements.end(),
            [](const InlineElement& a, const InlineElement& b) {
              return a.span < b.span;
            });

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<TimeML>";
  const std::u32string_view text = doc.text;
  std::size_t cursor = 0;
  for (const InlineElement& e : elements) {
    AppendEscaped(out, text.substr(cursor, e.span.start - cursor), false);
    out += e.open;
    AppendEscaped(out, text.substr(e.span.start, e.span.length()), false);
    out += e.close;
    cursor = e.span.end;
  }
  AppendEscaped(out, text.substr(cursor), false);
  for (std::size_t i = 0; i < doc.tlinks.size(); ++i) {
    if (i > 0) out += '\n';
    out += LinkTag(doc.tlinks[i]);
  }
  if (!doc.tlinks.empty()) out += '\n';
  out += "</TimeML>\n";
  return out;
}

TimeMLDocument ParseTimeML(std::string_view xml, std::string doc_id) {
  const std::u32string source = DecodeXmlInput(xml);
  return TimeMLReader(source, nullptr).Read(std::move(doc_id));
}

std::vector<Violation> ValidateSerialized(std::string_view xml) {
  std::vector<Violation> schema;
  TimeMLDocument doc;
  try {
    const std::u32string source = DecodeXmlInput(xml);
    doc = TimeMLReader(source, &schema).Read({});
  } catch (const MalformedXml& e) {
    return {{ViolationCode::kMalformedXml, "", e.what()}};
  }
  for (Violation& v : Validate(doc)) schema.push_back(std::move(v));
  return schema;
}

std::string FormatViolations(const std::vector<Violation>& violations) {
  std::string out;
  for (const Violation& v : violations) {
    out += ViolationCodeName(v.code);
    out += '\t';
    out += v.element_id;
    out += '\t';
    for (char c : v.message) out += (c == '\t' || c == '\n') ? ' ' : c;
    out += '\n';
  }
  return out;
}

}  // namespace t2t3
