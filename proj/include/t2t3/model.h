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

// Shared document model: TIMEX2 source documents and the TimeML documents
// produced from them. Offsets are Unicode scalar values into UTF-32 text.

#ifndef T2T3_MODEL_H_
#define T2T3_MODEL_H_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace t2t3 {

// Half-open character range [start, end).
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  bool empty() const { return start == end; }
  bool Contains(const Span& other) const {
    return start <= other.start && other.end <= end;
  }
  bool Overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }

  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

enum class AnchorDir { kBefore, kAfter, kAsOf, kStarting, kEnding };

std::string_view AnchorDirName(AnchorDir dir);
std::optional<AnchorDir> ParseAnchorDir(std::string_view name);

// One source TIMEX2 annotation, possibly with embedded children.
struct Timex2 {
  Span span;
  std::string val;
  bool set = false;
  std::optional<std::string> mod;
  std::optional<std::string> anchor_val;
  std::optional<AnchorDir> anchor_dir;
  std::vector<Timex2> children;
  std::optional<std::string> source_id;
  // Attributes we do not interpret. Kept for debugging, never emitted.
  std::map<std::string, std::string> extra;

  bool is_leaf() const { return children.empty(); }
  // This annotation plus all descendants.
  std::size_t TreeSize() const;

  friend bool operator==(const Timex2&, const Timex2&) = default;
};

// A source text with its TIMEX2 forest. Construction sorts the forest by
// start offset and rejects spans that escape the text, escape their parent,
// or overlap a sibling (SpanConflict).
class Document {
 public:
  Document() = default;
  Document(std::u32string text, std::vector<Timex2> timexes,
           std::string doc_id = {}, std::optional<std::string> dct = {},
           std::optional<Span> dct_span = {});

  const std::u32string& text() const { return text_; }
  const std::vector<Timex2>& timexes() const { return timexes_; }
  const std::string& doc_id() const { return doc_id_; }
  const std::optional<std::string>& dct() const { return dct_; }
  // Span of the TIMEX2 that supplied the creation time, when it came from
  // the text rather than an override.
  const std::optional<Span>& dct_span() const { return dct_span_; }

  std::u32string_view Slice(const Span& span) const {
    return std::u32string_view(text_).substr(span.start, span.length());
  }

  // Total number of TIMEX2 annotations, nested ones included.
  std::size_t CountTimex2() const;

  friend bool operator==(const Document&, const Document&) = default;

 private:
  std::u32string text_;
  std::vector<Timex2> timexes_;
  std::string doc_id_;
  std::optional<std::string> dct_;
  std::optional<Span> dct_span_;
};

enum class TimexType { kDate, kTime, kDuration, kSet };

std::string_view TimexTypeName(TimexType type);
std::optional<TimexType> ParseTimexType(std::string_view name);

enum class FunctionInDocument {
  kNone,
  kCreationTime,
  kExpirationTime,
  kModificationTime,
  kPublicationTime,
  kReleaseTime,
  kReceptionTime,
};

std::string_view FunctionInDocumentName(FunctionInDocument f);
std::optional<FunctionInDocument> ParseFunctionInDocument(std::string_view name);

enum class EventClass {
  kOccurrence,
  kPerception,
  kReporting,
  kAspectual,
  kState,
  kIState,
  kIAction,
};

std::string_view EventClassName(EventClass c);
std::optional<EventClass> ParseEventClass(std::string_view name);

enum class RelType {
  kBefore,
  kAfter,
  kIncludes,
  kIsIncluded,
  kDuring,
  kDuringInv,
  kSimultaneous,
  kIAfter,
  kIBefore,
  kIdentity,
  kBegins,
  kEnds,
  kBegunBy,
  kEndedBy,
};

std::string_view RelTypeName(RelType rel);
std::optional<RelType> ParseRelType(std::string_view name);
// The relation seen from the other end: BEFORE <-> AFTER and so on.
RelType Inverse(RelType rel);

struct Timex3 {
  std::string tid;
  Span span;
  TimexType type = TimexType::kDate;
  std::string value;
  std::optional<std::string> mod;
  bool temporal_function = false;
  FunctionInDocument function_in_document = FunctionInDocument::kNone;
  std::optional<std::string> anchor_time_id;

  friend bool operator==(const Timex3&, const Timex3&) = default;
};

struct Event {
  std::string eid;
  Span span;
  EventClass event_class = EventClass::kOccurrence;
  std::optional<std::string> stem;

  friend bool operator==(const Event&, const Event&) = default;
};

struct Signal {
  std::string sid;
  Span span;

  friend bool operator==(const Signal&, const Signal&) = default;
};

// Exactly one source (time_id or event_id) and one target
// (related_to_time or related_event_id). No rel_type means untyped.
struct TLink {
  std::string lid;
  std::optional<std::string> time_id;
  std::optional<std::string> event_id;
  std::optional<std::string> related_to_time;
  std::optional<std::string> related_event_id;
  std::optional<RelType> rel_type;
  std::optional<std::string> signal_id;

  friend bool operator==(const TLink&, const TLink&) = default;
};

enum class ElementClass { kTimex3, kEvent, kSignal, kTLink };

// "t", "e", "s" or "l".
std::string_view IdPrefix(ElementClass cls);

// TimeML output document. Timex3, Event and Signal vectors are kept in span
// order by the Add* helpers; TLinks keep insertion order.
struct TimeMLDocument {
  std::u32string text;
  std::vector<Timex3> timex3s;
  std::vector<Event> events;
  std::vector<Signal> signals;
  std::vector<TLink> tlinks;
  std::string doc_id;

  // Smallest unused ID of the class that is larger than every existing
  // numeric ID of that class: {} -> t1, {t1,t2} -> t3, {t5} -> t6.
  std::string NextId(ElementClass cls) const;

  // Each helper assigns a fresh ID when the element's ID is empty and
  // returns the ID used.
  std::string Add(Timex3 timex);
  std::string Add(Event event);
  std::string Add(Signal signal);
  std::string Add(TLink link);

  const Timex3* FindTimex3(std::string_view tid) const;

  std::u32string_view Slice(const Span& span) const {
    return std::u32string_view(text).substr(span.start, span.length());
  }

  friend bool operator==(const TimeMLDocument&,
                         const TimeMLDocument&) = default;
};

}  // namespace t2t3

#endif  // T2T3_MODEL_H_
