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

#include "t2t3/model.h"

#include <algorithm>
#include <array>
#include <utility>

#include "t2t3/errors.h"

namespace t2t3 {
namespace {

template <typename E, std::size_t N>
using NameTable = std::array<std::pair<E, std::string_view>, N>;

template <typename E, std::size_t N>
std::string_view NameOf(const NameTable<E, N>& table, E value) {
  for (const auto& [v, name] : table)
    if (v == value) return name;
  return {};
}

template <typename E, std::size_t N>
std::optional<E> ValueOf(const NameTable<E, N>& table, std::string_view name) {
  for (const auto& [v, n] : table)
    if (n == name) return v;
  return std::nullopt;
}

constexpr NameTable<AnchorDir, 5> kAnchorDirs{{
    {AnchorDir::kBefore, "BEFORE"},
    {AnchorDir::kAfter, "AFTER"},
    {AnchorDir::kAsOf, "AS_OF"},
    {AnchorDir::kStarting, "STARTING"},
    {AnchorDir::kEnding, "ENDING"},
}};

constexpr NameTable<TimexType, 4> kTimexTypes{{
    {TimexType::kDate, "DATE"},
    {TimexType::kTime, "TIME"},
    {TimexType::kDuration, "DURATION"},
    {TimexType::kSet, "SET"},
}};

constexpr NameTable<FunctionInDocument, 7> kFunctions{{
    {FunctionInDocument::kNone, "NONE"},
    {FunctionInDocument::kCreationTime, "CREATION_TIME"},
    {FunctionInDocument::kExpirationTime, "EXPIRATION_TIME"},
    {FunctionInDocument::kModificationTime, "MODIFICATION_TIME"},
    {FunctionInDocument::kPublicationTime, "PUBLICATION_TIME"},
    {FunctionInDocument::kReleaseTime, "RELEASE_TIME"},
    {FunctionInDocument::kReceptionTime, "RECEPTION_TIME"},
}};

constexpr NameTable<EventClass, 7> kEventClasses{{
    {EventClass::kOccurrence, "OCCURRENCE"},
    {EventClass::kPerception, "PERCEPTION"},
    {EventClass::kReporting, "REPORTING"},
    {EventClass::kAspectual, "ASPECTUAL"},
    {EventClass::kState, "STATE"},
    {EventClass::kIState, "I_STATE"},
    {EventClass::kIAction, "I_ACTION"},
}};

constexpr NameTable<RelType, 14> kRelTypes{{
    {RelType::kBefore, "BEFORE"},
    {RelType::kAfter, "AFTER"},
    {RelType::kIncludes, "INCLUDES"},
    {RelType::kIsIncluded, "IS_INCLUDED"},
    {RelType::kDuring, "DURING"},
    {RelType::kDuringInv, "DURING_INV"},
    {RelType::kSimultaneous, "SIMULTANEOUS"},
    {RelType::kIAfter, "IAFTER"},
    {RelType::kIBefore, "IBEFORE"},
    {RelType::kIdentity, "IDENTITY"},
    {RelType::kBegins, "BEGINS"},
    {RelType::kEnds, "ENDS"},
    {RelType::kBegunBy, "BEGUN_BY"},
    {RelType::kEndedBy, "ENDED_BY"},
}};

void CheckForest(std::vector<Timex2>& forest, const Span& bounds,
                 const char* where) {
  std::stable_sort(forest.begin(), forest.end(),
                   [](const Timex2& a, const Timex2& b) {
                     return a.span.start < b.span.start;
                   });
  for (std::size_t i = 0; i < forest.size(); ++i) {
    const Span& s = forest[i].span;
    if (s.start > s.end)
      throw SpanConflict("TIMEX2 span starts after it ends: [" +
                         std::to_string(s.start) + "," +
                         std::to_string(s.end) + ")");
    if (!bounds.Contains(s))
      throw SpanConflict(std::string("TIMEX2 span [") +
                         std::to_string(s.start) + "," +
                         std::to_string(s.end) + ") escapes " + where);
    if (i > 0 && forest[i - 1].span.Overlaps(s))
      throw SpanConflict("sibling TIMEX2 spans overlap at offset " +
                         std::to_string(s.start));
    // A child may coincide with its parent; real corpora wrap single
    // values this way.
    if (!forest[i].children.empty())
      CheckForest(forest[i].children, s, "its parent");
  }
}

}  // namespace

std::string_view AnchorDirName(AnchorDir dir) { return NameOf(kAnchorDirs, dir); }
std::optional<AnchorDir> ParseAnchorDir(std::string_view name) {
  return ValueOf(kAnchorDirs, name);
}

std::string_view TimexTypeName(TimexType type) {
  return NameOf(kTimexTypes, type);
}
std::optional<TimexType> ParseTimexType(std::string_view name) {
  return ValueOf(kTimexTypes, name);
}

std::string_view FunctionInDocumentName(FunctionInDocument f) {
  return NameOf(kFunctions, f);
}
std::optional<FunctionInDocument> ParseFunctionInDocument(
    std::string_view name) {
  return ValueOf(kFunctions, name);
}

std::string_view EventClassName(EventClass c) {
  return NameOf(kEventClasses, c);
}
std::optional<EventClass> ParseEventClass(std::string_view name) {
  return ValueOf(kEventClasses, name);
}

std::string_view RelTypeName(RelType rel) { return NameOf(kRelTypes, rel); }
std::optional<RelType> ParseRelType(std::string_view name) {
  return ValueOf(kRelTypes, name);
}

RelType Inverse(RelType rel) {
  switch (rel) {
    case RelType::kBefore: return RelType::kAfter;
    case RelType::kAfter: return RelType::kBefore;
    case RelType::kIncludes: return RelType::kIsIncluded;
    case RelType::kIsIncluded: return RelType::kIncludes;
    case RelType::kDuring: return RelType::kDuringInv;
    case RelType::kDuringInv: return RelType::kDuring;
    case RelType::kIAfter: return RelType::kIBefore;
    case RelType::kIBefore: return RelType::kIAfter;
    case RelType::kBegins: return RelType::kBegunBy;
    case RelType::kBegunBy: return RelType::kBegins;
    case RelType::kEnds: return RelType::kEndedBy;
    case RelType::kEndedBy: return RelType::kEnds;
    case RelType::kSimultaneous:
    case RelType::kIdentity:
      return rel;
  }
  return rel;
}

std::size_t Timex2::TreeSize() const {
  std::size_t n = 1;
  for (const Timex2& child : children) n += child.TreeSize();
  return n;
}

Document::Document(std::u32string text, std::vector<Timex2> timexes,
                   std::string doc_id, std::optional<std::string> dct,
                   std::optional<Span> dct_span)
    : text_(std::move(text)),
      timexes_(std::move(timexes)),
      doc_id_(std::move(doc_id)),
      dct_(std::move(dct)),
      dct_span_(dct_span) {
  CheckForest(timexes_, Span{0, text_.size()}, "the document text");
}

std::size_t Document::CountTimex2() const {
  std::size_t n = 0;
  for (const Timex2& t : timexes_) n += t.TreeSize();
  return n;
}

std::string_view IdPrefix(ElementClass cls) {
  switch (cls) {
    case ElementClass::kTimex3: return "t";
    case ElementClass::kEvent: return "e";
    case ElementClass::kSignal: return "s";
    case ElementClass::kTLink: return "l";
  }
  return "";
}

std::string TimeMLDocument::NextId(ElementClass cls) const {
  const std::string_view prefix = IdPrefix(cls);
  unsigned long long highest = 0;
  auto consider = [&](const std::string& id) {
    if (id.size() <= prefix.size() || id.compare(0, prefix.size(), prefix) != 0)
      return;
    unsigned long long n = 0;
    for (std::size_t i = prefix.size(); i < id.size(); ++i) {
      if (id[i] < '0' || id[i] > '9') return;
      n = n * 10 + static_cast<unsigned>(id[i] - '0');
    }
    highest = std::max(highest, n);
  };
  switch (cls) {
    case ElementClass::kTimex3:
      for (const auto& t : timex3s) consider(t.tid);
      break;
    case ElementClass::kEvent:
      for (const auto& e : events) consider(e.eid);
      break;
    case ElementClass::kSignal:
      for (const auto& s : signals) consider(s.sid);
      break;
    case ElementClass::kTLink:
      for (const auto& l : tlinks) consider(l.lid);
      break;
  }
  return std::string(prefix) + std::to_string(highest + 1);
}

namespace {

template <typename T>
void InsertBySpan(std::vector<T>& items, T item) {
  auto pos = std::upper_bound(
      items.begin(), items.end(), item.span,
      [](const Span& s, const T& existing) { return s < existing.span; });
  items.insert(pos, std::move(item));
}

}  // namespace

std::string TimeMLDocument::Add(Timex3 timex) {
  if (timex.tid.empty()) timex.tid = NextId(ElementClass::kTimex3);
  std::string id = timex.tid;
  InsertBySpan(timex3s, std::move(timex));
  return id;
}

std::string TimeMLDocument::Add(Event event) {
  if (event.eid.empty()) event.eid = NextId(ElementClass::kEvent);
  std::string id = event.eid;
  InsertBySpan(events, std::move(event));
  return id;
}

std::string TimeMLDocument::Add(Signal signal) {
  if (signal.sid.empty()) signal.sid = NextId(ElementClass::kSignal);
  std::string id = signal.sid;
  InsertBySpan(signals, std::move(signal));
  return id;
}

std::string TimeMLDocument::Add(TLink link) {
  if (link.lid.empty()) link.lid = NextId(ElementClass::kTLink);
  std::string id = link.lid;
  tlinks.push_back(std::move(link));
  return id;
}

const Timex3* TimeMLDocument::FindTimex3(std::string_view tid) const {
  for (const Timex3& t : timex3s)
    if (t.tid == tid) return &t;
  return nullptr;
}

}  // namespace t2t3
