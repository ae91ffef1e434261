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

#include "synthetic.h"

#include <algorithm>
#include <array>
#include <string_view>
#include <utility>

#include "t2t3/unicode.h"

namespace t2t3::testing {
namespace {

template <typename T>
const T& Pick(std::mt19937& rng, const std::vector<T>& items) {
  std::uniform_int_distribution<std::size_t> dist(0, items.size() - 1);
  return items[dist(rng)];
}

int Uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Coin(std::mt19937& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

// Writes markup and the text it should decode to side by side.
class Builder {
 public:
  explicit Builder(SyntheticDocument& doc) : doc_(doc) {}

  void Text(std::string_view utf8) {
    for (char c : utf8) {
      switch (c) {
        case '&': doc_.markup += "&amp;"; break;
        case '<': doc_.markup += "&lt;"; break;
        case '>': doc_.markup += "&gt;"; break;
        default: doc_.markup += c;
      }
    }
    doc_.text += U32(utf8);
  }

  void Raw(std::string_view tag) { doc_.markup += tag; }

  // Returns the index of the new annotation.
  std::size_t Open(const std::string& val, std::string_view extra = {}) {
    doc_.markup += "<TIMEX2 VAL=\"" + val + "\"";
    if (!extra.empty()) {
      doc_.markup += ' ';
      doc_.markup += extra;
    }
    doc_.markup += '>';
    SyntheticTimex t;
    t.span.start = doc_.text.size();
    t.val = val;
    t.top_level = open_.empty();
    if (!open_.empty()) doc_.timexes[open_.back()].leaf = false;
    doc_.timexes.push_back(t);
    open_.push_back(doc_.timexes.size() - 1);
    return open_.back();
  }

  void Close() {
    doc_.markup += "</TIMEX2>";
    doc_.timexes[open_.back()].span.end = doc_.text.size();
    open_.pop_back();
  }

  void Timex(const std::string& val, std::string_view phrase,
             std::string_view extra = {}) {
    Open(val, extra);
    Text(phrase);
    Close();
  }

 private:
  SyntheticDocument& doc_;
  std::vector<std::size_t> open_;
};

const std::vector<std::string> kFiller = {
    "Officials in Zürich said",
    "AT&T reported that",
    "The index, quoted at 3 < 4 percent, fell",
    "Analysts «as usual» expected gains",
    "Die Börse schloss",
    "東京 markets opened",
    "Shares rose > 2%",
    "The minister spoke",
    "Negotiators met",
};

struct Phrase {
  std::string text;
  std::string val;
  bool set = false;
};

const std::vector<Phrase> kSimple = {
    {"Tuesday", "2001-03-20"},
    {"last week", "2001-W11"},
    {"three days", "P3D"},
    {"every morning", "XXXX-XX-XXTMO", true},
    {"10:30 a.m.", "2001-03-20T10:30"},
    {"the next month or so", "FUTURE_REF"},
    {"1999", "1999"},
    {"the 1990s", "199"},
    {"yesterday", "2001-03-19"},
    {"now", "PRESENT_REF"},
    {"the second quarter", "2001-Q2"},
    {"this summer", "2001-SU"},
    {"two weeks", "P2W"},
    {"March 4", "2001-03-04"},
    {"weekly", "P1W", true},
};

const std::vector<std::string> kNumbers = {"two",    "three", "five",
                                           "twenty", "30",    "ten"};
const std::vector<std::string> kUnits = {"day", "week", "month", "year",
                                         "hour"};
const std::vector<std::string> kEventNouns = {
    "election", "merger", "attack", "vote", "summit", "collapse", "trial"};
const std::vector<std::string> kVerbs = {"collapsed", "reopened", "merged",
                                         "announced", "started"};
const std::vector<std::string> kWeekdays = {"Monday", "Tuesday", "Friday",
                                            "Sunday"};

std::string DurationValue(const std::string& number, const std::string& unit) {
  static const std::vector<std::pair<std::string, std::string>> kNumeric = {
      {"two", "2"}, {"three", "3"}, {"five", "5"},
      {"twenty", "20"}, {"30", "30"}, {"ten", "10"}};
  std::string n = "X";
  for (const auto& [word, digits] : kNumeric)
    if (word == number) n = digits;
  if (unit == "hour") return "PT" + n + "H";
  return "P" + n + static_cast<char>(unit[0] - 'a' + 'A');
}

void WriteSimple(std::mt19937& rng, Builder& b) {
  const Phrase& p = Pick(rng, kSimple);
  b.Timex(p.val, p.text, p.set ? "SET=\"YES\"" : "");
}

void WriteSignalled(std::mt19937& rng, Builder& b) {
  switch (Uniform(rng, 0, 2)) {
    case 0: {
      const std::string& n = Pick(rng, kNumbers);
      const std::string& u = Pick(rng, kUnits);
      b.Timex(DurationValue(n, u),
              n + " " + u + "s " + (Coin(rng) ? "after" : "before") + " the " +
                  Pick(rng, kEventNouns));
      break;
    }
    case 1:
      b.Timex("2001-03-" + std::to_string(Uniform(rng, 10, 28)),
              "the " + Pick(rng, kWeekdays) + " " +
                  (Coin(rng) ? "following" : "prior to") + " the " +
                  Pick(rng, kEventNouns));
      break;
    default: {
      const std::string& n = Pick(rng, kNumbers);
      b.Timex(DurationValue(n, "year"), n + " years since the bank " +
                                            Pick(rng, kVerbs));
      break;
    }
  }
}

void WriteNested(std::mt19937& rng, Builder& b) {
  switch (Uniform(rng, 0, 4)) {
    case 0: {
      // A week and two days inside it.
      b.Open("1999-W23");
      b.Text("the week of ");
      b.Timex("1999-06-08", "the eighth");
      b.Text(" until ");
      b.Timex("1999-06-11", "the eleventh");
      b.Close();
      break;
    }
    case 1: {
      b.Open("2001-03-20T09:00");
      b.Text("nine o'clock ");
      b.Timex("2001-03-20", Pick(rng, kWeekdays));
      b.Close();
      break;
    }
    case 2: {
      // Outer and inner annotate the same words.
      b.Open("2001-03");
      b.Timex("2001-03-20", "Tuesday");
      b.Close();
      break;
    }
    case 3: {
      // Three levels.
      b.Open("1999-W23");
      b.Text("the week of ");
      b.Open("1999-06");
      b.Text("June ");
      b.Timex("1999-06-07", "7");
      b.Close();
      b.Close();
      break;
    }
    default: {
      // Nothing but a conjunction outside the children.
      b.Open("2001-W12");
      b.Timex("2001-03-19", "Monday");
      b.Text(" and ");
      b.Timex("2001-03-20", "Tuesday");
      b.Close();
      break;
    }
  }
}

void WriteLong(std::mt19937& rng, Builder& b) {
  const std::vector<std::string> words = GenerateLongPhrase(rng);
  std::string phrase;
  for (const std::string& w : words) {
    if (!phrase.empty()) phrase += ' ';
    phrase += w;
  }
  b.Timex("2001-0" + std::to_string(Uniform(rng, 1, 9)), phrase);
}

void WriteAnchored(std::mt19937& rng, Builder& b, const SyntheticDocument& doc) {
  std::string anchor = "2001-03-20";
  for (const SyntheticTimex& t : doc.timexes)
    if (t.leaf && Coin(rng)) anchor = t.val;
  b.Timex(Coin(rng) ? "P2W" : "2001-03-06",
          Coin(rng) ? "two weeks earlier" : "two weeks before",
          "ANCHOR_VAL=\"" + anchor + "\" ANCHOR_DIR=\"BEFORE\"");
}

}  // namespace

std::size_t SyntheticDocument::CountLeaves() const {
  return std::count_if(timexes.begin(), timexes.end(),
                       [](const SyntheticTimex& t) { return t.leaf; });
}

std::size_t SyntheticDocument::CountOuters() const {
  return std::count_if(timexes.begin(), timexes.end(),
                       [](const SyntheticTimex& t) { return !t.leaf; });
}

SyntheticDocument GenerateDocument(std::mt19937& rng) {
  SyntheticDocument doc;
  Builder b(doc);
  b.Raw("<DOC>");
  if (Coin(rng, 0.6)) {
    b.Raw("<DATE_TIME>");
    b.Timex("2001-03-20", "03/20/2001");
    b.Raw("</DATE_TIME>");
    b.Text("\n");
    doc.kinds.push_back(SyntheticKind::kSimple);
  }
  const int sentences = Uniform(rng, 1, 6);
  for (int i = 0; i < sentences; ++i) {
    b.Text(Pick(rng, kFiller));
    b.Text(" ");
    const auto kind = static_cast<SyntheticKind>(Uniform(rng, 0, 4));
    switch (kind) {
      case SyntheticKind::kSimple: WriteSimple(rng, b); break;
      case SyntheticKind::kSignalled: WriteSignalled(rng, b); break;
      case SyntheticKind::kNested: WriteNested(rng, b); break;
      case SyntheticKind::kLong: WriteLong(rng, b); break;
      case SyntheticKind::kAnchored: WriteAnchored(rng, b, doc); break;
    }
    doc.kinds.push_back(kind);
    b.Text(Coin(rng) ? ".\n" : ". ");
  }
  b.Raw("</DOC>");
  return doc;
}

std::vector<std::string> GenerateLongPhrase(std::mt19937& rng) {
  static const std::vector<std::string> kWords = {
      "the",   "very",    "early", "part",   "middle", "last",  "next",
      "fiscal", "of",     "than",  "later",  "earlier", "some", "two",
      "three", "twenty",  "company's", "late", "quiet", "a",    "that"};
  static const std::vector<std::string> kMeasures = {
      "day", "days", "week", "months", "year", "hours", "decade"};
  const int length = Uniform(rng, 6, 12);
  std::vector<std::string> words;
  for (int i = 0; i < length; ++i) words.push_back(Pick(rng, kWords));
  words[Uniform(rng, 0, length - 1)] = Pick(rng, kMeasures);
  return words;
}

TimeMLDocument GenerateTimeML(std::mt19937& rng) {
  static const std::vector<std::u32string> kPieces = {
      U"plain words ", U"&", U"<", U">", U"\"", U"'", U"\r\n", U"\t",
      U"é", U"日本", U"\U0001F600", U" ", U"]]>", U"a", U"\n", U"--"};
  static const std::vector<std::string> kValues = {
      "2001-03-20", "P3D", "FUTURE_REF", "a&b<\"c'>", "XXXX-WXX-1", "T10:30"};
  static const std::vector<std::string> kMods = {"BEFORE", "APPROX", "MID",
                                                 "EQUAL_OR_MORE"};
  static const std::vector<std::string> kStems = {"walk", "say \"so\"", "R&D"};

  TimeMLDocument doc;
  doc.doc_id = "synthetic";
  const int pieces = Uniform(rng, 1, 40);
  for (int i = 0; i < pieces; ++i) doc.text += Pick(rng, kPieces);

  // Disjoint spans from sorted cut points.
  std::vector<std::size_t> cuts;
  const int elements = Uniform(rng, 0, 6);
  for (int i = 0; i < 2 * elements; ++i)
    cuts.push_back(Uniform(rng, 0, static_cast<int>(doc.text.size())));
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); i += 2) {
    const Span span{cuts[i], cuts[i + 1]};
    if (span.empty()) continue;
    switch (Uniform(rng, 0, 2)) {
      case 0: {
        Timex3 t;
        t.span = span;
        t.type = static_cast<TimexType>(Uniform(rng, 0, 3));
        t.value = Pick(rng, kValues);
        if (Coin(rng, 0.3)) t.mod = Pick(rng, kMods);
        t.temporal_function = Coin(rng);
        if (Coin(rng, 0.2))
          t.function_in_document = FunctionInDocument::kCreationTime;
        if (!doc.timex3s.empty() && Coin(rng, 0.3))
          t.anchor_time_id = doc.timex3s.front().tid;
        doc.Add(std::move(t));
        break;
      }
      case 1: {
        Event e;
        e.span = span;
        e.event_class = static_cast<EventClass>(Uniform(rng, 0, 6));
        if (Coin(rng)) e.stem = Pick(rng, kStems);
        doc.Add(std::move(e));
        break;
      }
      default:
        doc.Add(Signal{"", span});
    }
  }

  const int links = doc.timex3s.size() + doc.events.size() >= 2
                        ? Uniform(rng, 0, 4)
                        : 0;
  for (int i = 0; i < links; ++i) {
    TLink l;
    auto endpoint = [&](std::optional<std::string>& time,
                        std::optional<std::string>& event) {
      if (doc.events.empty() || (!doc.timex3s.empty() && Coin(rng)))
        time = Pick(rng, doc.timex3s).tid;
      else
        event = Pick(rng, doc.events).eid;
    };
    endpoint(l.time_id, l.event_id);
    endpoint(l.related_to_time, l.related_event_id);
    if (Coin(rng, 0.8)) l.rel_type = static_cast<RelType>(Uniform(rng, 0, 13));
    if (!doc.signals.empty() && Coin(rng)) l.signal_id = Pick(rng, doc.signals).sid;
    doc.Add(std::move(l));
  }
  return doc;
}

}  // namespace t2t3::testing
