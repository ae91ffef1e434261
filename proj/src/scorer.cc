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

#include "t2t3/scorer.h"

#include <algorithm>
#include <cstdio>
#include <set>

#include "t2t3/errors.h"
#include "t2t3/unicode.h"

namespace t2t3 {
namespace {

void RequireSameText(const TimeMLDocument& gold, const TimeMLDocument& sys) {
  if (gold.text == sys.text) return;
  std::size_t i = 0;
  while (i < gold.text.size() && i < sys.text.size() &&
         gold.text[i] == sys.text[i])
    ++i;
  throw TextMismatch("gold and system texts differ at offset " +
                     std::to_string(i) +
                     (gold.doc_id.empty() ? "" : " in " + gold.doc_id));
}

std::vector<Span> WhitespaceTokens(std::u32string_view text) {
  std::vector<Span> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (IsSpace(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !IsSpace(text[i])) ++i;
    tokens.push_back({start, i});
  }
  return tokens;
}

// Per token, whether it overlaps any of `spans`.
std::vector<bool> Marked(const std::vector<Span>& tokens,
                         const std::vector<Timex3>& timexes) {
  std::vector<bool> marked(tokens.size(), false);
  for (const Timex3& t : timexes) {
    auto it = std::lower_bound(
        tokens.begin(), tokens.end(), t.span.start,
        [](const Span& token, std::size_t pos) { return token.end <= pos; });
    for (; it != tokens.end() && it->start < t.span.end; ++it)
      if (it->Overlaps(t.span)) marked[it - tokens.begin()] = true;
  }
  return marked;
}

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::string Fixed(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.4f", x);
  return buffer;
}

}  // namespace

std::string_view ScoreRegimeName(ScoreRegime regime) {
  return regime == ScoreRegime::kEntityStrict ? "ENTITY_STRICT" : "TOKEN";
}

ScoreReport ScoreReport::FromCounts(ScoreRegime regime,
                                    const ScoreCounts& counts) {
  ScoreReport r;
  r.regime = regime;
  r.tp = counts.tp;
  r.fp = counts.fp;
  r.fn = counts.fn;
  r.precision = Ratio(counts.tp, counts.tp + counts.fp);
  r.recall = Ratio(counts.tp, counts.tp + counts.fn);
  const double sum = r.precision + r.recall;
  r.f1 = sum > 0 ? 2 * r.precision * r.recall / sum : 0.0;
  return r;
}

ScoreCounts CountEntity(const TimeMLDocument& gold, const TimeMLDocument& sys) {
  RequireSameText(gold, sys);
  std::multiset<Span> gold_spans, sys_spans;
  for (const Timex3& t : gold.timex3s) gold_spans.insert(t.span);
  for (const Timex3& t : sys.timex3s) sys_spans.insert(t.span);
  ScoreCounts c;
  for (const Span& s : sys_spans) {
    auto it = gold_spans.find(s);
    if (it != gold_spans.end()) {
      ++c.tp;
      gold_spans.erase(it);
    } else {
      ++c.fp;
    }
  }
  c.fn = gold_spans.size();
  return c;
}

ScoreCounts CountToken(const TimeMLDocument& gold, const TimeMLDocument& sys) {
  RequireSameText(gold, sys);
  const auto tokens = WhitespaceTokens(gold.text);
  const auto in_gold = Marked(tokens, gold.timex3s);
  const auto in_sys = Marked(tokens, sys.timex3s);
  ScoreCounts c;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (in_gold[i] && in_sys[i]) ++c.tp;
    if (!in_gold[i] && in_sys[i]) ++c.fp;
    if (in_gold[i] && !in_sys[i]) ++c.fn;
  }
  return c;
}

ScoreReport ScoreEntity(const TimeMLDocument& gold, const TimeMLDocument& sys) {
  return ScoreReport::FromCounts(ScoreRegime::kEntityStrict,
                                 CountEntity(gold, sys));
}

ScoreReport ScoreToken(const TimeMLDocument& gold, const TimeMLDocument& sys) {
  return ScoreReport::FromCounts(ScoreRegime::kToken, CountToken(gold, sys));
}

std::string FormatScoreRow(const ScoreReport& r) {
  return std::string(ScoreRegimeName(r.regime)) + "\t" + Fixed(r.precision) +
         "\t" + Fixed(r.recall) + "\t" + Fixed(r.f1) + "\t" +
         std::to_string(r.tp) + "\t" + std::to_string(r.fp) + "\t" +
         std::to_string(r.fn);
}

std::string FormatScoreTable(const std::vector<ScoreReport>& reports) {
  char line[128];
  std::string out;
  std::snprintf(line, sizeof line, "%-14s %9s %9s %9s %7s %7s %7s\n", "regime",
                "P", "R", "F1", "tp", "fp", "fn");
  out += line;
  for (const ScoreReport& r : reports) {
    std::snprintf(line, sizeof line, "%-14s %9.4f %9.4f %9.4f %7zu %7zu %7zu\n",
                  std::string(ScoreRegimeName(r.regime)).c_str(), r.precision,
                  r.recall, r.f1, r.tp, r.fp, r.fn);
    out += line;
  }
  return out;
}

}  // namespace t2t3
