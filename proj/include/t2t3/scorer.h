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

// Timex extent scoring: strict entity match and per-token overlap.

#ifndef T2T3_SCORER_H_
#define T2T3_SCORER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "t2t3/model.h"

namespace t2t3 {

enum class ScoreRegime { kEntityStrict, kToken };

// "ENTITY_STRICT" or "TOKEN".
std::string_view ScoreRegimeName(ScoreRegime regime);

struct ScoreCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  ScoreCounts& operator+=(const ScoreCounts& other) {
    tp += other.tp;
    fp += other.fp;
    fn += other.fn;
    return *this;
  }
  friend bool operator==(const ScoreCounts&, const ScoreCounts&) = default;
};

struct ScoreReport {
  ScoreRegime regime = ScoreRegime::kEntityStrict;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  // Ratios from pooled counts; a zero denominator gives 0.
  static ScoreReport FromCounts(ScoreRegime regime, const ScoreCounts& counts);
};

// Exact-span matches between TIMEX3 sets. Throws TextMismatch when the
// documents' texts differ.
ScoreCounts CountEntity(const TimeMLDocument& gold, const TimeMLDocument& sys);

// Whitespace-separated tokens count as annotated when they overlap a TIMEX3
// span. Throws TextMismatch when the texts differ.
ScoreCounts CountToken(const TimeMLDocument& gold, const TimeMLDocument& sys);

ScoreReport ScoreEntity(const TimeMLDocument& gold, const TimeMLDocument& sys);
ScoreReport ScoreToken(const TimeMLDocument& gold, const TimeMLDocument& sys);

// Tab-separated "regime P R F1 tp fp fn" row.
std::string FormatScoreRow(const ScoreReport& report);

// Aligned table with a header and one row per report.
std::string FormatScoreTable(const std::vector<ScoreReport>& reports);

}  // namespace t2t3

#endif  // T2T3_SCORER_H_
