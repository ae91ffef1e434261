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

#include "t2t3/timex_value.h"

#include <chrono>
#include <regex>
#include <string>

namespace t2t3 {
namespace {

namespace chr = std::chrono;

constexpr std::int64_t kMinutesPerDay = 24 * 60;

std::int64_t DayMinutes(chr::sys_days day) {
  return static_cast<std::int64_t>(day.time_since_epoch().count()) *
         kMinutesPerDay;
}

std::optional<chr::sys_days> Day(int y, unsigned m, unsigned d) {
  const chr::year_month_day ymd{chr::year{y}, chr::month{m}, chr::day{d}};
  if (!ymd.ok()) return std::nullopt;
  return chr::sys_days{ymd};
}

CalendarInterval Days(chr::sys_days first, chr::sys_days end) {
  return {DayMinutes(first), DayMinutes(end)};
}

CalendarInterval Months(int y, unsigned first, unsigned count) {
  const chr::year_month start{chr::year{y}, chr::month{first}};
  const chr::year_month stop = start + chr::months{count};
  return Days(chr::sys_days{start / chr::day{1}},
              chr::sys_days{stop / chr::day{1}});
}

// Monday of ISO week 1: the week containing January 4.
chr::sys_days IsoWeekOne(int y) {
  const chr::sys_days jan4{chr::year{y} / chr::January / 4};
  const chr::weekday wd{jan4};
  return jan4 - (wd - chr::Monday);
}

int Num(const std::ssub_match& m) { return std::stoi(m.str()); }

}  // namespace

std::optional<CalendarInterval> ValueInterval(std::string_view value) {
  static const std::regex kCentury(R"((\d{2}))");
  static const std::regex kDecade(R"((\d{3}))");
  static const std::regex kYear(R"((\d{4}))");
  static const std::regex kMonth(R"((\d{4})-(\d{2}))");
  static const std::regex kQuarter(R"((\d{4})-Q([1-4]))");
  static const std::regex kHalf(R"((\d{4})-H([12]))");
  static const std::regex kWeek(R"((\d{4})-W(\d{2})(?:-([1-7]))?)");
  static const std::regex kDate(
      R"((\d{4})-(\d{2})-(\d{2})(?:T(\d{2})(?::(\d{2})(?::(\d{2}(?:\.\d+)?))?)?)?)");

  const std::string v(value);
  std::smatch m;
  if (std::regex_match(v, m, kCentury)) {
    const int y = Num(m[1]) * 100;
    return Days(chr::sys_days{chr::year{y} / 1 / 1},
                chr::sys_days{chr::year{y + 100} / 1 / 1});
  }
  if (std::regex_match(v, m, kDecade)) {
    const int y = Num(m[1]) * 10;
    return Days(chr::sys_days{chr::year{y} / 1 / 1},
                chr::sys_days{chr::year{y + 10} / 1 / 1});
  }
  if (std::regex_match(v, m, kYear)) return Months(Num(m[1]), 1, 12);
  if (std::regex_match(v, m, kMonth)) {
    const int month = Num(m[2]);
    if (month < 1 || month > 12) return std::nullopt;
    return Months(Num(m[1]), month, 1);
  }
  if (std::regex_match(v, m, kQuarter))
    return Months(Num(m[1]), 3 * (Num(m[2]) - 1) + 1, 3);
  if (std::regex_match(v, m, kHalf))
    return Months(Num(m[1]), 6 * (Num(m[2]) - 1) + 1, 6);
  if (std::regex_match(v, m, kWeek)) {
    const int y = Num(m[1]);
    const int week = Num(m[2]);
    const chr::sys_days first = IsoWeekOne(y) + chr::weeks{week - 1};
    // Week 53 exists only in long years.
    if (week < 1 || first >= IsoWeekOne(y + 1)) return std::nullopt;
    if (m[3].matched) {
      const chr::sys_days day = first + chr::days{Num(m[3]) - 1};
      return Days(day, day + chr::days{1});
    }
    return Days(first, first + chr::weeks{1});
  }
  if (std::regex_match(v, m, kDate)) {
    const auto day = Day(Num(m[1]), Num(m[2]), Num(m[3]));
    if (!day) return std::nullopt;
    if (!m[4].matched) return Days(*day, *day + chr::days{1});
    const int hour = Num(m[4]);
    if (hour > 24) return std::nullopt;
    std::int64_t start = DayMinutes(*day) + hour * 60;
    if (!m[5].matched) return CalendarInterval{start, start + 60};
    const int minute = Num(m[5]);
    if (minute > 59) return std::nullopt;
    start += minute;
    // Seconds resolve to their minute.
    return CalendarInterval{start, start + 1};
  }
  return std::nullopt;
}

std::optional<RelType> RelationByValue(std::string_view a, std::string_view b) {
  const auto x = ValueInterval(a);
  const auto y = ValueInterval(b);
  if (!x || !y) return std::nullopt;
  if (*x == *y) return RelType::kSimultaneous;
  if (x->end <= y->start) return RelType::kBefore;
  if (y->end <= x->start) return RelType::kAfter;
  if (y->start <= x->start && x->end <= y->end) return RelType::kIsIncluded;
  if (x->start <= y->start && y->end <= x->end) return RelType::kIncludes;
  return std::nullopt;
}

}  // namespace t2t3
