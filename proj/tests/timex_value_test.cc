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

#include <gtest/gtest.h>

#include <ctime>
#include <random>

namespace t2t3 {
namespace {

constexpr std::int64_t kDay = 24 * 60;

// Days since the epoch via timegm, independent of the library's calendar.
std::int64_t DaysFromCivil(int y, int m, int d) {
  std::tm tm{};
  tm.tm_year = y - 1900;
  tm.tm_mon = m - 1;
  tm.tm_mday = d;
  return static_cast<std::int64_t>(timegm(&tm)) / 86400;
}

TEST(ValueInterval, CalendarGranularities) {
  const std::int64_t d1999 = DaysFromCivil(1999, 1, 1);
  EXPECT_EQ(ValueInterval("1999"),
            (CalendarInterval{d1999 * kDay, DaysFromCivil(2000, 1, 1) * kDay}));
  EXPECT_EQ(ValueInterval("1999-02"),
            (CalendarInterval{DaysFromCivil(1999, 2, 1) * kDay,
                              DaysFromCivil(1999, 3, 1) * kDay}));
  EXPECT_EQ(ValueInterval("2000-02-29"),
            (CalendarInterval{DaysFromCivil(2000, 2, 29) * kDay,
                              DaysFromCivil(2000, 3, 1) * kDay}));
  EXPECT_EQ(ValueInterval("1999-Q2"),
            (CalendarInterval{DaysFromCivil(1999, 4, 1) * kDay,
                              DaysFromCivil(1999, 7, 1) * kDay}));
  EXPECT_EQ(ValueInterval("1999-H2"),
            (CalendarInterval{DaysFromCivil(1999, 7, 1) * kDay,
                              DaysFromCivil(2000, 1, 1) * kDay}));
  EXPECT_EQ(ValueInterval("199"),
            (CalendarInterval{DaysFromCivil(1990, 1, 1) * kDay,
                              DaysFromCivil(2000, 1, 1) * kDay}));
  EXPECT_EQ(ValueInterval("19"),
            (CalendarInterval{DaysFromCivil(1900, 1, 1) * kDay,
                              DaysFromCivil(2000, 1, 1) * kDay}));
  const std::int64_t day = DaysFromCivil(2001, 3, 20) * kDay;
  EXPECT_EQ(ValueInterval("2001-03-20T10"),
            (CalendarInterval{day + 600, day + 660}));
  EXPECT_EQ(ValueInterval("2001-03-20T10:30"),
            (CalendarInterval{day + 630, day + 631}));
  EXPECT_EQ(ValueInterval("2001-03-20T10:30:15"),
            (CalendarInterval{day + 630, day + 631}));
}

TEST(ValueInterval, NonCalendarValues) {
  for (const char* v : {"P3D", "PRESENT_REF", "FUTURE_REF", "2001-SU",
                        "2001-03-20TMO", "XXXX-WXX-1", "", "1999-13",
                        "1999-02-30", "1999-W54", "2010-W53"})
    EXPECT_FALSE(ValueInterval(v)) << v;
}

// ISO week dates of random days, formatted by strftime, must map back to
// those days.
TEST(ValueInterval, IsoWeeksAgreeWithStrftime) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::int64_t> dist(DaysFromCivil(1950, 1, 1),
                                                   DaysFromCivil(2050, 12, 31));
  for (int trial = 0; trial < 500; ++trial) {
    const std::int64_t days = dist(rng);
    const std::time_t t = static_cast<std::time_t>(days * 86400);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%G-W%V-%u", &tm);
    ASSERT_EQ(ValueInterval(buf),
              (CalendarInterval{days * kDay, (days + 1) * kDay}))
        << buf;
    std::strftime(buf, sizeof buf, "%G-W%V", &tm);
    const auto week = ValueInterval(buf);
    ASSERT_TRUE(week) << buf;
    ASSERT_EQ(week->end - week->start, 7 * kDay);
    ASSERT_LE(week->start, days * kDay);
    ASSERT_GT(week->end, days * kDay);
  }
}

TEST(RelationByValue, AllOutcomes) {
  EXPECT_EQ(RelationByValue("1999-06-07", "1999-W23"), RelType::kIsIncluded);
  EXPECT_EQ(RelationByValue("1999-W23", "1999-06-07"), RelType::kIncludes);
  EXPECT_EQ(RelationByValue("1999-06", "1999-06"), RelType::kSimultaneous);
  EXPECT_EQ(RelationByValue("1998", "1999-06"), RelType::kBefore);
  EXPECT_EQ(RelationByValue("2000-01-01", "1999"), RelType::kAfter);
  // 1999-W52 runs from 1999-12-27 to 2000-01-02.
  EXPECT_FALSE(RelationByValue("1999-W52", "2000"));
  EXPECT_FALSE(RelationByValue("P1D", "2000"));
}

}  // namespace
}  // namespace t2t3
