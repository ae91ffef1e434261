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

// Calendar extents of TIMEX values, used only to order and nest values.
// Values are never rewritten.

#ifndef T2T3_TIMEX_VALUE_H_
#define T2T3_TIMEX_VALUE_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "t2t3/model.h"

namespace t2t3 {

// Half-open interval in minutes since 1970-01-01T00:00.
struct CalendarInterval {
  std::int64_t start = 0;
  std::int64_t end = 0;

  friend bool operator==(const CalendarInterval&,
                         const CalendarInterval&) = default;
};

// Recognises YYYY, YYYY-MM, YYYY-MM-DD, YYYY-Www, YYYY-Www-D, YYYY-Qn,
// YYYY-Hn, decades (YYY), centuries (YY) and dates followed by a clock time
// THH, THH:MM or THH:MM:SS. Anything else, including durations, references,
// seasons and parts of day, gives nullopt.
std::optional<CalendarInterval> ValueInterval(std::string_view value);

// Relation of the interval of `a` to that of `b`: IS_INCLUDED, INCLUDES,
// SIMULTANEOUS, BEFORE or AFTER. nullopt when either value has no interval
// or the two partially overlap.
std::optional<RelType> RelationByValue(std::string_view a, std::string_view b);

}  // namespace t2t3

#endif  // T2T3_TIMEX_VALUE_H_
