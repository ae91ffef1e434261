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

// Closed word classes used by the transducer: temporal signal phrases and
// temporal measure words.

#ifndef T2T3_LEXICON_H_
#define T2T3_LEXICON_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "t2t3/model.h"
#include "t2t3/tagging.h"

namespace t2t3 {

struct SignalEntry {
  // Lowercased tokens, e.g. {"prior", "to"}.
  std::vector<std::u32string> phrase;
  bool monosemous = false;
  // Lower is preferred within the monosemous or polysemous class.
  int rank = 0;

  std::string Text() const;  // space-joined, UTF-8

  friend bool operator==(const SignalEntry&, const SignalEntry&) = default;
};

// Signal lexicon in the tab-separated form
//   phrase<TAB>monosemous|polysemous<TAB>rank
// Blank lines and lines starting with '#' are ignored.
class SignalLexicon {
 public:
  SignalLexicon() = default;
  explicit SignalLexicon(std::vector<SignalEntry> entries);

  // Throws LexiconFormat on bad lines or duplicate phrases.
  static SignalLexicon Parse(std::string_view tsv);
  static SignalLexicon Load(const std::string& path);
  // The bundled lexicon (same content as data/signals.tsv).
  static const SignalLexicon& Default();

  const std::vector<SignalEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // Entries whose phrase matches the tokens starting at `index`, compared
  // case-insensitively.
  std::vector<const SignalEntry*> MatchesAt(std::span<const TaggedToken> tokens,
                                            std::size_t index) const;

 private:
  std::vector<SignalEntry> entries_;
};

extern const char kDefaultSignalLexiconTsv[];

struct SignalMatch {
  std::size_t first_token = 0;
  std::size_t end_token = 0;  // one past the last token of the phrase
  Span span;                  // in the coordinates of the token spans
  SignalEntry entry;
};

// The single preferred signal occurrence: any monosemous match beats any
// polysemous one, then lower rank, then the leftmost occurrence, then the
// longer phrase. nullopt when no lexicon phrase occurs.
std::optional<SignalMatch> FindSignal(std::span<const TaggedToken> tokens,
                                      const SignalLexicon& lexicon);

// As above, restricted to occurrences inside tokens [lo, hi).
std::optional<SignalMatch> FindSignal(std::span<const TaggedToken> tokens,
                                      const SignalLexicon& lexicon,
                                      std::size_t lo, std::size_t hi);

// Every non-overlapping occurrence, scanning left to right and taking the
// longest phrase at each position.
std::vector<SignalMatch> FindAllSignals(std::span<const TaggedToken> tokens,
                                        const SignalLexicon& lexicon);

// True iff the lowercased, singularised token is a unit of time such as
// "day", "week", "decade" or "evening". Handles irregular plurals
// ("centuries", "millennia", "millenia").
bool IsMeasureWord(std::u32string_view token);

// Measure words plus other nouns that name times rather than events:
// weekdays, months, seasons, "date", "time", "today" and the like.
bool IsTemporalNoun(std::u32string_view token);

}  // namespace t2t3

#endif  // T2T3_LEXICON_H_
