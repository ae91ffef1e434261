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

#include "t2t3/lexicon.h"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "t2t3/errors.h"
#include "t2t3/unicode.h"

namespace t2t3 {

const char kDefaultSignalLexiconTsv[] =
    "after\tmonosemous\t1\n"
    "before\tmonosemous\t2\n"
    "since\tmonosemous\t3\n"
    "until\tmonosemous\t4\n"
    "during\tmonosemous\t5\n"
    "following\tmonosemous\t6\n"
    "ago\tmonosemous\t7\n"
    "prior to\tmonosemous\t8\n"
    "till\tpolysemous\t1\n"
    "within\tpolysemous\t2\n"
    "throughout\tpolysemous\t3\n"
    "from\tpolysemous\t4\n"
    "by\tpolysemous\t5\n"
    "at\tpolysemous\t6\n"
    "on\tpolysemous\t7\n"
    "for\tpolysemous\t8\n"
    "to\tpolysemous\t9\n"
    "in\tpolysemous\t10\n";

namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

std::vector<std::u32string> PhraseTokens(std::string_view phrase) {
  std::vector<std::u32string> out;
  for (const Token& token : Tokenize(U32(phrase)))
    out.push_back(ToLower(token.surface));
  return out;
}

const std::unordered_set<std::u32string>& MeasureWords() {
  static const auto* words = new std::unordered_set<std::u32string>{
      U"second", U"minute", U"hour", U"day", U"week", U"fortnight",
      U"month", U"quarter", U"season", U"semester", U"year", U"decade",
      U"century", U"millennium", U"morning", U"afternoon", U"evening",
      U"night", U"weekend", U"weekday", U"sec", U"min", U"hr", U"wk",
      U"yr"};
  return *words;
}

const std::unordered_set<std::u32string>& OtherTemporalNouns() {
  static const auto* words = new std::unordered_set<std::u32string>{
      U"date", U"time", U"period", U"moment", U"today", U"tomorrow",
      U"yesterday", U"tonight", U"now", U"noon", U"midnight", U"midday",
      U"dawn", U"dusk", U"monday", U"tuesday", U"wednesday", U"thursday",
      U"friday", U"saturday", U"sunday", U"january", U"february", U"march",
      U"april", U"may", U"june", U"july", U"august", U"september",
      U"october", U"november", U"december", U"spring", U"summer", U"autumn",
      U"winter", U"past", U"future", U"present", U"era", U"age"};
  return *words;
}

// Lowercases and strips a regular or known irregular plural.
std::u32string Singular(std::u32string_view token) {
  std::u32string w = ToLower(token);
  if (w == U"millennia" || w == U"millenia" || w == U"millenniums" ||
      w == U"millenium")
    return U"millennium";
  if (w.size() > 3 && w.ends_with(U"ies")) return w.substr(0, w.size() - 3) + U"y";
  if (w.size() > 2 && w.back() == 's' && !w.ends_with(U"ss"))
    return w.substr(0, w.size() - 1);
  return w;
}

}  // namespace

std::string SignalEntry::Text() const {
  std::u32string joined;
  for (const auto& token : phrase) {
    if (!joined.empty()) joined += U' ';
    joined += token;
  }
  return ToUtf8(joined);
}

SignalLexicon::SignalLexicon(std::vector<SignalEntry> entries)
    : entries_(std::move(entries)) {
  std::set<std::vector<std::u32string>> seen;
  for (const SignalEntry& entry : entries_) {
    if (entry.phrase.empty()) throw LexiconFormat("empty signal phrase");
    if (!seen.insert(entry.phrase).second)
      throw LexiconFormat("duplicate signal phrase '" + entry.Text() + "'");
  }
}

SignalLexicon SignalLexicon::Parse(std::string_view tsv) {
  std::vector<SignalEntry> entries;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start < tsv.size()) {
    std::size_t end = tsv.find('\n', start);
    if (end == std::string_view::npos) end = tsv.size();
    std::string_view line = tsv.substr(start, end - start);
    start = end + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const auto fields = SplitTabs(line);
    auto fail = [&](const std::string& why) -> LexiconFormat {
      return LexiconFormat("signal lexicon line " +
                           std::to_string(line_number) + ": " + why);
    };
    if (fields.size() != 3) throw fail("expected 3 tab-separated fields");
    SignalEntry entry;
    entry.phrase = PhraseTokens(fields[0]);
    if (entry.phrase.empty()) throw fail("empty phrase");
    if (fields[1] == "monosemous") {
      entry.monosemous = true;
    } else if (fields[1] != "polysemous") {
      throw fail("second field must be 'monosemous' or 'polysemous'");
    }
    const auto rank = fields[2];
    auto [ptr, ec] =
        std::from_chars(rank.data(), rank.data() + rank.size(), entry.rank);
    if (ec != std::errc() || ptr != rank.data() + rank.size())
      throw fail("rank is not an integer");
    entries.push_back(std::move(entry));
  }
  return SignalLexicon(std::move(entries));
}

SignalLexicon SignalLexicon::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexiconFormat("cannot read signal lexicon " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

const SignalLexicon& SignalLexicon::Default() {
  static const SignalLexicon* lexicon =
      new SignalLexicon(Parse(kDefaultSignalLexiconTsv));
  return *lexicon;
}

std::vector<const SignalEntry*> SignalLexicon::MatchesAt(
    std::span<const TaggedToken> tokens, std::size_t index) const {
  std::vector<const SignalEntry*> out;
  for (const SignalEntry& entry : entries_) {
    if (index + entry.phrase.size() > tokens.size()) continue;
    bool match = true;
    for (std::size_t k = 0; k < entry.phrase.size() && match; ++k)
      match = ToLower(tokens[index + k].surface) == entry.phrase[k];
    if (match) out.push_back(&entry);
  }
  return out;
}

std::optional<SignalMatch> FindSignal(std::span<const TaggedToken> tokens,
                                      const SignalLexicon& lexicon) {
  return FindSignal(tokens, lexicon, 0, tokens.size());
}

std::optional<SignalMatch> FindSignal(std::span<const TaggedToken> tokens,
                                      const SignalLexicon& lexicon,
                                      std::size_t lo, std::size_t hi) {
  hi = std::min(hi, tokens.size());
  std::optional<SignalMatch> best;
  auto key = [](const SignalMatch& m) {
    return std::make_tuple(m.entry.monosemous ? 0 : 1, m.entry.rank,
                           m.first_token,
                           -static_cast<long>(m.end_token - m.first_token));
  };
  for (std::size_t i = lo; i < hi; ++i) {
    for (const SignalEntry* entry : lexicon.MatchesAt(tokens, i)) {
      const std::size_t end = i + entry->phrase.size();
      if (end > hi) continue;
      SignalMatch m{i, end, Span{tokens[i].span.start, tokens[end - 1].span.end},
                    *entry};
      if (!best || key(m) < key(*best)) best = std::move(m);
    }
  }
  return best;
}

std::vector<SignalMatch> FindAllSignals(std::span<const TaggedToken> tokens,
                                        const SignalLexicon& lexicon) {
  std::vector<SignalMatch> out;
  for (std::size_t i = 0; i < tokens.size();) {
    const SignalEntry* longest = nullptr;
    for (const SignalEntry* entry : lexicon.MatchesAt(tokens, i))
      if (!longest || entry->phrase.size() > longest->phrase.size())
        longest = entry;
    if (!longest) {
      ++i;
      continue;
    }
    const std::size_t end = i + longest->phrase.size();
    out.push_back(SignalMatch{
        i, end, Span{tokens[i].span.start, tokens[end - 1].span.end}, *longest});
    i = end;
  }
  return out;
}

bool IsMeasureWord(std::u32string_view token) {
  const auto& words = MeasureWords();
  return words.count(ToLower(token)) > 0 || words.count(Singular(token)) > 0;
}

bool IsTemporalNoun(std::u32string_view token) {
  if (IsMeasureWord(token)) return true;
  const auto& words = OtherTemporalNouns();
  return words.count(ToLower(token)) > 0 || words.count(Singular(token)) > 0;
}

}  // namespace t2t3
