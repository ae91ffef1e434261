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

#include "t2t3/tagging.h"

#include <initializer_list>
#include <unordered_map>

#include "t2t3/lexicon.h"
#include "t2t3/unicode.h"

namespace t2t3 {
namespace {

bool IsApostrophe(char32_t c) { return c == '\'' || c == 0x2019; }

bool IsJoiner(char32_t c) {
  return c == '.' || c == ',' || c == '-' || c == '/' || c == ':' ||
         IsApostrophe(c);
}

// "'s" / "’s" followed by a non-word character (or the end).
bool IsPossessiveAt(std::u32string_view text, std::size_t i) {
  return i + 1 < text.size() && IsApostrophe(text[i]) &&
         (text[i + 1] == 's' || text[i + 1] == 'S') &&
         (i + 2 == text.size() || !IsAlnum(text[i + 2]));
}

const std::unordered_map<std::u32string, PosTag>& ClosedClass() {
  static const auto* table = [] {
    auto* m = new std::unordered_map<std::u32string, PosTag>;
    auto add = [&](PosTag tag, std::initializer_list<const char*> words) {
      for (const char* w : words) (*m)[U32(w)] = tag;
    };
    add(PosTag::kDet,
        {"the", "a", "an", "this", "that", "these", "those", "each", "every",
         "some", "any", "no", "all", "both", "either", "neither", "another",
         "my", "your", "his", "her", "its", "our", "their"});
    add(PosTag::kPrep,
        {"about", "above", "across", "after", "against", "along", "among",
         "around", "at", "before", "behind", "below", "beneath", "beside",
         "between", "beyond", "by", "despite", "down", "during", "except",
         "for", "from", "in", "inside", "into", "like", "near", "of", "off",
         "on", "onto", "out", "outside", "over", "past", "per", "since",
         "than", "through", "throughout", "till", "to", "toward", "towards",
         "under", "until", "up", "upon", "via", "with", "within", "without",
         "ago", "amid"});
    add(PosTag::kOther,
        {"i", "you", "he", "she", "it", "we", "they", "me", "him", "us",
         "them", "and", "or", "but", "nor", "yet", "so", "when", "while",
         "whereas", "whether", "if", "unless", "because", "although",
         "though", "which", "who", "whom", "whose", "what", "where", "not",
         "there"});
    add(PosTag::kNum,
        {"zero", "one", "two", "three", "four", "five", "six", "seven",
         "eight", "nine", "ten", "eleven", "twelve", "thirteen", "fourteen",
         "fifteen", "sixteen", "seventeen", "eighteen", "nineteen", "twenty",
         "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety",
         "hundred", "thousand", "million", "billion", "dozen", "half",
         "first", "third", "fourth", "fifth", "sixth", "seventh", "eighth",
         "ninth", "tenth", "eleventh", "twelfth", "thirteenth", "fifteenth",
         "twentieth", "thirtieth"});
    add(PosTag::kVerb,
        {"is", "are", "was", "were", "be", "been", "am", "has", "have",
         "had", "do", "does", "did", "will", "would", "shall", "should",
         "can", "could", "may", "might", "must", "began", "took", "went",
         "came", "made", "said", "met", "left", "won", "lost", "fell", "held",
         "ran", "saw", "gave", "got", "told", "became", "begun",
         "broke", "sent", "signed", "struck", "fought", "wrote", "sold"});
    add(PosTag::kAdj,
        {"next", "last", "previous", "early", "late", "recent", "current",
         "few", "several", "many", "much", "more", "most", "other", "same",
         "such", "new", "old", "fiscal", "whole", "entire", "final",
         "initial", "coming", "following", "prior"});
    add(PosTag::kAdv,
        {"later", "earlier", "soon", "now", "then", "just", "only", "almost",
         "nearly", "once", "twice", "still", "already", "ever", "never",
         "again", "ahead", "afterwards", "beforehand", "meanwhile", "very"});
    (*m)[U32("'s")] = PosTag::kPoss;
    (*m)[U32("\xE2\x80\x99s")] = PosTag::kPoss;
    return m;
  }();
  return *table;
}

bool EndsWith(std::u32string_view word, std::u32string_view suffix) {
  return word.size() >= suffix.size() &&
         word.substr(word.size() - suffix.size()) == suffix;
}

}  // namespace

std::string_view PosTagName(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun: return "NOUN";
    case PosTag::kVerb: return "VERB";
    case PosTag::kAdj: return "ADJ";
    case PosTag::kAdv: return "ADV";
    case PosTag::kPrep: return "PREP";
    case PosTag::kDet: return "DET";
    case PosTag::kNum: return "NUM";
    case PosTag::kPoss: return "POSS";
    case PosTag::kOther: return "OTHER";
  }
  return "OTHER";
}

std::vector<Token> Tokenize(std::u32string_view text, std::size_t base) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (IsSpace(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (IsPossessiveAt(text, i)) {
      i += 2;
    } else if (IsAlnum(text[i])) {
      while (i < text.size()) {
        if (IsAlnum(text[i])) {
          ++i;
        } else if (IsPossessiveAt(text, i)) {
          break;
        } else if (IsJoiner(text[i]) && i + 1 < text.size() &&
                   IsAlnum(text[i + 1])) {
          ++i;
        } else {
          break;
        }
      }
    } else {
      ++i;
    }
    tokens.push_back(Token{std::u32string(text.substr(start, i - start)),
                           Span{base + start, base + i}});
  }
  return tokens;
}

PosTag RuleTagger::TagWord(std::u32string_view word) {
  const std::u32string lower = ToLower(word);
  if (lower.empty()) return PosTag::kOther;
  const auto& closed = ClosedClass();
  if (auto it = closed.find(lower); it != closed.end()) return it->second;
  bool has_digit = false, has_alpha = false;
  for (char32_t c : lower) {
    has_digit = has_digit || IsDigit(c);
    has_alpha = has_alpha || IsAlpha(c);
  }
  if (has_digit) return PosTag::kNum;
  if (!has_alpha) return PosTag::kOther;
  if (IsTemporalNoun(lower)) return PosTag::kNoun;
  if (EndsWith(lower, U"ed") && lower.size() > 3) return PosTag::kVerb;
  if (EndsWith(lower, U"ing") && lower.size() > 4) return PosTag::kVerb;
  if (EndsWith(lower, U"ly") && lower.size() > 3) return PosTag::kAdv;
  return PosTag::kNoun;
}

std::vector<TaggedToken> RuleTagger::Tag(std::u32string_view phrase) const {
  std::vector<TaggedToken> out;
  for (Token& token : Tokenize(phrase)) {
    const PosTag tag = TagWord(token.surface);
    out.push_back(TaggedToken{std::move(token.surface), tag, token.span});
  }
  return out;
}

TagCache::TagCache(std::shared_ptr<const PosTagger> tagger)
    : tagger_(std::move(tagger)) {}

std::size_t TagCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return entries_.size();
}

std::vector<TaggedToken> Tag(std::u32string_view phrase, TagCache& cache) {
  std::u32string key(phrase);
  {
    std::lock_guard<std::mutex> lock(cache.mutex_);
    if (auto it = cache.entries_.find(key); it != cache.entries_.end()) {
      ++cache.hits_;
      return it->second;
    }
  }
  // Tag outside the lock; a concurrent miss on the same phrase computes the
  // same deterministic result and the first insert wins.
  std::vector<TaggedToken> tagged = cache.tagger_->Tag(phrase);
  std::lock_guard<std::mutex> lock(cache.mutex_);
  ++cache.misses_;
  auto [it, inserted] = cache.entries_.emplace(std::move(key), std::move(tagged));
  return it->second;
}

}  // namespace t2t3
