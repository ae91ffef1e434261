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

// Tokenization and coarse part-of-speech tagging of timex phrases.

#ifndef T2T3_TAGGING_H_
#define T2T3_TAGGING_H_

#include <atomic>
#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "t2t3/model.h"

namespace t2t3 {

enum class PosTag { kNoun, kVerb, kAdj, kAdv, kPrep, kDet, kNum, kPoss, kOther };

std::string_view PosTagName(PosTag tag);

struct Token {
  std::u32string surface;
  Span span;
};

struct TaggedToken {
  std::u32string surface;
  PosTag tag = PosTag::kOther;
  Span span;

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

// Splits on whitespace, separates punctuation and the possessive "'s", and
// keeps word-internal '.', ',', '-', '/', ':' and apostrophes ("4-0",
// "1,000", "U.S", "O'Brien"). Spans are offsets into `text` plus `base`.
std::vector<Token> Tokenize(std::u32string_view text, std::size_t base = 0);

class PosTagger {
 public:
  virtual ~PosTagger() = default;
  // Tags `phrase`; token spans are relative to the phrase.
  virtual std::vector<TaggedToken> Tag(std::u32string_view phrase) const = 0;
};

// Closed-class lexicon (determiners, prepositions, pronouns, conjunctions,
// number words, auxiliaries, a few adjectives and adverbs) followed by
// suffix rules: -ed/-ing -> VERB, -ly -> ADV, anything else NOUN.
class RuleTagger : public PosTagger {
 public:
  std::vector<TaggedToken> Tag(std::u32string_view phrase) const override;

  static PosTag TagWord(std::u32string_view word);
};

// Phrase-level memo in front of a tagger. Safe for concurrent use.
class TagCache {
 public:
  explicit TagCache(std::shared_ptr<const PosTagger> tagger =
                        std::make_shared<RuleTagger>());

  TagCache(const TagCache&) = delete;
  TagCache& operator=(const TagCache&) = delete;

  const PosTagger& tagger() const { return *tagger_; }
  std::size_t hits() const { return hits_.load(); }
  std::size_t misses() const { return misses_.load(); }
  std::size_t size() const;

 private:
  friend std::vector<TaggedToken> Tag(std::u32string_view phrase,
                                      TagCache& cache);

  std::shared_ptr<const PosTagger> tagger_;
  mutable std::mutex mutex_;
  std::unordered_map<std::u32string, std::vector<TaggedToken>> entries_;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
};

// Tags `phrase` through the cache. Identical phrases return identical
// results; every repeat counts as a hit.
std::vector<TaggedToken> Tag(std::u32string_view phrase, TagCache& cache);

}  // namespace t2t3

#endif  // T2T3_TAGGING_H_
