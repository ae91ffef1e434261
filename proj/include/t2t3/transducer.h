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

// TIMEX2 to TimeML conversion.
//
// Each top-level TIMEX2 takes one of four paths:
//   nested      it has embedded TIMEX2 children
//   signalled   a signal phrase splits it into a timex part and an event part
//   trimmed     it is long and is cut down to one short chunk
//   simple      copied over as a single TIMEX3

#ifndef T2T3_TRANSDUCER_H_
#define T2T3_TRANSDUCER_H_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "t2t3/lexicon.h"
#include "t2t3/model.h"
#include "t2t3/tagging.h"

namespace t2t3 {

// Signal phrase (lowercase, space-joined) to relation. A phrase that is
// missing or maps to nullopt gives an untyped TLINK.
using SignalRelationMap = std::map<std::string, std::optional<RelType>>;

SignalRelationMap DefaultSignalRelationMap();

struct ConversionConfig {
  std::size_t trim_cutoff = 6;
  SignalRelationMap signal_relation_map = DefaultSignalRelationMap();
  // Nested links whose values do not settle the relation stay untyped.
  // When false the signal map is consulted instead.
  bool leave_ambiguous_untyped = true;

  // Throws std::invalid_argument when trim_cutoff < 2.
  void Check() const;
};

enum class ChunkKind { kPreSignal, kSignal, kPostSignal, kPlain };

struct Chunk {
  std::vector<TaggedToken> tokens;
  Span span;
  ChunkKind kind = ChunkKind::kPlain;
};

// Finds the word that dominates a chunk.
class DependencyOracle {
 public:
  virtual ~DependencyOracle() = default;
  // Index into `tokens`, which is nonempty.
  virtual std::size_t Head(std::span<const TaggedToken> tokens) const = 0;
};

// Leftmost non-auxiliary finite verb, then the leftmost non-auxiliary verb
// form, then any verb. Without verbs: the rightmost noun that does not name
// a time, else the rightmost noun, else the last token.
class HeuristicDependencyOracle : public DependencyOracle {
 public:
  std::size_t Head(std::span<const TaggedToken> tokens) const override;
};

// Node of a constituent tree over tokens [first, end).
struct Constituent {
  std::size_t first = 0;
  std::size_t end = 0;
  std::vector<Constituent> children;

  std::size_t size() const { return end - first; }
};

class ConstituentOracle {
 public:
  virtual ~ConstituentOracle() = default;
  virtual Constituent Parse(std::span<const TaggedToken> tokens) const = 0;
};

// Two-level tree: the root spans all tokens and its children are flat
// chunks. Prepositions, punctuation and clause-level conjunctions form
// one-token chunks; a possessive marker starts a new chunk.
class ChunkerConstituentOracle : public ConstituentOracle {
 public:
  Constituent Parse(std::span<const TaggedToken> tokens) const override;
};

// Shared, read-mostly state for a batch of conversions.
struct ConversionResources {
  std::shared_ptr<const SignalLexicon> lexicon;
  // Phrases that co-ordinate parts of a nested TIMEX2: the signal lexicon
  // plus "of".
  std::shared_ptr<const SignalLexicon> coordinators;
  std::shared_ptr<TagCache> tags;
  std::shared_ptr<const DependencyOracle> dependency;
  std::shared_ptr<const ConstituentOracle> constituents;

  static ConversionResources Default();
  static ConversionResources WithLexicon(SignalLexicon lexicon);
};

enum class ConversionPath { kSimple, kSignalled, kNested, kTrimmed };

std::string_view ConversionPathName(ConversionPath path);

struct ConversionWarning {
  std::string kind;  // e.g. "EmptyValue", "NoResidueChunk", "DegenerateSplit"
  Span span;         // of the TIMEX2 concerned
  std::string message;
};

// A TIMEX2 value that produced no TIMEX3.
struct DroppedValue {
  Span span;
  std::string val;
  std::string reason;
};

struct ConversionReport {
  std::size_t timex2_total = 0;
  std::size_t timex2_leaves = 0;
  std::size_t nested_outers = 0;
  std::size_t timex3_emitted = 0;
  std::map<ConversionPath, std::size_t> paths;
  std::vector<ConversionWarning> warnings;
  // timex3_emitted == timex2_total - dropped.size().
  std::vector<DroppedValue> dropped;

  std::size_t PathCount(ConversionPath path) const;
  // Pools counts from another document.
  void Merge(const ConversionReport& other);
};

// SET when `set`; DURATION for values starting with 'P'; TIME for values
// with a 'T' time part or bare clock times; DATE otherwise.
TimexType InferType(std::string_view val, bool set);

// One TIMEX3 over the same span with the same value. anchor_time_id is set
// when a TIMEX3 already in `doc` carries the anchor value. The tid is left
// empty.
Timex3 MapSimpleTimex(const Timex2& t2, const TimeMLDocument& doc);

struct SignalledElements {
  std::string timex_id;
  std::string signal_id;
  std::string event_id;
  std::string tlink_id;
};

// Splits `t2` around its preferred signal and adds a TIMEX3, SIGNAL, EVENT
// and TLINK to `doc`, whose text must contain the span. Throws
// DegenerateSplit when the signal leaves no timex or no event words.
SignalledElements TransduceSignalled(const Timex2& t2, TimeMLDocument& doc,
                                     const ConversionConfig& config,
                                     const ConversionResources& resources);

std::size_t SelectEventHead(const Chunk& chunk, const DependencyOracle& oracle);

// Unpacks a TIMEX2 with children into `doc`. Warnings and dropped values
// go to `report`.
void TransduceNested(const Timex2& t2, TimeMLDocument& doc,
                     const ConversionConfig& config,
                     const ConversionResources& resources,
                     ConversionReport& report);

// The span a long TIMEX2 is cut down to. `tokens` are the TIMEX2's tokens
// with document offsets.
Span TrimLongTimex(std::span<const TaggedToken> tokens,
                   const ConversionConfig& config,
                   const ConstituentOracle& oracle);

struct Conversion {
  TimeMLDocument timeml;
  ConversionReport report;
};

Conversion ConvertDocument(const Document& doc,
                           const ConversionConfig& config = {},
                           const ConversionResources& resources =
                               ConversionResources::Default());

}  // namespace t2t3

#endif  // T2T3_TRANSDUCER_H_
