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

#include "t2t3/transducer.h"

#include <algorithm>
#include <regex>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "t2t3/errors.h"
#include "t2t3/timex_value.h"
#include "t2t3/unicode.h"

namespace t2t3 {
namespace {

bool IsReference(std::string_view val) {
  return val == "FUTURE_REF" || val == "PAST_REF" || val == "PRESENT_REF";
}

bool IsPunctuationToken(const TaggedToken& token) {
  return std::all_of(token.surface.begin(), token.surface.end(),
                     [](char32_t c) { return IsPunct(c); });
}

bool IsStrippable(const TaggedToken& token) {
  static const auto* words = new std::unordered_set<std::u32string>{
      U"a", U"an", U"the", U"in", U"on", U"at", U"by", U"for", U"of", U"to"};
  return IsPunctuationToken(token) || words->count(ToLower(token.surface)) > 0;
}

bool IsClauseWord(std::u32string_view lower) {
  static const auto* words = new std::unordered_set<std::u32string>{
      U"and", U"or", U"but", U"nor", U"when", U"while", U"whereas",
      U"because", U"although", U"though", U"if", U"unless", U"that",
      U"which", U"who", U"where", U"whether"};
  return words->count(std::u32string(lower)) > 0;
}

bool IsAuxiliary(std::u32string_view lower) {
  static const auto* words = new std::unordered_set<std::u32string>{
      U"is", U"are", U"was", U"were", U"be", U"been", U"am", U"has",
      U"have", U"had", U"do", U"does", U"did", U"will", U"would", U"shall",
      U"should", U"can", U"could", U"may", U"might", U"must"};
  return words->count(std::u32string(lower)) > 0;
}

bool HasMeasureWord(std::span<const TaggedToken> tokens) {
  return std::any_of(tokens.begin(), tokens.end(), [](const TaggedToken& t) {
    return IsMeasureWord(t.surface);
  });
}

// Content words make a residue chunk worth a TIMEX3.
bool IsContent(const TaggedToken& token) {
  switch (token.tag) {
    case PosTag::kNoun:
    case PosTag::kVerb:
    case PosTag::kAdj:
    case PosTag::kAdv:
    case PosTag::kNum:
      return !IsPunctuationToken(token);
    default:
      return false;
  }
}

// An event needs a verb or a noun that is not itself a time.
bool IsEventWord(const TaggedToken& token) {
  return token.tag == PosTag::kVerb ||
         (token.tag == PosTag::kNoun && !IsTemporalNoun(token.surface));
}

Span Cover(std::span<const TaggedToken> tokens) {
  return Span{tokens.front().span.start, tokens.back().span.end};
}

// Tags the text under `span`, with token spans in document offsets.
std::vector<TaggedToken> TokensAt(std::u32string_view text, const Span& span,
                                  TagCache& tags) {
  std::vector<TaggedToken> tokens =
      Tag(text.substr(span.start, span.length()), tags);
  for (TaggedToken& token : tokens) {
    token.span.start += span.start;
    token.span.end += span.start;
  }
  return tokens;
}

Chunk MakeChunk(std::span<const TaggedToken> tokens, ChunkKind kind) {
  Chunk chunk;
  chunk.tokens.assign(tokens.begin(), tokens.end());
  chunk.kind = kind;
  if (!tokens.empty()) chunk.span = Cover(tokens);
  return chunk;
}

// Drops leading and trailing tokens matching `drop`.
template <typename Pred>
std::span<const TaggedToken> StripEdges(std::span<const TaggedToken> tokens,
                                        Pred drop) {
  while (!tokens.empty() && drop(tokens.front())) tokens = tokens.subspan(1);
  while (!tokens.empty() && drop(tokens.back()))
    tokens = tokens.first(tokens.size() - 1);
  return tokens;
}

std::optional<RelType> LookUpSignal(const ConversionConfig& config,
                                    const std::string& phrase) {
  auto it = config.signal_relation_map.find(phrase);
  if (it == config.signal_relation_map.end()) return std::nullopt;
  return it->second;
}

// The split of a signalled TIMEX2 before any element is built.
struct SignalPlan {
  SignalMatch signal;
  Chunk pre;
  Chunk post;
  bool timex_is_pre = true;

  const Chunk& timex() const { return timex_is_pre ? pre : post; }
  const Chunk& event() const { return timex_is_pre ? post : pre; }
};

// Uses only signals with words on both sides.
std::optional<SignalPlan> PlanSignalled(std::span<const TaggedToken> tokens,
                                        const SignalLexicon& lexicon) {
  if (tokens.size() < 3) return std::nullopt;
  auto signal = FindSignal(tokens, lexicon, 1, tokens.size() - 1);
  if (!signal) return std::nullopt;
  SignalPlan plan{*signal,
                  MakeChunk(tokens.first(signal->first_token),
                            ChunkKind::kPreSignal),
                  MakeChunk(tokens.subspan(signal->end_token),
                            ChunkKind::kPostSignal)};
  const bool pre_measure = HasMeasureWord(plan.pre.tokens);
  const bool post_measure = HasMeasureWord(plan.post.tokens);
  if (pre_measure && post_measure) {
    plan.timex_is_pre = plan.pre.tokens.size() <= plan.post.tokens.size();
  } else {
    plan.timex_is_pre = pre_measure || !post_measure;
  }
  return plan;
}

Timex3 DraftTimex3(const Timex2& t2, const Span& span,
                   const TimeMLDocument& doc) {
  Timex3 t;
  t.span = span;
  t.type = InferType(t2.val, t2.set);
  t.value = t2.val;
  t.mod = t2.mod;
  t.temporal_function = IsReference(t2.val) || t2.anchor_val.has_value() ||
                        t2.anchor_dir.has_value();
  if (t2.anchor_val) {
    // Nearest earlier TIMEX3 with the anchor value, else any.
    const Timex3* found = nullptr;
    for (const Timex3& other : doc.timex3s) {
      if (other.value != *t2.anchor_val) continue;
      if (!found || other.span.start <= span.start) found = &other;
    }
    if (found) t.anchor_time_id = found->tid;
  }
  return t;
}

void CollectNodes(const Timex2& node, bool is_root,
                  std::vector<const Timex2*>& leaves,
                  std::vector<const Timex2*>& inner) {
  if (node.is_leaf()) {
    leaves.push_back(&node);
    return;
  }
  if (!is_root) inner.push_back(&node);
  for (const Timex2& child : node.children)
    CollectNodes(child, false, leaves, inner);
}

void CountTree(const Timex2& node, ConversionReport& report) {
  ++report.timex2_total;
  if (node.is_leaf()) {
    ++report.timex2_leaves;
  } else {
    ++report.nested_outers;
  }
  if (node.val.empty())
    report.warnings.push_back(
        {"EmptyValue", node.span, "TIMEX2 has an empty VAL"});
  for (const Timex2& child : node.children) CountTree(child, report);
}

}  // namespace

SignalRelationMap DefaultSignalRelationMap() {
  return {
      {"after", RelType::kAfter},
      {"before", RelType::kBefore},
      {"since", RelType::kAfter},
      {"until", RelType::kBefore},
      {"during", RelType::kIsIncluded},
      {"throughout", RelType::kIsIncluded},
      {"in", RelType::kIsIncluded},
      {"of", RelType::kIsIncluded},
      {"from", RelType::kBegunBy},
  };
}

void ConversionConfig::Check() const {
  if (trim_cutoff < 2)
    throw std::invalid_argument("trim cutoff must be at least 2, got " +
                                std::to_string(trim_cutoff));
}

std::size_t HeuristicDependencyOracle::Head(
    std::span<const TaggedToken> tokens) const {
  std::optional<std::size_t> verb, main_verb, any_verb, noun, any_noun;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const TaggedToken& t = tokens[i];
    const std::u32string lower = ToLower(t.surface);
    if (t.tag == PosTag::kVerb) {
      if (!any_verb) any_verb = i;
      if (IsAuxiliary(lower)) continue;
      if (!main_verb) main_verb = i;
      if (!verb && !lower.ends_with(U"ing")) verb = i;
    } else if (t.tag == PosTag::kNoun) {
      any_noun = i;
      if (!IsTemporalNoun(t.surface)) noun = i;
    }
  }
  if (verb) return *verb;
  if (main_verb) return *main_verb;
  if (any_verb) return *any_verb;
  if (noun) return *noun;
  if (any_noun) return *any_noun;
  return tokens.size() - 1;
}

Constituent ChunkerConstituentOracle::Parse(
    std::span<const TaggedToken> tokens) const {
  Constituent root{0, tokens.size(), {}};
  std::optional<std::size_t> open;
  auto close = [&](std::size_t end) {
    if (open && *open < end) root.children.push_back({*open, end, {}});
    open.reset();
  };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const TaggedToken& t = tokens[i];
    if (t.tag == PosTag::kPrep || IsPunctuationToken(t) ||
        IsClauseWord(ToLower(t.surface))) {
      close(i);
      root.children.push_back({i, i + 1, {}});
    } else if (t.tag == PosTag::kPoss) {
      close(i);
      open = i;
    } else if (!open) {
      open = i;
    }
  }
  close(tokens.size());
  return root;
}

ConversionResources ConversionResources::Default() {
  static const ConversionResources* shared =
      new ConversionResources(WithLexicon(SignalLexicon::Default()));
  return *shared;
}

ConversionResources ConversionResources::WithLexicon(SignalLexicon lexicon) {
  ConversionResources r;
  std::vector<SignalEntry> coordinators = lexicon.entries();
  int rank = 0;
  bool has_of = false;
  for (const SignalEntry& e : coordinators) {
    if (!e.monosemous) rank = std::max(rank, e.rank);
    has_of = has_of || e.phrase == std::vector<std::u32string>{U"of"};
  }
  if (!has_of) coordinators.push_back(SignalEntry{{U"of"}, false, rank + 1});
  r.lexicon = std::make_shared<const SignalLexicon>(std::move(lexicon));
  r.coordinators =
      std::make_shared<const SignalLexicon>(std::move(coordinators));
  r.tags = std::make_shared<TagCache>();
  r.dependency = std::make_shared<HeuristicDependencyOracle>();
  r.constituents = std::make_shared<ChunkerConstituentOracle>();
  return r;
}

std::string_view ConversionPathName(ConversionPath path) {
  switch (path) {
    case ConversionPath::kSimple: return "simple";
    case ConversionPath::kSignalled: return "signalled";
    case ConversionPath::kNested: return "nested";
    case ConversionPath::kTrimmed: return "trimmed";
  }
  return "simple";
}

std::size_t ConversionReport::PathCount(ConversionPath path) const {
  auto it = paths.find(path);
  return it == paths.end() ? 0 : it->second;
}

void ConversionReport::Merge(const ConversionReport& other) {
  timex2_total += other.timex2_total;
  timex2_leaves += other.timex2_leaves;
  nested_outers += other.nested_outers;
  timex3_emitted += other.timex3_emitted;
  for (const auto& [path, n] : other.paths) paths[path] += n;
  warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
  dropped.insert(dropped.end(), other.dropped.begin(), other.dropped.end());
}

TimexType InferType(std::string_view val, bool set) {
  static const std::regex kTimePart(
      R"(^(?:[\dX]{2,4}(?:-[\dXWQHSUPFAIE]+)*)?T(?:\d|MO|MI|AF|EV|NI|DT))");
  static const std::regex kClock(R"(^\d{1,2}:\d{2})");
  if (set) return TimexType::kSet;
  if (IsReference(val)) return TimexType::kDate;
  if (!val.empty() && val.front() == 'P') return TimexType::kDuration;
  const std::string v(val);
  if (std::regex_search(v, kTimePart) || std::regex_search(v, kClock))
    return TimexType::kTime;
  return TimexType::kDate;
}

Timex3 MapSimpleTimex(const Timex2& t2, const TimeMLDocument& doc) {
  return DraftTimex3(t2, t2.span, doc);
}

std::size_t SelectEventHead(const Chunk& chunk,
                            const DependencyOracle& oracle) {
  return oracle.Head(chunk.tokens);
}

SignalledElements TransduceSignalled(const Timex2& t2, TimeMLDocument& doc,
                                     const ConversionConfig& config,
                                     const ConversionResources& resources) {
  const auto tokens = TokensAt(doc.text, t2.span, *resources.tags);
  const auto plan = PlanSignalled(tokens, *resources.lexicon);
  if (!plan)
    throw DegenerateSplit("no signal with words on both sides in '" +
                          ToUtf8(doc.Slice(t2.span)) + "'");
  const auto timex_tokens = StripEdges(
      std::span<const TaggedToken>(plan->timex().tokens), IsStrippable);
  if (timex_tokens.empty())
    throw DegenerateSplit("only articles and prepositions are left for the "
                          "timex in '" + ToUtf8(doc.Slice(t2.span)) + "'");
  const Chunk& event_chunk = plan->event();
  const TaggedToken& head =
      event_chunk.tokens[SelectEventHead(event_chunk, *resources.dependency)];

  SignalledElements ids;
  ids.timex_id = doc.Add(DraftTimex3(t2, Cover(timex_tokens), doc));
  ids.signal_id = doc.Add(Signal{"", plan->signal.span});
  ids.event_id = doc.Add(Event{"", head.span, EventClass::kOccurrence, {}});

  TLink link;
  link.time_id = ids.timex_id;
  link.related_event_id = ids.event_id;
  link.signal_id = ids.signal_id;
  link.rel_type = LookUpSignal(config, plan->signal.entry.Text());
  // The map reads "<first part> signal <second part>".
  if (link.rel_type && !plan->timex_is_pre) link.rel_type = Inverse(*link.rel_type);
  ids.tlink_id = doc.Add(std::move(link));
  return ids;
}

void TransduceNested(const Timex2& t2, TimeMLDocument& doc,
                     const ConversionConfig& config,
                     const ConversionResources& resources,
                     ConversionReport& report) {
  std::vector<const Timex2*> leaves, inner;
  CollectNodes(t2, true, leaves, inner);
  for (const Timex2* node : inner) {
    report.warnings.push_back({"IntermediateValue", node->span,
                               "value of a TIMEX2 between the outer one and "
                               "its leaves is not kept"});
    report.dropped.push_back({node->span, node->val, "IntermediateValue"});
  }

  // Text of the outer TIMEX2 outside every leaf.
  std::vector<Span> gaps;
  std::size_t cursor = t2.span.start;
  for (const Timex2* leaf : leaves) {
    if (cursor < leaf->span.start) gaps.push_back({cursor, leaf->span.start});
    cursor = std::max(cursor, leaf->span.end);
  }
  if (cursor < t2.span.end) gaps.push_back({cursor, t2.span.end});

  std::vector<Span> signal_spans;
  std::vector<std::string> signal_phrases;
  std::vector<Chunk> chunks;
  for (const Span& gap : gaps) {
    const auto tokens = TokensAt(doc.text, gap, *resources.tags);
    std::size_t from = 0;
    auto residue = [&](std::size_t end) {
      const auto run = StripEdges(
          std::span<const TaggedToken>(tokens).subspan(from, end - from),
          IsPunctuationToken);
      if (std::any_of(run.begin(), run.end(), IsContent))
        chunks.push_back(MakeChunk(run, ChunkKind::kPlain));
    };
    for (const SignalMatch& m : FindAllSignals(tokens, *resources.coordinators)) {
      residue(m.first_token);
      signal_spans.push_back(m.span);
      signal_phrases.push_back(m.entry.Text());
      from = m.end_token;
    }
    residue(tokens.size());
  }

  const Chunk* chosen = nullptr;
  for (const Chunk& chunk : chunks) {
    if (HasMeasureWord(chunk.tokens)) {
      chosen = &chunk;
      break;
    }
  }
  if (!chosen && !chunks.empty()) chosen = &chunks.front();
  if (!chosen) {
    report.warnings.push_back(
        {"NoResidueChunk", t2.span,
         "no words outside the embedded TIMEX2s can carry the outer value " +
             t2.val});
    report.dropped.push_back({t2.span, t2.val, "NoResidueChunk"});
  }

  // Drafts go in by span so that IDs follow reading order.
  struct Draft {
    Timex3 timex;
    const Timex2* source;
  };
  std::vector<Draft> drafts;
  for (const Timex2* leaf : leaves)
    drafts.push_back({MapSimpleTimex(*leaf, doc), leaf});
  if (chosen) drafts.push_back({DraftTimex3(t2, chosen->span, doc), &t2});
  std::sort(drafts.begin(), drafts.end(), [](const Draft& a, const Draft& b) {
    return a.timex.span < b.timex.span;
  });
  std::string outer_id;
  std::vector<std::pair<std::string, const Timex2*>> leaf_ids;
  std::vector<Span> leaf_spans;
  Span outer_span;
  for (Draft& d : drafts) {
    const Span span = d.timex.span;
    const std::string id = doc.Add(std::move(d.timex));
    if (d.source == &t2) {
      outer_id = id;
      outer_span = span;
    } else {
      leaf_ids.emplace_back(id, d.source);
      leaf_spans.push_back(span);
    }
  }
  std::vector<std::string> signal_ids;
  for (const Span& span : signal_spans) signal_ids.push_back(doc.Add(Signal{"", span}));

  // Signal between two spans, nearest to `near`.
  auto signal_between = [&](const Span& near, const Span& far)
      -> std::optional<std::size_t> {
    const bool near_first = near.start < far.start;
    const std::size_t lo = near_first ? near.end : far.end;
    const std::size_t hi = near_first ? far.start : near.start;
    auto distance = [&](const Span& s) {
      return near_first ? s.start - near.end : near.start - s.end;
    };
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < signal_spans.size(); ++i) {
      const Span& s = signal_spans[i];
      if (s.start < lo || s.end > hi) continue;
      if (!best || distance(s) < distance(signal_spans[*best])) best = i;
    }
    return best;
  };
  // Relation of `a` to `b`, where `a_first` says which comes first in text.
  auto relation = [&](const std::string& a, const std::string& b,
                      std::optional<std::size_t> signal,
                      bool a_first) -> std::optional<RelType> {
    if (auto rel = RelationByValue(a, b)) return rel;
    if (config.leave_ambiguous_untyped || !signal) return std::nullopt;
    auto rel = LookUpSignal(config, signal_phrases[*signal]);
    if (rel && !a_first) rel = Inverse(*rel);
    return rel;
  };
  auto add_link = [&](const std::string& from, const std::string& to,
                      std::optional<RelType> rel,
                      std::optional<std::size_t> signal) {
    TLink link;
    link.time_id = from;
    link.related_to_time = to;
    link.rel_type = rel;
    if (signal) link.signal_id = signal_ids[*signal];
    doc.Add(std::move(link));
  };

  if (!outer_id.empty()) {
    for (std::size_t i = 0; i < leaf_ids.size(); ++i) {
      const auto signal = signal_between(leaf_spans[i], outer_span);
      const bool leaf_first = leaf_spans[i].start < outer_span.start;
      add_link(leaf_ids[i].first, outer_id,
               relation(leaf_ids[i].second->val, t2.val, signal, leaf_first),
               signal);
    }
  } else {
    for (std::size_t i = 0; i + 1 < leaf_ids.size(); ++i) {
      const auto signal = signal_between(leaf_spans[i], leaf_spans[i + 1]);
      add_link(leaf_ids[i].first, leaf_ids[i + 1].first,
               relation(leaf_ids[i].second->val, leaf_ids[i + 1].second->val,
                        signal, true),
               signal);
    }
  }
}

Span TrimLongTimex(std::span<const TaggedToken> tokens,
                   const ConversionConfig& config,
                   const ConstituentOracle& oracle) {
  if (tokens.empty()) return {};
  std::vector<Constituent> candidates;
  auto collect = [&](auto&& self, const Constituent& node) -> void {
    for (const Constituent& child : node.children) {
      candidates.push_back(Constituent{child.first, child.end, {}});
      self(self, child);
    }
  };
  collect(collect, oracle.Parse(tokens));
  for (std::size_t i = 0; i < tokens.size(); ++i)
    candidates.push_back(Constituent{i, i + 1, {}});

  const Constituent* best = nullptr;
  auto better = [](const Constituent& a, const Constituent* b) {
    return !b || a.size() > b->size() ||
           (a.size() == b->size() && a.first < b->first);
  };
  for (const Constituent& c : candidates) {
    if (c.size() >= config.trim_cutoff || c.end > tokens.size()) continue;
    if (!HasMeasureWord(tokens.subspan(c.first, c.size()))) continue;
    if (better(c, best)) best = &c;
  }
  if (!best) {
    for (const Constituent& c : candidates) {
      if (c.size() >= config.trim_cutoff || c.end > tokens.size()) continue;
      if (!best || c.first < best->first ||
          (c.first == best->first && c.size() > best->size()))
        best = &c;
    }
  }
  if (!best) return Cover(tokens);
  return Cover(tokens.subspan(best->first, best->size()));
}

Conversion ConvertDocument(const Document& doc, const ConversionConfig& config,
                           const ConversionResources& resources) {
  config.Check();
  Conversion result;
  TimeMLDocument& out = result.timeml;
  ConversionReport& report = result.report;
  out.text = doc.text();
  out.doc_id = doc.doc_id();

  for (const Timex2& t2 : doc.timexes()) {
    CountTree(t2, report);
    if (!t2.is_leaf()) {
      TransduceNested(t2, out, config, resources, report);
      ++report.paths[ConversionPath::kNested];
      continue;
    }
    const auto tokens = TokensAt(out.text, t2.span, *resources.tags);
    const auto plan = PlanSignalled(tokens, *resources.lexicon);
    if (plan && !plan->event().tokens.empty() &&
        IsEventWord(plan->event().tokens[SelectEventHead(
            plan->event(), *resources.dependency)])) {
      try {
        TransduceSignalled(t2, out, config, resources);
        ++report.paths[ConversionPath::kSignalled];
        continue;
      } catch (const DegenerateSplit& e) {
        report.warnings.push_back({"DegenerateSplit", t2.span, e.what()});
      }
    }
    if (tokens.size() >= config.trim_cutoff) {
      const Span span = TrimLongTimex(tokens, config, *resources.constituents);
      out.Add(DraftTimex3(t2, span, out));
      ++report.paths[ConversionPath::kTrimmed];
      continue;
    }
    out.Add(MapSimpleTimex(t2, out));
    ++report.paths[ConversionPath::kSimple];
  }

  if (doc.dct_span()) {
    for (Timex3& t : out.timex3s)
      if (t.span == *doc.dct_span())
        t.function_in_document = FunctionInDocument::kCreationTime;
  }
  report.timex3_emitted = out.timex3s.size();
  return result;
}

}  // namespace t2t3
