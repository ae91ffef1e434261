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

#include <gtest/gtest.h>

#include <stdexcept>

#include "t2t3/errors.h"
#include "t2t3/ingest.h"
#include "t2t3/timeml.h"
#include "t2t3/unicode.h"

namespace t2t3 {
namespace {

std::string Text(const TimeMLDocument& doc, const Span& span) {
  return ToUtf8(doc.Slice(span));
}

Conversion Convert(std::u32string_view markup, const ConversionConfig& config = {}) {
  return ConvertDocument(ParseInline(markup), config);
}

TEST(InferType, DecisionTable) {
  EXPECT_EQ(InferType("P90D", false), TimexType::kDuration);
  EXPECT_EQ(InferType("PT2H", false), TimexType::kDuration);
  EXPECT_EQ(InferType("1999-W23", false), TimexType::kDate);
  EXPECT_EQ(InferType("1998-10-02TEV", false), TimexType::kTime);
  EXPECT_EQ(InferType("2001-03-20T10:30", false), TimexType::kTime);
  EXPECT_EQ(InferType("T10:30", false), TimexType::kTime);
  EXPECT_EQ(InferType("FUTURE_REF", false), TimexType::kDate);
  EXPECT_EQ(InferType("PAST_REF", false), TimexType::kDate);
  EXPECT_EQ(InferType("", false), TimexType::kDate);
  EXPECT_EQ(InferType("P1W", true), TimexType::kSet);
}

TEST(MapSimpleTimex, CopiesValueSpanAndMod) {
  Timex2 t2{.span = {3, 9}, .val = "2001-03", .mod = "APPROX"};
  const Timex3 t3 = MapSimpleTimex(t2, TimeMLDocument{});
  EXPECT_EQ(t3.span, t2.span);
  EXPECT_EQ(t3.value, "2001-03");
  EXPECT_EQ(t3.mod, "APPROX");
  EXPECT_FALSE(t3.temporal_function);
  EXPECT_TRUE(t3.tid.empty());
}

TEST(MapSimpleTimex, ReferencesAndAnchorsAreTemporalFunctions) {
  Timex2 ref{.val = "FUTURE_REF"};
  EXPECT_TRUE(MapSimpleTimex(ref, TimeMLDocument{}).temporal_function);

  TimeMLDocument doc;
  doc.text = U"xxxxxxxxxx";
  doc.Add(Timex3{.span = {0, 2}, .value = "2001-03-20"});
  Timex2 anchored{.span = {4, 6}, .val = "P2W", .anchor_val = "2001-03-20",
                  .anchor_dir = AnchorDir::kBefore};
  const Timex3 t3 = MapSimpleTimex(anchored, doc);
  EXPECT_TRUE(t3.temporal_function);
  EXPECT_EQ(t3.anchor_time_id, "t1");
  anchored.anchor_val = "1999";
  EXPECT_FALSE(MapSimpleTimex(anchored, doc).anchor_time_id);
}

TEST(ConvertDocument, SimpleTimexIsCopied) {
  const Conversion c = Convert(
      U"The Yankees had just finished <TIMEX2 val=\"1998-10-02TEV\">a draining "
      U"evening</TIMEX2> with a 4-0 decision over the Rangers");
  ASSERT_EQ(c.timeml.timex3s.size(), 1u);
  EXPECT_EQ(Text(c.timeml, c.timeml.timex3s[0].span), "a draining evening");
  EXPECT_EQ(c.timeml.timex3s[0].type, TimexType::kTime);
  EXPECT_TRUE(c.timeml.events.empty());
  EXPECT_TRUE(c.timeml.signals.empty());
  EXPECT_TRUE(c.timeml.tlinks.empty());
  EXPECT_EQ(c.report.PathCount(ConversionPath::kSimple), 1u);
}

TEST(ConvertDocument, EventBasedTimexIsSplit) {
  const Conversion c =
      Convert(U"<TIMEX2 VAL=\"2012-03-20\">The Tuesday after the party</TIMEX2>");
  const TimeMLDocument& d = c.timeml;
  ASSERT_EQ(d.timex3s.size(), 1u);
  ASSERT_EQ(d.signals.size(), 1u);
  ASSERT_EQ(d.events.size(), 1u);
  ASSERT_EQ(d.tlinks.size(), 1u);
  EXPECT_EQ(Text(d, d.timex3s[0].span), "Tuesday");
  EXPECT_EQ(d.timex3s[0].tid, "t1");
  EXPECT_EQ(d.timex3s[0].value, "2012-03-20");
  EXPECT_EQ(Text(d, d.signals[0].span), "after");
  EXPECT_EQ(Text(d, d.events[0].span), "party");
  EXPECT_EQ(d.events[0].event_class, EventClass::kOccurrence);
  const TLink& l = d.tlinks[0];
  EXPECT_EQ(l.time_id, "t1");
  EXPECT_EQ(l.related_event_id, "e1");
  EXPECT_EQ(l.signal_id, "s1");
  EXPECT_EQ(l.rel_type, RelType::kAfter);
  EXPECT_EQ(c.report.PathCount(ConversionPath::kSignalled), 1u);
}

TEST(ConvertDocument, MonosemousSignalAndDependencyHead) {
  const Conversion c = Convert(
      U"<TIMEX2 VAL=\"P30Y\">the 30 years since Neil Armstrong walked on the "
      U"moon</TIMEX2>");
  const TimeMLDocument& d = c.timeml;
  ASSERT_EQ(d.timex3s.size(), 1u);
  EXPECT_EQ(Text(d, d.timex3s[0].span), "30 years");
  EXPECT_EQ(d.timex3s[0].type, TimexType::kDuration);
  ASSERT_EQ(d.signals.size(), 1u);
  EXPECT_EQ(Text(d, d.signals[0].span), "since");
  ASSERT_EQ(d.events.size(), 1u);
  EXPECT_EQ(Text(d, d.events[0].span), "walked");
}

TEST(ConvertDocument, NounEventHead) {
  const Conversion c =
      Convert(U"<TIMEX2 VAL=\"P90D\">90 days after their issue date</TIMEX2>");
  const TimeMLDocument& d = c.timeml;
  ASSERT_EQ(d.events.size(), 1u);
  EXPECT_EQ(Text(d, d.timex3s[0].span), "90 days");
  EXPECT_EQ(Text(d, d.signals[0].span), "after");
  EXPECT_EQ(Text(d, d.events[0].span), "issue");
}

TEST(ConvertDocument, TimexAfterSignalInvertsRelation) {
  const Conversion c =
      Convert(U"<TIMEX2 VAL=\"P3D\">the attack after three days</TIMEX2>");
  const TimeMLDocument& d = c.timeml;
  ASSERT_EQ(d.tlinks.size(), 1u);
  EXPECT_EQ(Text(d, d.timex3s[0].span), "three days");
  EXPECT_EQ(Text(d, d.events[0].span), "attack");
  EXPECT_EQ(d.tlinks[0].rel_type, RelType::kBefore);
}

TEST(ConvertDocument, EmptySignalMapLeavesLinksUntyped) {
  ConversionConfig config;
  config.signal_relation_map.clear();
  const Conversion c = Convert(
      U"<TIMEX2 VAL=\"2012-03-20\">The Tuesday after the party</TIMEX2>", config);
  ASSERT_EQ(c.timeml.tlinks.size(), 1u);
  EXPECT_FALSE(c.timeml.tlinks[0].rel_type);
  EXPECT_TRUE(Validate(c.timeml).empty());
}

TEST(ConvertDocument, TemporalNounAfterSignalIsNotAnEvent) {
  // "in" is followed only by a time, so the timex stays whole.
  const Conversion c = Convert(U"<TIMEX2 VAL=\"2001-06\">early in June</TIMEX2>");
  EXPECT_TRUE(c.timeml.events.empty());
  EXPECT_EQ(c.report.PathCount(ConversionPath::kSimple), 1u);
}

TEST(TransduceSignalled, DegenerateSplitFallsBackWithWarning) {
  const Document doc = ParseInline(U"<TIMEX2 VAL=\"2001\">the after party</TIMEX2>");
  TimeMLDocument out;
  out.text = doc.text();
  EXPECT_THROW(TransduceSignalled(doc.timexes()[0], out, ConversionConfig{},
                                  ConversionResources::Default()),
               DegenerateSplit);

  const Conversion c = ConvertDocument(doc);
  ASSERT_EQ(c.timeml.timex3s.size(), 1u);
  EXPECT_EQ(Text(c.timeml, c.timeml.timex3s[0].span), "the after party");
  ASSERT_EQ(c.report.warnings.size(), 1u);
  EXPECT_EQ(c.report.warnings[0].kind, "DegenerateSplit");
  EXPECT_TRUE(c.timeml.signals.empty());
}

TEST(SelectEventHead, HeuristicOracle) {
  HeuristicDependencyOracle oracle;
  auto head = [&](std::u32string_view phrase) {
    Chunk chunk;
    chunk.tokens = RuleTagger().Tag(phrase);
    return ToUtf8(chunk.tokens[SelectEventHead(chunk, oracle)].surface);
  };
  EXPECT_EQ(head(U"Neil Armstrong walked on the moon"), "walked");
  EXPECT_EQ(head(U"delivery"), "delivery");
  EXPECT_EQ(head(U"the termination notice 's delivery"), "delivery");
  EXPECT_EQ(head(U"had been running"), "running");
}

class FirstTokenOracle : public DependencyOracle {
 public:
  std::size_t Head(std::span<const TaggedToken>) const override { return 0; }
};

TEST(ConvertDocument, DependencyOracleIsPluggable) {
  ConversionResources resources = ConversionResources::Default();
  resources.dependency = std::make_shared<FirstTokenOracle>();
  const Conversion c = ConvertDocument(
      ParseInline(U"<TIMEX2 VAL=\"P30Y\">30 years since Neil Armstrong walked</TIMEX2>"),
      ConversionConfig{}, resources);
  ASSERT_EQ(c.timeml.events.size(), 1u);
  EXPECT_EQ(Text(c.timeml, c.timeml.events[0].span), "Neil");
}

TEST(ConvertDocument, NestedWeekWithTwoDays) {
  const Conversion c = Convert(
      U"before <TIMEX2 VAL=\"1999-W23\">the week of <TIMEX2 "
      U"VAL=\"1999-06-07\">the seventh</TIMEX2> until <TIMEX2 "
      U"VAL=\"1999-06-11\">the eleventh</TIMEX2> </TIMEX2>");
  const TimeMLDocument& d = c.timeml;
  ASSERT_EQ(d.timex3s.size(), 3u);
  EXPECT_EQ(Text(d, d.timex3s[0].span), "the week");
  EXPECT_EQ(d.timex3s[0].value, "1999-W23");
  EXPECT_EQ(d.timex3s[0].type, TimexType::kDate);
  EXPECT_EQ(Text(d, d.timex3s[1].span), "the seventh");
  EXPECT_EQ(d.timex3s[1].value, "1999-06-07");
  EXPECT_EQ(Text(d, d.timex3s[2].span), "the eleventh");
  EXPECT_EQ(d.timex3s[2].value, "1999-06-11");
  ASSERT_EQ(d.signals.size(), 2u);
  EXPECT_EQ(Text(d, d.signals[0].span), "of");
  EXPECT_EQ(Text(d, d.signals[1].span), "until");
  ASSERT_EQ(d.tlinks.size(), 2u);
  EXPECT_EQ(d.tlinks[0].time_id, "t2");
  EXPECT_EQ(d.tlinks[0].related_to_time, "t1");
  EXPECT_EQ(d.tlinks[0].signal_id, "s1");
  EXPECT_EQ(d.tlinks[0].rel_type, RelType::kIsIncluded);
  EXPECT_EQ(d.tlinks[1].time_id, "t3");
  EXPECT_EQ(d.tlinks[1].related_to_time, "t1");
  EXPECT_EQ(d.tlinks[1].signal_id, "s2");
  EXPECT_EQ(d.tlinks[1].rel_type, RelType::kIsIncluded);
  EXPECT_TRUE(c.report.dropped.empty());
  EXPECT_EQ(c.report.timex2_total, 3u);
  EXPECT_EQ(c.report.nested_outers, 1u);
  EXPECT_TRUE(Validate(d).empty());
}

TEST(ConvertDocument, NestedAmbiguousRelation) {
  const char32_t kMarkup[] =
      U"<TIMEX2 VAL=\"2001-SU\">the summer of <TIMEX2 "
      U"VAL=\"2001\">2001</TIMEX2></TIMEX2>";
  const Conversion strict = Convert(kMarkup);
  ASSERT_EQ(strict.timeml.tlinks.size(), 1u);
  EXPECT_FALSE(strict.timeml.tlinks[0].rel_type);

  ConversionConfig config;
  config.leave_ambiguous_untyped = false;
  const Conversion guessed = Convert(kMarkup, config);
  ASSERT_EQ(guessed.timeml.tlinks.size(), 1u);
  EXPECT_EQ(guessed.timeml.tlinks[0].rel_type, RelType::kIncludes);
}

TEST(ConvertDocument, OuterEqualToLeafDropsOuterValue) {
  const Conversion c = Convert(
      U"<TIMEX2 VAL=\"2001-03\"><TIMEX2 VAL=\"2001-03-20\">Tuesday</TIMEX2></TIMEX2>");
  ASSERT_EQ(c.timeml.timex3s.size(), 1u);
  EXPECT_EQ(c.timeml.timex3s[0].value, "2001-03-20");
  ASSERT_EQ(c.report.dropped.size(), 1u);
  EXPECT_EQ(c.report.dropped[0].val, "2001-03");
  EXPECT_EQ(c.report.timex3_emitted,
            c.report.timex2_total - c.report.dropped.size());
}

TEST(ConvertDocument, ResidueWithoutContentIsReported) {
  const Conversion c = Convert(
      U"<TIMEX2 VAL=\"2001-W12\"><TIMEX2 VAL=\"2001-03-19\">Monday</TIMEX2> and "
      U"<TIMEX2 VAL=\"2001-03-20\">Tuesday</TIMEX2></TIMEX2>");
  EXPECT_EQ(c.timeml.timex3s.size(), 2u);
  ASSERT_EQ(c.report.dropped.size(), 1u);
  EXPECT_EQ(c.report.dropped[0].val, "2001-W12");
  bool warned = false;
  for (const auto& w : c.report.warnings) warned |= w.kind == "NoResidueChunk";
  EXPECT_TRUE(warned);
  // Without an outer TIMEX3 the leaves are linked to each other.
  ASSERT_EQ(c.timeml.tlinks.size(), 1u);
  EXPECT_EQ(c.timeml.tlinks[0].rel_type, RelType::kBefore);
}

TEST(ConvertDocument, IntermediateValuesAreDropped) {
  const Conversion c = Convert(
      U"<TIMEX2 VAL=\"1999-W23\">the week of <TIMEX2 VAL=\"1999-06\">June "
      U"<TIMEX2 VAL=\"1999-06-07\">7</TIMEX2></TIMEX2></TIMEX2>");
  EXPECT_EQ(c.report.timex2_total, 3u);
  EXPECT_EQ(c.report.timex2_leaves, 1u);
  EXPECT_EQ(c.timeml.timex3s.size(), 2u);
  ASSERT_EQ(c.report.dropped.size(), 1u);
  EXPECT_EQ(c.report.dropped[0].val, "1999-06");
}

TEST(TrimLongTimex, LargestChunkWithMeasureWord) {
  const Conversion c = Convert(
      U"<TIMEX2 VAL=\"2001-04-09\">twenty days later than the termination "
      U"notice's delivery</TIMEX2>");
  ASSERT_EQ(c.timeml.timex3s.size(), 1u);
  EXPECT_EQ(Text(c.timeml, c.timeml.timex3s[0].span), "twenty days later");
  EXPECT_EQ(c.timeml.timex3s[0].value, "2001-04-09");
  EXPECT_EQ(c.report.PathCount(ConversionPath::kTrimmed), 1u);
}

TEST(TrimLongTimex, LeadingPrepositionPhrase) {
  const Conversion c = Convert(
      U"<TIMEX2 VAL=\"2000\">in the very early part of last fiscal year</TIMEX2>");
  ASSERT_EQ(c.timeml.timex3s.size(), 1u);
  EXPECT_EQ(Text(c.timeml, c.timeml.timex3s[0].span), "last fiscal year");
}

TEST(TrimLongTimex, FiveTokensAreLeftAlone) {
  const Conversion c =
      Convert(U"<TIMEX2 VAL=\"2000\">the very last fiscal year</TIMEX2>");
  EXPECT_EQ(Text(c.timeml, c.timeml.timex3s[0].span), "the very last fiscal year");
  EXPECT_EQ(c.report.PathCount(ConversionPath::kTrimmed), 0u);
}

// Flat constituents of fixed sizes.
class FixedConstituents : public ConstituentOracle {
 public:
  explicit FixedConstituents(std::vector<std::size_t> sizes) : sizes_(sizes) {}
  Constituent Parse(std::span<const TaggedToken> tokens) const override {
    Constituent root{0, tokens.size(), {}};
    std::size_t at = 0;
    for (std::size_t n : sizes_) {
      root.children.push_back({at, at + n, {}});
      at += n;
    }
    return root;
  }

 private:
  std::vector<std::size_t> sizes_;
};

TEST(TrimLongTimex, LeftmostAmongEqualSizes) {
  const std::u32string text = U"one day two days three weeks";
  auto tokens = RuleTagger().Tag(text);
  ConversionConfig config;
  EXPECT_EQ(TrimLongTimex(tokens, config, FixedConstituents({2, 2, 2})),
            (Span{0, 7}));
  EXPECT_EQ(TrimLongTimex(tokens, config, FixedConstituents({1, 3, 2})),
            (Span{4, 16}));
  config.trim_cutoff = 3;
  EXPECT_EQ(TrimLongTimex(tokens, config, FixedConstituents({1, 3, 2})),
            (Span{17, 28}));
}

TEST(TrimLongTimex, NoMeasureWordTakesLeftmostShortChunk) {
  auto tokens = RuleTagger().Tag(U"a b c d e f g");
  EXPECT_EQ(TrimLongTimex(tokens, ConversionConfig{}, FixedConstituents({3, 4})),
            (Span{0, 5}));
}

TEST(ConversionConfig, CutoffBelowTwoIsRejected) {
  ConversionConfig config;
  config.trim_cutoff = 1;
  EXPECT_THROW(config.Check(), std::invalid_argument);
  EXPECT_THROW(ConvertDocument(Document{}, config), std::invalid_argument);
}

TEST(ConvertDocument, EmptyDocument) {
  const Conversion c = ConvertDocument(Document{});
  EXPECT_EQ(c.timeml, TimeMLDocument{});
  EXPECT_EQ(c.report.timex2_total, 0u);
  EXPECT_TRUE(c.report.warnings.empty());
}

TEST(ConvertDocument, EmptyValueIsWarned) {
  const Conversion c = Convert(U"<TIMEX2 VAL=\"\">sometime</TIMEX2>");
  ASSERT_EQ(c.timeml.timex3s.size(), 1u);
  EXPECT_EQ(c.timeml.timex3s[0].value, "");
  ASSERT_EQ(c.report.warnings.size(), 1u);
  EXPECT_EQ(c.report.warnings[0].kind, "EmptyValue");
}

TEST(ConvertDocument, DatelineTimexIsCreationTime) {
  const Conversion c = Convert(
      U"<DATE_TIME><TIMEX2 VAL=\"2001-03-20\">03/20/2001</TIMEX2></DATE_TIME> "
      U"<TIMEX2 VAL=\"2001-03-19\">yesterday</TIMEX2>");
  ASSERT_EQ(c.timeml.timex3s.size(), 2u);
  EXPECT_EQ(c.timeml.timex3s[0].function_in_document,
            FunctionInDocument::kCreationTime);
  EXPECT_EQ(c.timeml.timex3s[1].function_in_document, FunctionInDocument::kNone);
}

TEST(ConversionReport, MergePoolsCounts) {
  ConversionReport a, b;
  a.timex2_total = 2;
  a.paths[ConversionPath::kSimple] = 2;
  b.timex2_total = 3;
  b.paths[ConversionPath::kSimple] = 1;
  b.paths[ConversionPath::kNested] = 1;
  b.dropped.push_back({{0, 1}, "x", "r"});
  a.Merge(b);
  EXPECT_EQ(a.timex2_total, 5u);
  EXPECT_EQ(a.PathCount(ConversionPath::kSimple), 3u);
  EXPECT_EQ(a.PathCount(ConversionPath::kNested), 1u);
  EXPECT_EQ(a.PathCount(ConversionPath::kTrimmed), 0u);
  EXPECT_EQ(a.dropped.size(), 1u);
}

TEST(ConversionResources, CustomLexicon) {
  const auto resources = ConversionResources::WithLexicon(
      SignalLexicon::Parse("later than\tmonosemous\t1\n"));
  const Conversion c = ConvertDocument(
      ParseInline(U"<TIMEX2 VAL=\"P20D\">twenty days later than the "
                  U"termination notice's delivery</TIMEX2>"),
      ConversionConfig{}, resources);
  EXPECT_EQ(c.report.PathCount(ConversionPath::kSignalled), 1u);
  ASSERT_EQ(c.timeml.signals.size(), 1u);
  EXPECT_EQ(Text(c.timeml, c.timeml.signals[0].span), "later than");
  EXPECT_EQ(Text(c.timeml, c.timeml.timex3s[0].span), "twenty days");
  EXPECT_EQ(Text(c.timeml, c.timeml.events[0].span), "delivery");
}

}  // namespace
}  // namespace t2t3
