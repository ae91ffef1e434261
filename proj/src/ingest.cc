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

#include "t2t3/ingest.h"

#include <algorithm>
#include <charconv>
#include <utility>

#include "markup.h"
#include "t2t3/errors.h"
#include "t2t3/unicode.h"

namespace t2t3 {
namespace {

using internal::EqualsIgnoreCase;
using internal::MarkupMode;
using internal::MarkupReader;
using internal::MarkupToken;

bool IsTimex2(const MarkupToken& token) { return token.NameIs(U"TIMEX2"); }

bool IsDateline(std::u32string_view name) {
  for (std::u32string_view tag :
       {U"DATE_TIME", U"DATETIME", U"DATELINE", U"DATE", U"DCT"})
    if (EqualsIgnoreCase(name, tag)) return true;
  return false;
}

bool IsTruthy(std::u32string_view value) {
  return EqualsIgnoreCase(value, U"YES") || EqualsIgnoreCase(value, U"TRUE") ||
         value == U"1";
}

std::string Upper(std::u32string_view name) {
  std::string out = ToUtf8(name);
  for (char& c : out)
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 32);
  return out;
}

// Copies TIMEX2 attributes; anything unrecognised goes to `extra`.
Timex2 Timex2FromTag(const MarkupToken& tag) {
  Timex2 t;
  for (const auto& [key, value] : tag.attributes) {
    const std::string name = Upper(key);
    std::string v = ToUtf8(value);
    if (name == "VAL") {
      t.val = std::move(v);
    } else if (name == "SET") {
      t.set = IsTruthy(value);
    } else if (name == "MOD") {
      t.mod = std::move(v);
    } else if (name == "ANCHOR_VAL") {
      t.anchor_val = std::move(v);
    } else if (name == "ANCHOR_DIR") {
      t.anchor_dir = ParseAnchorDir(v);
      if (!t.anchor_dir) t.extra[name] = std::move(v);
    } else if (name == "ID") {
      t.source_id = std::move(v);
    } else {
      t.extra[name] = std::move(v);
    }
  }
  return t;
}

struct OpenTimex {
  Timex2 timex;
  std::size_t markup_offset;
  std::size_t serial;
  bool in_dateline;
};

struct OpenElement {
  std::u32string name;
  // TIMEX2 nesting at the moment the element opened; must be the same when
  // it closes or the two cross.
  std::size_t timex_depth;
  std::size_t timex_serial;
};

std::size_t ParseOffset(const std::u32string* value, const char* what) {
  if (!value) throw SpanConflict(std::string("charseq without ") + what);
  const std::string s = ToUtf8(*value);
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw SpanConflict(std::string("bad charseq ") + what + " '" + s + "'");
  return n;
}

}  // namespace

Document ParseInline(std::u32string_view markup, const InlineOptions& options) {
  MarkupReader reader(markup, MarkupMode::kLenient);
  std::u32string text;
  std::vector<Timex2> roots;
  std::vector<OpenTimex> timexes;
  std::vector<OpenElement> elements;
  std::size_t next_serial = 1;
  std::optional<std::string> dct;
  std::optional<Span> dct_span;
  std::optional<std::string> doc_id;
  std::optional<std::size_t> docno_start;

  auto serial = [&] { return timexes.empty() ? 0 : timexes.back().serial; };
  auto in_dateline = [&] {
    return std::any_of(elements.begin(), elements.end(),
                       [](const OpenElement& e) { return IsDateline(e.name); });
  };

  while (auto token = reader.Next()) {
    switch (token->kind) {
      case MarkupToken::kText:
        text += token->text;
        break;
      case MarkupToken::kEmptyTag:
        // A TIMEX2 with no extent annotates nothing.
        break;
      case MarkupToken::kStartTag:
        if (IsTimex2(*token)) {
          Timex2 t = Timex2FromTag(*token);
          t.span.start = text.size();
          timexes.push_back(OpenTimex{std::move(t), token->offset,
                                      next_serial++,
                                      timexes.empty() && in_dateline()});
        } else {
          if ((token->NameIs(U"DOCNO") || token->NameIs(U"DOCID")) &&
              !doc_id)
            docno_start = text.size();
          elements.push_back(
              OpenElement{token->name, timexes.size(), serial()});
        }
        break;
      case MarkupToken::kEndTag:
        if (IsTimex2(*token)) {
          if (timexes.empty())
            throw MalformedMarkup("</TIMEX2> without an open TIMEX2",
                                  token->offset);
          OpenTimex open = std::move(timexes.back());
          timexes.pop_back();
          open.timex.span.end = text.size();
          if (open.in_dateline && !dct) {
            dct = open.timex.val;
            dct_span = open.timex.span;
          }
          if (timexes.empty()) {
            roots.push_back(std::move(open.timex));
          } else {
            timexes.back().timex.children.push_back(std::move(open.timex));
          }
          break;
        }
        for (std::size_t i = elements.size(); i-- > 0;) {
          if (!EqualsIgnoreCase(elements[i].name, token->name)) continue;
          if (elements[i].timex_depth != timexes.size() ||
              elements[i].timex_serial != serial())
            throw MalformedMarkup(
                "<" + ToUtf8(token->name) + "> crosses a TIMEX2 element",
                token->offset);
          if ((token->NameIs(U"DOCNO") || token->NameIs(U"DOCID")) &&
              docno_start && !doc_id) {
            const auto id = Trim(std::u32string_view(text).substr(*docno_start));
            if (!id.empty()) doc_id = ToUtf8(id);
          }
          elements.resize(i);
          break;
        }
        break;
    }
  }
  if (!timexes.empty())
    throw MalformedMarkup("unclosed <TIMEX2>", timexes.back().markup_offset);

  if (!dct) dct = options.dct;
  return Document(std::move(text), std::move(roots),
                  doc_id.value_or(options.doc_id), std::move(dct), dct_span);
}

StandoffFile ParseStandoff(std::u32string_view xml) {
  MarkupReader reader(xml, MarkupMode::kLenient);
  StandoffFile file;
  std::optional<StandoffRecord> record;
  std::optional<StandoffMention> mention;
  bool in_charseq = false;
  std::u32string charseq_text;

  while (auto token = reader.Next()) {
    const bool start = token->kind == MarkupToken::kStartTag ||
                       token->kind == MarkupToken::kEmptyTag;
    if (token->kind == MarkupToken::kText) {
      if (in_charseq) charseq_text += token->text;
      continue;
    }
    if (start && token->NameIs(U"document") && file.doc_id.empty()) {
      if (const auto* id = token->Attribute(U"DOCID")) file.doc_id = ToUtf8(*id);
    } else if (start && token->NameIs(U"timex2")) {
      record.emplace();
      for (const auto& [key, value] : token->attributes) {
        const std::string name = Upper(key);
        if (name == "ID") record->record_id = ToUtf8(value);
        if (name == "VAL") record->val = ToUtf8(value);
        if (name == "SET") record->set = IsTruthy(value);
        if (name == "MOD") record->mod = ToUtf8(value);
        if (name == "ANCHOR_VAL") record->anchor_val = ToUtf8(value);
        if (name == "ANCHOR_DIR") record->anchor_dir = ParseAnchorDir(ToUtf8(value));
      }
      if (token->kind == MarkupToken::kEmptyTag) {
        file.records.push_back(std::move(*record));
        record.reset();
      }
    } else if (token->kind == MarkupToken::kEndTag && token->NameIs(U"timex2")) {
      if (record) file.records.push_back(std::move(*record));
      record.reset();
    } else if (start && token->NameIs(U"timex2_mention") && record) {
      mention.emplace();
      if (const auto* id = token->Attribute(U"ID")) mention->id = ToUtf8(*id);
    } else if (token->kind == MarkupToken::kEndTag &&
               token->NameIs(U"timex2_mention")) {
      if (record && mention) record->mentions.push_back(std::move(*mention));
      mention.reset();
    } else if (start && token->NameIs(U"charseq") && mention) {
      const std::size_t begin = ParseOffset(token->Attribute(U"START"), "START");
      const std::size_t last = ParseOffset(token->Attribute(U"END"), "END");
      if (last < begin)
        throw SpanConflict("charseq END before START at " +
                           std::to_string(begin));
      mention->span = Span{begin, last + 1};
      in_charseq = token->kind == MarkupToken::kStartTag;
      charseq_text.clear();
    } else if (token->kind == MarkupToken::kEndTag && token->NameIs(U"charseq")) {
      if (in_charseq && mention) mention->text = charseq_text;
      in_charseq = false;
    }
  }
  return file;
}

Document MergeStandoff(std::u32string source,
                       const std::vector<StandoffRecord>& records,
                       const InlineOptions& options) {
  struct Node {
    Timex2 timex;
    std::vector<std::size_t> children;
  };
  std::vector<Node> nodes;
  for (const StandoffRecord& record : records) {
    for (const StandoffMention& mention : record.mentions) {
      if (mention.span.end > source.size() ||
          mention.span.start >= mention.span.end)
        throw SpanConflict("mention " + mention.id + " span [" +
                           std::to_string(mention.span.start) + "," +
                           std::to_string(mention.span.end) +
                           ") does not fit the source text");
      if (mention.text &&
          std::u32string_view(source).substr(mention.span.start,
                                             mention.span.length()) !=
              *mention.text)
        throw SpanConflict("mention " + mention.id +
                           " text disagrees with the source at offset " +
                           std::to_string(mention.span.start));
      Timex2 t;
      t.span = mention.span;
      t.val = record.val;
      t.set = record.set;
      t.mod = record.mod;
      t.anchor_val = record.anchor_val;
      t.anchor_dir = record.anchor_dir;
      t.source_id = mention.id.empty() ? record.record_id : mention.id;
      nodes.push_back(Node{std::move(t), {}});
    }
  }

  std::vector<std::size_t> order(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Span& x = nodes[a].timex.span;
    const Span& y = nodes[b].timex.span;
    if (x.start != y.start) return x.start < y.start;
    return x.end > y.end;
  });

  std::vector<std::size_t> roots;
  std::vector<std::size_t> stack;
  for (std::size_t index : order) {
    const Span& span = nodes[index].timex.span;
    while (!stack.empty() && !nodes[stack.back()].timex.span.Contains(span)) {
      if (nodes[stack.back()].timex.span.Overlaps(span))
        throw SpanConflict("mentions " + *nodes[stack.back()].timex.source_id +
                           " and " + *nodes[index].timex.source_id +
                           " partially overlap");
      stack.pop_back();
    }
    if (stack.empty()) {
      roots.push_back(index);
    } else {
      nodes[stack.back()].children.push_back(index);
    }
    stack.push_back(index);
  }

  auto build = [&](auto&& self, std::size_t index) -> Timex2 {
    Timex2 t = std::move(nodes[index].timex);
    for (std::size_t child : nodes[index].children)
      t.children.push_back(self(self, child));
    return t;
  };
  std::vector<Timex2> forest;
  for (std::size_t root : roots) forest.push_back(build(build, root));
  return Document(std::move(source), std::move(forest), options.doc_id,
                  options.dct);
}

}  // namespace t2t3
