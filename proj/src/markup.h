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

// Pull tokenizer for SGML-ish and XML markup over UTF-32 text. Internal to
// the library.

#ifndef T2T3_SRC_MARKUP_H_
#define T2T3_SRC_MARKUP_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace t2t3::internal {

enum class MarkupMode {
  // Legacy corpora: unquoted attribute values, stray '<' and '&' as text.
  kLenient,
  // Well-formed XML required; violations throw MalformedXml.
  kStrict,
};

struct MarkupToken {
  enum Kind { kText, kStartTag, kEndTag, kEmptyTag };

  Kind kind = kText;
  // Character data with the XML escapes decoded (kText only).
  std::u32string text;
  // Tag name exactly as written.
  std::u32string name;
  std::vector<std::pair<std::u32string, std::u32string>> attributes;
  // Offset of the first character of the token in the source.
  std::size_t offset = 0;

  // Case-insensitive attribute lookup.
  const std::u32string* Attribute(std::u32string_view attr_name) const;
  bool NameIs(std::u32string_view other) const;  // case-insensitive
};

class MarkupReader {
 public:
  MarkupReader(std::u32string_view source, MarkupMode mode)
      : source_(source), mode_(mode) {}

  // Next text run or tag; comments, processing instructions, doctype and
  // other declarations are skipped. nullopt at end of input.
  std::optional<MarkupToken> Next();

  std::size_t position() const { return pos_; }

  // Throws MalformedXml located at `offset`.
  [[noreturn]] void Fail(const std::string& message, std::size_t offset) const;

 private:
  bool StartsWith(std::u32string_view s) const;
  bool SkipSpecial();
  std::optional<MarkupToken> ReadTag();
  void ReadText(MarkupToken& token);
  // Decodes one escape starting at pos_ (which points at '&') and appends
  // it to `out`. Returns false if it is not a recognised escape.
  bool DecodeEscape(std::u32string& out, std::size_t* consumed) const;
  std::u32string DecodeAttribute(std::u32string_view raw,
                                 std::size_t offset) const;

  std::u32string_view source_;
  MarkupMode mode_;
  std::size_t pos_ = 0;
};

// Decodes an XML escape body such as "amp", "#38" or "#x26". nullopt when
// not recognised.
std::optional<char32_t> DecodeXmlEscape(std::u32string_view body);

bool EqualsIgnoreCase(std::u32string_view a, std::u32string_view b);

// Line and column (1-based) of `offset` in `source`.
std::pair<std::size_t, std::size_t> LineColumn(std::u32string_view source,
                                               std::size_t offset);

}  // namespace t2t3::internal

#endif  // T2T3_SRC_MARKUP_H_
