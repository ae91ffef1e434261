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

#include "markup.h"

#include "t2t3/errors.h"
#include "t2t3/unicode.h"

namespace t2t3::internal {
namespace {

bool IsNameStart(char32_t c) { return IsAlpha(c) || c == '_' || c == ':'; }

bool IsNameChar(char32_t c) {
  return IsAlnum(c) || c == '_' || c == ':' || c == '-' || c == '.';
}

}  // namespace

bool EqualsIgnoreCase(std::u32string_view a, std::u32string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (ToLower(a[i]) != ToLower(b[i])) return false;
  return true;
}

std::pair<std::size_t, std::size_t> LineColumn(std::u32string_view source,
                                               std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < source.size(); ++i) {
    if (source[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::optional<char32_t> DecodeXmlEscape(std::u32string_view body) {
  if (body == U"amp") return U'&';
  if (body == U"lt") return U'<';
  if (body == U"gt") return U'>';
  if (body == U"quot") return U'"';
  if (body == U"apos") return U'\'';
  if (body.size() < 2 || body[0] != '#') return std::nullopt;
  char32_t value = 0;
  const bool hex = body[1] == 'x' || body[1] == 'X';
  const std::size_t first = hex ? 2 : 1;
  if (first >= body.size()) return std::nullopt;
  for (std::size_t i = first; i < body.size(); ++i) {
    const char32_t c = body[i];
    unsigned digit;
    if (c >= '0' && c <= '9') {
      digit = c - '0';
    } else if (hex && c >= 'a' && c <= 'f') {
      digit = c - 'a' + 10;
    } else if (hex && c >= 'A' && c <= 'F') {
      digit = c - 'A' + 10;
    } else {
      return std::nullopt;
    }
    value = value * (hex ? 16 : 10) + digit;
    if (value > 0x10FFFF) return std::nullopt;
  }
  if (value == 0 || (value >= 0xD800 && value <= 0xDFFF)) return std::nullopt;
  return value;
}

const std::u32string* MarkupToken::Attribute(
    std::u32string_view attr_name) const {
  for (const auto& [key, value] : attributes)
    if (EqualsIgnoreCase(key, attr_name)) return &value;
  return nullptr;
}

bool MarkupToken::NameIs(std::u32string_view other) const {
  return EqualsIgnoreCase(name, other);
}

void MarkupReader::Fail(const std::string& message, std::size_t offset) const {
  const auto [line, column] = LineColumn(source_, offset);
  throw MalformedXml(message, line, column);
}

bool MarkupReader::StartsWith(std::u32string_view s) const {
  return source_.substr(pos_, s.size()) == s;
}

bool MarkupReader::DecodeEscape(std::u32string& out,
                                std::size_t* consumed) const {
  const std::size_t semi = source_.find(';', pos_ + 1);
  if (semi == std::u32string_view::npos || semi - pos_ > 12) return false;
  const auto decoded = DecodeXmlEscape(source_.substr(pos_ + 1, semi - pos_ - 1));
  if (!decoded) return false;
  out += *decoded;
  *consumed = semi - pos_ + 1;
  return true;
}

std::u32string MarkupReader::DecodeAttribute(std::u32string_view raw,
                                             std::size_t offset) const {
  std::u32string out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '&') {
      const std::size_t semi = raw.find(';', i + 1);
      if (semi != std::u32string_view::npos) {
        if (auto c = DecodeXmlEscape(raw.substr(i + 1, semi - i - 1))) {
          out += *c;
          i = semi;
          continue;
        }
      }
      if (mode_ == MarkupMode::kStrict)
        Fail("invalid entity reference in attribute value", offset + i);
    } else if (raw[i] == '<' && mode_ == MarkupMode::kStrict) {
      Fail("'<' in attribute value", offset + i);
    }
    out += raw[i];
  }
  return out;
}

// Skips a comment, processing instruction or declaration at pos_. CDATA
// sections are skipped whole as declarations; their content is dropped.
bool MarkupReader::SkipSpecial() {
  auto skip_to = [&](std::u32string_view terminator, const char* what) {
    const std::size_t end = source_.find(terminator, pos_);
    if (end == std::u32string_view::npos) {
      if (mode_ == MarkupMode::kStrict)
        Fail(std::string("unterminated ") + what, pos_);
      pos_ = source_.size();
    } else {
      pos_ = end + terminator.size();
    }
  };
  if (StartsWith(U"<!--")) {
    skip_to(U"-->", "comment");
    return true;
  }
  if (StartsWith(U"<?")) {
    skip_to(U"?>", "processing instruction");
    return true;
  }
  if (StartsWith(U"<!") && pos_ + 2 < source_.size() &&
      (IsAlpha(source_[pos_ + 2]) || source_[pos_ + 2] == '[')) {
    // <!DOCTYPE ...> possibly with an internal subset in brackets.
    int depth = 0;
    for (std::size_t i = pos_ + 2; i < source_.size(); ++i) {
      if (source_[i] == '[') ++depth;
      if (source_[i] == ']') --depth;
      if (source_[i] == '>' && depth <= 0) {
        pos_ = i + 1;
        return true;
      }
    }
    if (mode_ == MarkupMode::kStrict) Fail("unterminated declaration", pos_);
    pos_ = source_.size();
    return true;
  }
  return false;
}

std::optional<MarkupToken> MarkupReader::ReadTag() {
  const std::size_t start = pos_;
  const bool strict = mode_ == MarkupMode::kStrict;
  auto fail = [&](const std::string& message,
                  std::size_t at) -> std::optional<MarkupToken> {
    if (strict) Fail(message, at);
    pos_ = start;
    return std::nullopt;
  };
  auto skip_space = [&] {
    while (pos_ < source_.size() && IsSpace(source_[pos_])) ++pos_;
  };

  MarkupToken token;
  token.offset = start;
  ++pos_;  // '<'
  token.kind = MarkupToken::kStartTag;
  if (pos_ < source_.size() && source_[pos_] == '/') {
    token.kind = MarkupToken::kEndTag;
    ++pos_;
  }
  if (pos_ >= source_.size() || !IsNameStart(source_[pos_]))
    return fail("expected a tag name", pos_);
  const std::size_t name_start = pos_;
  while (pos_ < source_.size() && IsNameChar(source_[pos_])) ++pos_;
  token.name = std::u32string(source_.substr(name_start, pos_ - name_start));

  while (true) {
    skip_space();
    if (pos_ >= source_.size()) return fail("unterminated tag", start);
    const char32_t c = source_[pos_];
    if (c == '>') {
      ++pos_;
      return token;
    }
    if (c == '/' && pos_ + 1 < source_.size() && source_[pos_ + 1] == '>') {
      if (token.kind == MarkupToken::kEndTag)
        return fail("malformed end tag", pos_);
      token.kind = MarkupToken::kEmptyTag;
      pos_ += 2;
      return token;
    }
    if (c == '<') return fail("'<' inside a tag", pos_);
    if (token.kind == MarkupToken::kEndTag)
      return fail("attributes on an end tag", pos_);

    const std::size_t attr_start = pos_;
    if (strict && !IsNameStart(c)) return fail("bad attribute name", pos_);
    while (pos_ < source_.size() && !IsSpace(source_[pos_]) &&
           source_[pos_] != '=' && source_[pos_] != '>' &&
           source_[pos_] != '<' &&
           !(source_[pos_] == '/' && pos_ + 1 < source_.size() &&
             source_[pos_ + 1] == '>'))
      ++pos_;
    std::u32string attr_name(source_.substr(attr_start, pos_ - attr_start));
    if (attr_name.empty()) return fail("bad attribute name", pos_);
    skip_space();
    std::u32string value;
    if (pos_ < source_.size() && source_[pos_] == '=') {
      ++pos_;
      skip_space();
      if (pos_ >= source_.size()) return fail("unterminated tag", start);
      const char32_t quote = source_[pos_];
      if (quote == '"' || quote == '\'') {
        const std::size_t close = source_.find(quote, pos_ + 1);
        if (close == std::u32string_view::npos)
          return fail("unterminated attribute value", pos_);
        value = DecodeAttribute(source_.substr(pos_ + 1, close - pos_ - 1),
                                pos_ + 1);
        pos_ = close + 1;
      } else {
        if (strict) return fail("unquoted attribute value", pos_);
        const std::size_t value_start = pos_;
        while (pos_ < source_.size() && !IsSpace(source_[pos_]) &&
               source_[pos_] != '>' && source_[pos_] != '<')
          ++pos_;
        value = DecodeAttribute(
            source_.substr(value_start, pos_ - value_start), value_start);
      }
    } else if (strict) {
      return fail("attribute without a value", pos_);
    }
    if (strict && token.Attribute(attr_name))
      return fail("duplicate attribute", attr_start);
    token.attributes.emplace_back(std::move(attr_name), std::move(value));
  }
}

void MarkupReader::ReadText(MarkupToken& token) {
  token.kind = MarkupToken::kText;
  token.offset = pos_;
  bool first = true;
  while (pos_ < source_.size()) {
    const char32_t c = source_[pos_];
    if (c == '<' && !first) {
      if (mode_ == MarkupMode::kStrict) break;
      // Lenient: only something that looks like markup ends the run.
      if (pos_ + 1 < source_.size()) {
        const char32_t n = source_[pos_ + 1];
        if (IsNameStart(n) || n == '/' || n == '!' || n == '?') break;
      }
    }
    first = false;
    if (c == '&') {
      std::size_t consumed = 0;
      if (DecodeEscape(token.text, &consumed)) {
        pos_ += consumed;
        continue;
      }
      if (mode_ == MarkupMode::kStrict)
        Fail("invalid or unescaped '&'", pos_);
    } else if (c == '<' && mode_ == MarkupMode::kStrict) {
      Fail("unescaped '<'", pos_);
    } else if (c == '>' && mode_ == MarkupMode::kStrict &&
               pos_ >= 2 && source_[pos_ - 1] == ']' &&
               source_[pos_ - 2] == ']') {
      Fail("']]>' in character data", pos_);
    }
    token.text += c;
    ++pos_;
  }
}

std::optional<MarkupToken> MarkupReader::Next() {
  while (pos_ < source_.size()) {
    if (source_[pos_] == '<') {
      if (SkipSpecial()) continue;
      const bool looks_like_tag =
          pos_ + 1 < source_.size() &&
          (IsNameStart(source_[pos_ + 1]) || source_[pos_ + 1] == '/');
      if (looks_like_tag) {
        if (auto tag = ReadTag()) return tag;
      } else if (mode_ == MarkupMode::kStrict) {
        Fail("unescaped '<'", pos_);
      }
    }
    MarkupToken text;
    ReadText(text);
    return text;
  }
  return std::nullopt;
}

}  // namespace t2t3::internal
