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

#include "t2t3/unicode.h"

namespace t2t3 {
namespace {

// Length of the well-formed UTF-8 sequence starting at `pos`, or 0.
// Follows the well-formed byte sequence table of Unicode 15 (no overlongs,
// no surrogates, nothing above U+10FFFF).
std::size_t SequenceLength(std::string_view bytes, std::size_t pos,
                           char32_t* out) {
  auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(bytes[i]);
  };
  const unsigned char b0 = byte(pos);
  const std::size_t left = bytes.size() - pos;
  if (b0 < 0x80) {
    *out = b0;
    return 1;
  }
  auto cont = [&](std::size_t i, unsigned char lo = 0x80,
                  unsigned char hi = 0xBF) {
    return pos + i < bytes.size() && byte(pos + i) >= lo && byte(pos + i) <= hi;
  };
  if (b0 >= 0xC2 && b0 <= 0xDF) {
    if (!cont(1)) return 0;
    *out = (char32_t(b0 & 0x1F) << 6) | (byte(pos + 1) & 0x3F);
    return 2;
  }
  if (b0 >= 0xE0 && b0 <= 0xEF) {
    unsigned char lo = 0x80, hi = 0xBF;
    if (b0 == 0xE0) lo = 0xA0;
    if (b0 == 0xED) hi = 0x9F;
    if (left < 3 || !cont(1, lo, hi) || !cont(2)) return 0;
    *out = (char32_t(b0 & 0x0F) << 12) | (char32_t(byte(pos + 1) & 0x3F) << 6) |
           (byte(pos + 2) & 0x3F);
    return 3;
  }
  if (b0 >= 0xF0 && b0 <= 0xF4) {
    unsigned char lo = 0x80, hi = 0xBF;
    if (b0 == 0xF0) lo = 0x90;
    if (b0 == 0xF4) hi = 0x8F;
    if (left < 4 || !cont(1, lo, hi) || !cont(2) || !cont(3)) return 0;
    *out = (char32_t(b0 & 0x07) << 18) | (char32_t(byte(pos + 1) & 0x3F) << 12) |
           (char32_t(byte(pos + 2) & 0x3F) << 6) | (byte(pos + 3) & 0x3F);
    return 4;
  }
  return 0;
}

}  // namespace

std::string ToUtf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    if (c < 0x80) {
      out += static_cast<char>(c);
    } else if (c < 0x800) {
      out += static_cast<char>(0xC0 | (c >> 6));
      out += static_cast<char>(0x80 | (c & 0x3F));
    } else if (c < 0x10000) {
      if (c >= 0xD800 && c <= 0xDFFF) c = 0xFFFD;
      out += static_cast<char>(0xE0 | (c >> 12));
      out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (c & 0x3F));
    } else if (c <= 0x10FFFF) {
      out += static_cast<char>(0xF0 | (c >> 18));
      out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (c & 0x3F));
    }
  }
  return out;
}

std::optional<std::u32string> FromUtf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  for (std::size_t pos = 0; pos < bytes.size();) {
    char32_t c = 0;
    const std::size_t n = SequenceLength(bytes, pos, &c);
    if (n == 0) return std::nullopt;
    out += c;
    pos += n;
  }
  return out;
}

std::u32string DecodeUtf8Lenient(std::string_view bytes, std::size_t* dropped,
                                 std::size_t* multibyte) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t bad = 0, multi = 0;
  for (std::size_t pos = 0; pos < bytes.size();) {
    char32_t c = 0;
    const std::size_t n = SequenceLength(bytes, pos, &c);
    if (n == 0) {
      ++bad;
      ++pos;
      continue;
    }
    if (n > 1) ++multi;
    out += c;
    pos += n;
  }
  if (dropped) *dropped = bad;
  if (multibyte) *multibyte = multi;
  return out;
}

std::u32string U32(std::string_view utf8) { return DecodeUtf8Lenient(utf8); }

bool IsSpace(char32_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v' || c == 0xA0 || c == 0x2028 || c == 0x2029 ||
         (c >= 0x2000 && c <= 0x200A) || c == 0x3000 || c == 0x85;
}

bool IsDigit(char32_t c) { return c >= '0' && c <= '9'; }

bool IsAlpha(char32_t c) {
  if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return true;
  if (c < 0xC0) return false;
  if (c == 0xD7 || c == 0xF7) return false;
  // Everything above Latin-1 that is not whitespace or general punctuation
  // counts as a word character; good enough for tokenization.
  if (c >= 0x2000 && c <= 0x206F) return false;
  if (c >= 0x3000 && c <= 0x303F) return false;
  return !IsSpace(c);
}

bool IsAlnum(char32_t c) { return IsAlpha(c) || IsDigit(c); }

bool IsPunct(char32_t c) { return !IsAlnum(c) && !IsSpace(c); }

char32_t ToLower(char32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 32;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;
  return c;
}

std::u32string ToLower(std::u32string_view text) {
  std::u32string out(text);
  for (char32_t& c : out) c = ToLower(c);
  return out;
}

std::u32string_view Trim(std::u32string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && IsSpace(text[b])) ++b;
  while (e > b && IsSpace(text[e - 1])) --e;
  return text.substr(b, e - b);
}

}  // namespace t2t3
