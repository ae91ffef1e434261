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

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <unordered_map>

#include "markup.h"
#include "t2t3/errors.h"
#include "t2t3/ingest.h"
#include "t2t3/unicode.h"

namespace t2t3 {
namespace {

enum class Encoding { kUtf8, kUtf16Le, kUtf16Be, kUtf16, kLatin1, kCp1252 };

std::optional<Encoding> EncodingByName(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) {
    return c == '_' ? '-' : static_cast<char>(std::tolower(c));
  });
  if (name == "utf-8" || name == "utf8" || name == "ascii" ||
      name == "us-ascii")
    return Encoding::kUtf8;
  if (name == "utf-16le") return Encoding::kUtf16Le;
  if (name == "utf-16be") return Encoding::kUtf16Be;
  if (name == "utf-16" || name == "utf16") return Encoding::kUtf16;
  if (name == "latin-1" || name == "latin1" || name == "iso-8859-1" ||
      name == "iso8859-1" || name == "l1")
    return Encoding::kLatin1;
  if (name == "windows-1252" || name == "cp1252") return Encoding::kCp1252;
  return std::nullopt;
}

std::optional<std::u32string> DecodeUtf16(std::string_view bytes,
                                          bool little_endian) {
  if (bytes.size() % 2 != 0) return std::nullopt;
  std::u32string out;
  out.reserve(bytes.size() / 2);
  auto unit = [&](std::size_t i) -> char32_t {
    const auto a = static_cast<unsigned char>(bytes[i]);
    const auto b = static_cast<unsigned char>(bytes[i + 1]);
    return little_endian ? (char32_t(b) << 8 | a) : (char32_t(a) << 8 | b);
  };
  for (std::size_t i = 0; i < bytes.size(); i += 2) {
    const char32_t u = unit(i);
    if (u >= 0xD800 && u <= 0xDBFF) {
      if (i + 3 >= bytes.size()) return std::nullopt;
      const char32_t low = unit(i + 2);
      if (low < 0xDC00 || low > 0xDFFF) return std::nullopt;
      out += 0x10000 + ((u - 0xD800) << 10) + (low - 0xDC00);
      i += 2;
    } else if (u >= 0xDC00 && u <= 0xDFFF) {
      return std::nullopt;
    } else {
      out += u;
    }
  }
  return out;
}

std::u32string DecodeLatin1(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  for (char b : bytes) out += static_cast<unsigned char>(b);
  return out;
}

// 0x80..0x9F of windows-1252; 0 marks the five undefined positions.
constexpr std::array<char32_t, 32> kCp1252High{
    0x20AC, 0,      0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
    0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0,      0x017D, 0,
    0,      0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
    0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0,      0x017E, 0x0178};

std::u32string DecodeCp1252(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  for (char b : bytes) {
    const auto u = static_cast<unsigned char>(b);
    if (u >= 0x80 && u <= 0x9F) {
      if (kCp1252High[u - 0x80] != 0) out += kCp1252High[u - 0x80];
    } else {
      out += u;
    }
  }
  return out;
}

bool StartsWithBytes(std::string_view raw, std::string_view prefix) {
  return raw.substr(0, prefix.size()) == prefix;
}

std::optional<std::u32string> DecodeAs(Encoding encoding,
                                       std::string_view raw) {
  switch (encoding) {
    case Encoding::kUtf8:
      if (StartsWithBytes(raw, "\xEF\xBB\xBF")) raw.remove_prefix(3);
      return FromUtf8(raw);
    case Encoding::kUtf16Le:
      if (StartsWithBytes(raw, "\xFF\xFE")) raw.remove_prefix(2);
      return DecodeUtf16(raw, true);
    case Encoding::kUtf16Be:
      if (StartsWithBytes(raw, "\xFE\xFF")) raw.remove_prefix(2);
      return DecodeUtf16(raw, false);
    case Encoding::kUtf16: {
      if (StartsWithBytes(raw, "\xFF\xFE"))
        return DecodeUtf16(raw.substr(2), true);
      if (StartsWithBytes(raw, "\xFE\xFF"))
        return DecodeUtf16(raw.substr(2), false);
      // No BOM: pick the byte order whose high bytes are mostly zero.
      std::size_t zero_even = 0, zero_odd = 0;
      for (std::size_t i = 0; i < raw.size(); ++i)
        if (raw[i] == '\0') ++(i % 2 == 0 ? zero_even : zero_odd);
      return DecodeUtf16(raw, zero_odd >= zero_even);
    }
    case Encoding::kLatin1:
      return DecodeLatin1(raw);
    case Encoding::kCp1252:
      return DecodeCp1252(raw);
  }
  return std::nullopt;
}

std::u32string DecodeBytes(std::string_view raw,
                           const std::optional<std::string>& declared) {
  if (declared) {
    if (auto encoding = EncodingByName(*declared)) {
      if (auto text = DecodeAs(*encoding, raw)) return *std::move(text);
    }
  }
  if (StartsWithBytes(raw, "\xEF\xBB\xBF")) {
    raw.remove_prefix(3);
  } else if (StartsWithBytes(raw, "\xFF\xFE")) {
    if (auto text = DecodeUtf16(raw.substr(2), true)) return *std::move(text);
  } else if (StartsWithBytes(raw, "\xFE\xFF")) {
    if (auto text = DecodeUtf16(raw.substr(2), false)) return *std::move(text);
  }
  std::size_t dropped = 0, multibyte = 0;
  std::u32string text = DecodeUtf8Lenient(raw, &dropped, &multibyte);
  if (dropped == 0 || multibyte >= dropped) return text;
  return DecodeLatin1(raw);
}

const std::unordered_map<std::u32string, char32_t>& NamedEntities() {
  static const auto* table = [] {
    auto* m = new std::unordered_map<std::u32string, char32_t>;
    // HTML 4 Latin-1 names, U+00A0..U+00FF in order.
    static constexpr const char* kLatin1[] = {
        "nbsp",   "iexcl",  "cent",   "pound",  "curren", "yen",    "brvbar",
        "sect",   "uml",    "copy",   "ordf",   "laquo",  "not",    "shy",
        "reg",    "macr",   "deg",    "plusmn", "sup2",   "sup3",   "acute",
        "micro",  "para",   "middot", "cedil",  "sup1",   "ordm",   "raquo",
        "frac14", "frac12", "frac34", "iquest", "Agrave", "Aacute", "Acirc",
        "Atilde", "Auml",   "Aring",  "AElig",  "Ccedil", "Egrave", "Eacute",
        "Ecirc",  "Euml",   "Igrave", "Iacute", "Icirc",  "Iuml",   "ETH",
        "Ntilde", "Ograve", "Oacute", "Ocirc",  "Otilde", "Ouml",   "times",
        "Oslash", "Ugrave", "Uacute", "Ucirc",  "Uuml",   "Yacute", "THORN",
        "szlig",  "agrave", "aacute", "acirc",  "atilde", "auml",   "aring",
        "aelig",  "ccedil", "egrave", "eacute", "ecirc",  "euml",   "igrave",
        "iacute", "icirc",  "iuml",   "eth",    "ntilde", "ograve", "oacute",
        "ocirc",  "otilde", "ouml",   "divide", "oslash", "ugrave", "uacute",
        "ucirc",  "uuml",   "yacute", "thorn",  "yuml"};
    static_assert(std::size(kLatin1) == 96);
    for (std::size_t i = 0; i < std::size(kLatin1); ++i)
      (*m)[U32(kLatin1[i])] = static_cast<char32_t>(0xA0 + i);
    static constexpr std::pair<const char*, char32_t> kOthers[] = {
        {"quot", 0x22},     {"apos", 0x27},    {"OElig", 0x152},
        {"oelig", 0x153},   {"Scaron", 0x160}, {"scaron", 0x161},
        {"Yuml", 0x178},    {"fnof", 0x192},   {"circ", 0x2C6},
        {"tilde", 0x2DC},   {"ensp", 0x2002},  {"emsp", 0x2003},
        {"thinsp", 0x2009}, {"ndash", 0x2013}, {"mdash", 0x2014},
        {"lsquo", 0x2018},  {"rsquo", 0x2019}, {"sbquo", 0x201A},
        {"ldquo", 0x201C},  {"rdquo", 0x201D}, {"bdquo", 0x201E},
        {"dagger", 0x2020}, {"Dagger", 0x2021}, {"bull", 0x2022},
        {"hellip", 0x2026}, {"permil", 0x2030}, {"prime", 0x2032},
        {"Prime", 0x2033},  {"lsaquo", 0x2039}, {"rsaquo", 0x203A},
        {"euro", 0x20AC},   {"trade", 0x2122},
    };
    for (const auto& [name, c] : kOthers) (*m)[U32(name)] = c;
    return m;
  }();
  return *table;
}

bool IsMarkupSignificant(char32_t c) { return c == '<' || c == '>' || c == '&'; }

std::u32string ResolveEntities(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '&') {
      out += text[i];
      continue;
    }
    std::size_t j = i + 1;
    while (j < text.size() && j - i <= 32 &&
           (IsAlnum(text[j]) || text[j] == '#'))
      ++j;
    if (j >= text.size() || text[j] != ';' || j == i + 1) {
      out += text[i];
      continue;
    }
    const std::u32string_view body = text.substr(i + 1, j - i - 1);
    std::optional<char32_t> c;
    if (body[0] == '#') {
      c = internal::DecodeXmlEscape(body);
    } else {
      const auto& table = NamedEntities();
      auto it = table.find(std::u32string(body));
      if (it == table.end()) it = table.find(ToLower(body));
      if (it != table.end()) c = it->second;
      const std::u32string lower = ToLower(body);
      if (lower == U"lt") c = U'<';
      if (lower == U"gt") c = U'>';
      if (lower == U"amp") c = U'&';
    }
    if (c && IsMarkupSignificant(*c)) {
      out += *c == '<' ? U"&lt;" : *c == '>' ? U"&gt;" : U"&amp;";
    } else if (c) {
      out += *c;
    }
    // Unrecognised entities are dropped.
    i = j;
  }
  return out;
}

}  // namespace

std::u32string NormalizeEncoding(std::string_view raw,
                                 std::optional<std::string> declared) {
  if (raw.empty()) throw EmptyInput("no bytes to decode");
  return ResolveEntities(DecodeBytes(raw, declared));
}

}  // namespace t2t3
