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

// Small UTF-8/UTF-32 helpers. All document text is held as UTF-32 so that
// offsets are counted in Unicode scalar values.

#ifndef T2T3_UNICODE_H_
#define T2T3_UNICODE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace t2t3 {

std::string ToUtf8(std::u32string_view text);

// Strict decode; nullopt on any ill-formed sequence.
std::optional<std::u32string> FromUtf8(std::string_view bytes);

// Decodes UTF-8, dropping every byte that does not start a well-formed
// sequence. `dropped` (if given) receives the number of dropped bytes and
// `multibyte` the number of well-formed sequences longer than one byte.
std::u32string DecodeUtf8Lenient(std::string_view bytes,
                                 std::size_t* dropped = nullptr,
                                 std::size_t* multibyte = nullptr);

// Convenience for literals and ASCII-only input; ill-formed bytes dropped.
std::u32string U32(std::string_view utf8);

bool IsSpace(char32_t c);
bool IsAlpha(char32_t c);
bool IsDigit(char32_t c);
bool IsAlnum(char32_t c);
bool IsPunct(char32_t c);

// Lowercases ASCII and Latin-1 uppercase letters; other characters pass.
char32_t ToLower(char32_t c);
std::u32string ToLower(std::u32string_view text);

// Strips leading and trailing whitespace.
std::u32string_view Trim(std::u32string_view text);

}  // namespace t2t3

#endif  // T2T3_UNICODE_H_
