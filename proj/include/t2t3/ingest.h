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

// Reading TIMEX2 corpora: byte decoding, inline <TIMEX2> markup, and ACE
// style standoff annotations merged onto their source text.

#ifndef T2T3_INGEST_H_
#define T2T3_INGEST_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "t2t3/model.h"

namespace t2t3 {

// Decodes raw bytes to text. Tries the declared encoding, then a byte order
// mark (UTF-8, UTF-16LE/BE), then UTF-8, then Latin-1. In the UTF-8 step
// ill-formed bytes are dropped as long as well-formed multi-byte sequences
// outnumber them; otherwise the input is taken to be Latin-1.
//
// Character entities are resolved afterwards: HTML/Latin-1 names and numeric
// references become characters, unknown names are removed. The escapes for
// '<', '>' and '&' are left in place so that they cannot forge markup;
// ParseInline decodes them.
//
// Throws EmptyInput for empty input.
std::u32string NormalizeEncoding(std::string_view raw,
                                 std::optional<std::string> declared = {});

struct InlineOptions {
  // Used when the markup carries no <DOCNO>/<DOCID>.
  std::string doc_id;
  // Used when no TIMEX2 sits inside a dateline element.
  std::optional<std::string> dct;
};

// Parses text with inline <TIMEX2> markup. All other tags are stripped and
// their content kept. Tag and attribute names are case-insensitive and
// attribute values may be unquoted. A TIMEX2 inside a DATE_TIME, DATETIME,
// DATELINE, DATE or DCT element supplies the creation time.
//
// Throws MalformedMarkup for unclosed or unmatched TIMEX2 tags and for
// TIMEX2 elements that cross another element.
Document ParseInline(std::u32string_view markup,
                     const InlineOptions& options = {});

struct StandoffMention {
  std::string id;
  Span span;
  // Annotated text as recorded in the standoff file, when present.
  std::optional<std::u32string> text;
};

struct StandoffRecord {
  std::string record_id;
  std::string val;
  bool set = false;
  std::optional<std::string> mod;
  std::optional<std::string> anchor_val;
  std::optional<AnchorDir> anchor_dir;
  std::vector<StandoffMention> mentions;
};

struct StandoffFile {
  std::string doc_id;
  std::vector<StandoffRecord> records;
};

// Reads timex2 / timex2_mention / extent / charseq elements. charseq END
// is inclusive in these files and becomes an exclusive span end here.
StandoffFile ParseStandoff(std::u32string_view xml);

// One TIMEX2 per mention, carrying its record's attributes. Contained
// mentions nest. Throws SpanConflict on partial overlap, on spans outside
// `source`, and when a mention's recorded text disagrees with `source`.
Document MergeStandoff(std::u32string source,
                       const std::vector<StandoffRecord>& records,
                       const InlineOptions& options = {});

}  // namespace t2t3

#endif  // T2T3_INGEST_H_
