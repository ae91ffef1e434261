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

// TimeML output: serialization, parsing and validation.

#ifndef T2T3_TIMEML_H_
#define T2T3_TIMEML_H_

#include <string>
#include <string_view>
#include <vector>

#include "t2t3/model.h"

namespace t2t3 {

enum class ViolationCode {
  kDupId,
  kDanglingRef,
  kSpanOverlap,
  kBadAttr,
  kMalformedXml,
  kEmptyValue,
};

// "DUP_ID", "DANGLING_REF", ...
std::string_view ViolationCodeName(ViolationCode code);

struct Violation {
  ViolationCode code = ViolationCode::kBadAttr;
  // The offending ID: the duplicated one, the missing reference target, or
  // the element with the bad attribute. Empty for MALFORMED_XML.
  std::string element_id;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Checks IDs (prefix, uniqueness), references, spans (inside the text,
// nonempty, pairwise disjoint across TIMEX3, EVENT and SIGNAL), attribute
// enumerations, nonempty TIMEX3 values, that each TLINK has exactly one
// source and one target, and that all text is representable in XML 1.0.
std::vector<Violation> Validate(const TimeMLDocument& doc);

// UTF-8 TimeML: an XML declaration, then a <TimeML> root holding the text
// with inline TIMEX3, EVENT and SIGNAL elements followed by one TLINK per
// line. Throws InvalidDocument when Validate reports anything.
std::string Serialize(const TimeMLDocument& doc);

// Reads TimeML (UTF-8). The <TimeML> root is optional so fragments can be
// read. Unknown elements are dropped and their text kept; MAKEINSTANCE
// instance IDs on TLINKs are resolved to event IDs. Throws MalformedXml
// for ill-formed XML and for attribute values outside their enumeration.
TimeMLDocument ParseTimeML(std::string_view xml, std::string doc_id = {});

// Full check of serialized TimeML: well-formedness (MALFORMED_XML), then the
// attribute schema (BAD_ATTR), then the consistency rules of Validate.
std::vector<Violation> ValidateSerialized(std::string_view xml);

// One "code<TAB>id<TAB>message" line per violation.
std::string FormatViolations(const std::vector<Violation>& violations);

}  // namespace t2t3

#endif  // T2T3_TIMEML_H_
