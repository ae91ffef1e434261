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

#ifndef T2T3_ERRORS_H_
#define T2T3_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace t2t3 {

// Base class of every error thrown by the library. `kind()` is the stable
// short name used in manifests and reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string& message)
      : Error("EmptyInput", message) {}
};

// Crossing, unclosed or unmatched TIMEX2 tags. `offset` is the character
// offset in the markup where the problem was detected.
class MalformedMarkup : public Error {
 public:
  MalformedMarkup(const std::string& message, std::size_t offset)
      : Error("MalformedMarkup",
              message + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Annotation spans that partially overlap, escape their parent, or fall
// outside the text.
class SpanConflict : public Error {
 public:
  explicit SpanConflict(const std::string& message)
      : Error("SpanConflict", message) {}
};

class MalformedXml : public Error {
 public:
  MalformedXml(const std::string& message, std::size_t line, std::size_t column)
      : Error("MalformedXml", message + " (line " + std::to_string(line) +
                                  ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class TextMismatch : public Error {
 public:
  explicit TextMismatch(const std::string& message)
      : Error("TextMismatch", message) {}
};

class DegenerateSplit : public Error {
 public:
  explicit DegenerateSplit(const std::string& message)
      : Error("DegenerateSplit", message) {}
};

class NoResidueChunk : public Error {
 public:
  explicit NoResidueChunk(const std::string& message)
      : Error("NoResidueChunk", message) {}
};

// A TimeML document that fails validation was handed to an operation that
// requires a valid one.
class InvalidDocument : public Error {
 public:
  explicit InvalidDocument(const std::string& message)
      : Error("InvalidDocument", message) {}
};

class LexiconFormat : public Error {
 public:
  explicit LexiconFormat(const std::string& message)
      : Error("LexiconFormat", message) {}
};

}  // namespace t2t3

#endif  // T2T3_ERRORS_H_
