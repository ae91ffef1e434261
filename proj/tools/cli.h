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

// Command-line front end: convert, stats, score and validate.

#ifndef T2T3_TOOLS_CLI_H_
#define T2T3_TOOLS_CLI_H_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "t2t3/transducer.h"

namespace t2t3::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

enum class InputFormat { kInline, kStandoff };

struct ConvertOptions {
  std::vector<std::filesystem::path> inputs;
  InputFormat format = InputFormat::kInline;
  std::filesystem::path out_dir;
  std::optional<std::string> dct;
  std::size_t trim_cutoff = 6;
  std::optional<std::filesystem::path> signal_lexicon;
  bool untyped_tlinks = false;
  unsigned jobs = 1;
};

// Outcome for one source document, as written to the manifest.
struct DocumentOutcome {
  std::string name;  // output stem
  std::filesystem::path input;
  bool converted = false;
  std::string reason;  // "Kind: message" when not converted
  std::string timeml;  // serialized output when converted
  std::string violations_tsv;
  ConversionReport report;
};

// Converts every input document. Writes <stem>.tml (or, for documents that
// fail validation, <stem>.violations.tsv) and manifest.jsonl into
// `options.out_dir` and prints a summary to `out`. Returns kExitFailure if
// any document failed.
int Convert(const ConvertOptions& options, std::ostream& out, std::ostream& err);

// Converts one document without writing anything.
DocumentOutcome ConvertOne(const std::filesystem::path& input,
                           const ConvertOptions& options,
                           const ConversionConfig& config,
                           const ConversionResources& resources);

// The manifest line for an outcome (no trailing newline).
std::string ManifestLine(const DocumentOutcome& outcome);

// Per-corpus TIMEX3 type counts of .tml files. Each directory argument is
// one corpus; file arguments are pooled into a corpus named after their
// directory.
int Stats(const std::vector<std::filesystem::path>& inputs, std::ostream& out,
          std::ostream& err);

enum class ScoreSelection { kBoth, kEntity, kToken };

// Scores .tml files in `sys_dir` against same-named files in `gold_dir`.
int Score(const std::filesystem::path& gold_dir,
          const std::filesystem::path& sys_dir, ScoreSelection selection,
          bool tsv, std::ostream& out, std::ostream& err);

// Prints "file<TAB>code<TAB>id<TAB>message" for each violation in the given
// .tml files. Returns kExitFailure if any were found.
int Validate(const std::vector<std::filesystem::path>& inputs,
             std::ostream& out, std::ostream& err);

// Parses arguments (argv[0] is the program name) and dispatches.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace t2t3::cli

#endif  // T2T3_TOOLS_CLI_H_
