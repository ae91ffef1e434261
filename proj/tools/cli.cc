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

#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "t2t3/errors.h"
#include "t2t3/ingest.h"
#include "t2t3/lexicon.h"
#include "t2t3/scorer.h"
#include "t2t3/timeml.h"
#include "t2t3/unicode.h"

namespace t2t3::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr std::string_view kStandoffSuffix = ".apf.xml";

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

// Regular, non-hidden files of a directory in name order, or the path
// itself when it is a file.
std::vector<fs::path> ListFiles(const fs::path& input,
                                std::string_view suffix = {}) {
  std::vector<fs::path> files;
  if (!fs::is_directory(input)) {
    files.push_back(input);
    return files;
  }
  for (const auto& entry : fs::directory_iterator(input)) {
    const std::string name = entry.path().filename().string();
    if (!entry.is_regular_file() || name.starts_with(".")) continue;
    if (!suffix.empty() && !EndsWith(name, suffix)) continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::string OutputStem(const fs::path& input, InputFormat format) {
  const std::string name = input.filename().string();
  if (format == InputFormat::kStandoff && EndsWith(name, kStandoffSuffix))
    return name.substr(0, name.size() - kStandoffSuffix.size());
  return input.stem().string();
}

Document LoadDocument(const fs::path& input, const std::string& stem,
                      const ConvertOptions& options) {
  InlineOptions inline_options{stem, options.dct};
  if (options.format == InputFormat::kInline)
    return ParseInline(NormalizeEncoding(ReadFile(input)), inline_options);

  const std::string name = input.string();
  if (!EndsWith(name, kStandoffSuffix))
    throw std::runtime_error("standoff input must end in .apf.xml: " + name);
  const fs::path source =
      name.substr(0, name.size() - kStandoffSuffix.size()) + ".sgm";
  const StandoffFile standoff =
      ParseStandoff(NormalizeEncoding(ReadFile(input)));
  // Offsets address the source text with its markup removed.
  const Document plain =
      ParseInline(NormalizeEncoding(ReadFile(source)), inline_options);
  InlineOptions merged{standoff.doc_id.empty() ? plain.doc_id()
                                               : standoff.doc_id,
                       plain.dct()};
  return MergeStandoff(plain.text(), standoff.records, merged);
}

Json SpanJson(const Span& span) { return Json::array({span.start, span.end}); }

struct TypeCounts {
  std::size_t date = 0, duration = 0, time = 0, set = 0;

  void Add(TimexType type) {
    switch (type) {
      case TimexType::kDate: ++date; break;
      case TimexType::kDuration: ++duration; break;
      case TimexType::kTime: ++time; break;
      case TimexType::kSet: ++set; break;
    }
  }
  void Add(const TypeCounts& o) {
    date += o.date;
    duration += o.duration;
    time += o.time;
    set += o.set;
  }
};

std::string StatsRow(const std::string& name, const TypeCounts& c) {
  char line[256];
  std::snprintf(line, sizeof line, "%-24s %8zu %8zu %8zu %8zu\n", name.c_str(),
                c.date, c.duration, c.time, c.set);
  return line;
}

std::string CorpusName(const fs::path& dir) {
  fs::path p = dir;
  if (p.filename().empty()) p = p.parent_path();
  const std::string name = p.filename().string();
  return name.empty() ? p.string() : name;
}

}  // namespace

DocumentOutcome ConvertOne(const fs::path& input, const ConvertOptions& options,
                           const ConversionConfig& config,
                           const ConversionResources& resources) {
  DocumentOutcome outcome;
  outcome.input = input;
  outcome.name = OutputStem(input, options.format);
  try {
    const Document doc = LoadDocument(input, outcome.name, options);
    Conversion conversion = ConvertDocument(doc, config, resources);
    outcome.report = std::move(conversion.report);
    const auto violations = t2t3::Validate(conversion.timeml);
    if (!violations.empty()) {
      outcome.reason = "InvalidDocument: " + std::to_string(violations.size()) +
                       " violation(s), first " +
                       std::string(ViolationCodeName(violations[0].code)) +
                       " " + violations[0].message;
      outcome.violations_tsv = FormatViolations(violations);
      return outcome;
    }
    outcome.timeml = Serialize(conversion.timeml);
    outcome.converted = true;
  } catch (const Error& e) {
    outcome.reason = e.kind() + ": " + e.what();
  } catch (const std::exception& e) {
    outcome.reason = std::string("IOError: ") + e.what();
  }
  return outcome;
}

std::string ManifestLine(const DocumentOutcome& o) {
  Json j;
  j["document"] = o.name;
  j["input"] = o.input.generic_string();
  j["status"] = o.converted ? "converted" : "failed";
  if (!o.converted) j["reason"] = o.reason;
  j["timex2"] = o.report.timex2_total;
  j["timex3"] = o.report.timex3_emitted;
  Json paths = Json::object();
  for (ConversionPath p : {ConversionPath::kSimple, ConversionPath::kSignalled,
                           ConversionPath::kNested, ConversionPath::kTrimmed})
    paths[std::string(ConversionPathName(p))] = o.report.PathCount(p);
  j["paths"] = paths;
  Json dropped = Json::array();
  for (const DroppedValue& d : o.report.dropped)
    dropped.push_back(
        {{"span", SpanJson(d.span)}, {"val", d.val}, {"reason", d.reason}});
  j["dropped"] = dropped;
  Json warnings = Json::array();
  for (const ConversionWarning& w : o.report.warnings)
    warnings.push_back(
        {{"kind", w.kind}, {"span", SpanJson(w.span)}, {"message", w.message}});
  j["warnings"] = warnings;
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

int Convert(const ConvertOptions& options, std::ostream& out,
            std::ostream& err) {
  ConversionConfig config;
  config.trim_cutoff = options.trim_cutoff;
  if (options.untyped_tlinks) config.signal_relation_map.clear();
  try {
    config.Check();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  ConversionResources resources;
  try {
    resources = options.signal_lexicon
                    ? ConversionResources::WithLexicon(SignalLexicon::Load(
                          options.signal_lexicon->string()))
                    : ConversionResources::Default();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::vector<fs::path> files;
  for (const fs::path& input : options.inputs) {
    if (!fs::exists(input)) {
      err << "error: no such input " << input.string() << "\n";
      return kExitUsage;
    }
    const auto listed = ListFiles(
        input, options.format == InputFormat::kStandoff ? kStandoffSuffix : "");
    files.insert(files.end(), listed.begin(), listed.end());
  }
  std::error_code ec;
  fs::create_directories(options.out_dir, ec);
  if (ec) {
    err << "error: cannot create " << options.out_dir.string() << ": "
        << ec.message() << "\n";
    return kExitUsage;
  }

  std::vector<DocumentOutcome> outcomes(files.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < files.size();)
      outcomes[i] = ConvertOne(files[i], options, config, resources);
  };
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::thread> workers;
  for (unsigned j = 1; j < jobs && j < files.size(); ++j)
    workers.emplace_back(work);
  work();
  for (std::thread& t : workers) t.join();

  std::set<std::string> names;
  std::string manifest;
  std::size_t converted = 0, failed = 0;
  ConversionReport totals;
  for (DocumentOutcome& o : outcomes) {
    if (!names.insert(o.name).second) {
      o.converted = false;
      o.timeml.clear();
      o.reason = "DuplicateName: another input already produced " + o.name;
    }
    try {
      if (o.converted) {
        WriteFile(options.out_dir / (o.name + ".tml"), o.timeml);
      } else if (!o.violations_tsv.empty()) {
        WriteFile(options.out_dir / (o.name + ".violations.tsv"),
                  o.violations_tsv);
      }
    } catch (const std::exception& e) {
      o.converted = false;
      o.reason = std::string("IOError: ") + e.what();
    }
    if (o.converted) {
      ++converted;
    } else {
      ++failed;
      err << "failed: " << o.input.string() << ": " << o.reason << "\n";
    }
    totals.Merge(o.report);
    manifest += ManifestLine(o) + "\n";
  }
  try {
    WriteFile(options.out_dir / "manifest.jsonl", manifest);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }

  out << "documents: " << outcomes.size() << " converted: " << converted
      << " failed: " << failed << "\n";
  out << "TIMEX2: " << totals.timex2_total << " TIMEX3: "
      << totals.timex3_emitted << " dropped: " << totals.dropped.size()
      << " warnings: " << totals.warnings.size() << "\n";
  out << "paths:";
  for (ConversionPath p : {ConversionPath::kSimple, ConversionPath::kSignalled,
                           ConversionPath::kNested, ConversionPath::kTrimmed})
    out << " " << ConversionPathName(p) << "=" << totals.PathCount(p);
  out << "\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

int Stats(const std::vector<fs::path>& inputs, std::ostream& out,
          std::ostream& err) {
  std::vector<std::pair<std::string, TypeCounts>> rows;
  std::map<std::string, std::size_t> loose;  // corpus name -> row index
  bool any_failed = false;
  for (const fs::path& input : inputs) {
    if (!fs::exists(input)) {
      err << "failed: " << input.string() << ": no such file or directory\n";
      any_failed = true;
      continue;
    }
    std::size_t row;
    if (fs::is_directory(input)) {
      row = rows.size();
      rows.emplace_back(CorpusName(input), TypeCounts{});
    } else {
      const std::string name = CorpusName(input.parent_path().empty()
                                              ? fs::path(".")
                                              : input.parent_path());
      auto [it, inserted] = loose.emplace(name, rows.size());
      if (inserted) rows.emplace_back(name, TypeCounts{});
      row = it->second;
    }
    for (const fs::path& file : ListFiles(input, fs::is_directory(input) ? ".tml" : "")) {
      try {
        const TimeMLDocument doc = ParseTimeML(ReadFile(file));
        for (const Timex3& t : doc.timex3s) rows[row].second.Add(t.type);
      } catch (const std::exception& e) {
        err << "failed: " << file.string() << ": " << e.what() << "\n";
        any_failed = true;
      }
    }
  }
  char header[256];
  std::snprintf(header, sizeof header, "%-24s %8s %8s %8s %8s\n", "Corpus",
                "DATE", "DUR.", "TIME", "SET");
  out << header;
  TypeCounts total;
  for (const auto& [name, counts] : rows) {
    out << StatsRow(name, counts);
    total.Add(counts);
  }
  out << StatsRow("Total", total);
  return any_failed ? kExitFailure : kExitOk;
}

int Score(const fs::path& gold_dir, const fs::path& sys_dir,
          ScoreSelection selection, bool tsv, std::ostream& out,
          std::ostream& err) {
  for (const fs::path& dir : {gold_dir, sys_dir}) {
    if (!fs::is_directory(dir)) {
      err << "error: not a directory: " << dir.string() << "\n";
      return kExitUsage;
    }
  }
  std::map<std::string, fs::path> gold, sys;
  for (const fs::path& f : ListFiles(gold_dir, ".tml"))
    gold[f.filename().string()] = f;
  for (const fs::path& f : ListFiles(sys_dir, ".tml"))
    sys[f.filename().string()] = f;

  ScoreCounts entity, token;
  std::size_t scored = 0;
  for (const auto& [name, gold_path] : gold) {
    auto it = sys.find(name);
    if (it == sys.end()) {
      err << "unpaired: " << gold_path.string() << " has no system file\n";
      continue;
    }
    try {
      const TimeMLDocument g = ParseTimeML(ReadFile(gold_path), name);
      const TimeMLDocument s = ParseTimeML(ReadFile(it->second), name);
      const ScoreCounts e = CountEntity(g, s);
      const ScoreCounts t = CountToken(g, s);
      entity += e;
      token += t;
      ++scored;
    } catch (const std::exception& e) {
      err << "skipped: " << name << ": " << e.what() << "\n";
    }
  }
  for (const auto& [name, sys_path] : sys)
    if (!gold.count(name))
      err << "unpaired: " << sys_path.string() << " has no gold file\n";

  std::vector<ScoreReport> reports;
  if (selection != ScoreSelection::kToken)
    reports.push_back(ScoreReport::FromCounts(ScoreRegime::kEntityStrict, entity));
  if (selection != ScoreSelection::kEntity)
    reports.push_back(ScoreReport::FromCounts(ScoreRegime::kToken, token));
  if (tsv) {
    for (const ScoreReport& r : reports) out << FormatScoreRow(r) << "\n";
  } else {
    out << "documents scored: " << scored << "\n" << FormatScoreTable(reports);
  }
  return kExitOk;
}

int Validate(const std::vector<fs::path>& inputs, std::ostream& out,
             std::ostream& err) {
  bool any = false;
  for (const fs::path& input : inputs) {
    if (!fs::exists(input)) {
      err << "error: no such input " << input.string() << "\n";
      return kExitUsage;
    }
    for (const fs::path& file :
         ListFiles(input, fs::is_directory(input) ? ".tml" : "")) {
      std::vector<Violation> violations;
      try {
        violations = ValidateSerialized(ReadFile(file));
      } catch (const std::exception& e) {
        violations.push_back({ViolationCode::kMalformedXml, "", e.what()});
      }
      std::istringstream lines(FormatViolations(violations));
      for (std::string line; std::getline(lines, line);)
        out << file.string() << "\t" << line << "\n";
      any = any || !violations.empty();
    }
  }
  return any ? kExitFailure : kExitOk;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Convert TIMEX2 corpora to TimeML, score and validate them"};
  app.name(args.empty() ? "t2t3" : args[0]);
  app.require_subcommand(1);

  ConvertOptions convert;
  std::vector<std::string> convert_inputs;
  std::string format = "inline", out_dir, lexicon;
  auto* convert_cmd = app.add_subcommand("convert", "Convert TIMEX2 documents");
  convert_cmd->add_option("inputs", convert_inputs, "Input files or directories")
      ->required();
  convert_cmd->add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"inline", "standoff"}));
  convert_cmd->add_option("--out", out_dir, "Output directory")->required();
  convert_cmd->add_option("--dct", convert.dct,
                          "Creation time when the document has none");
  convert_cmd->add_option("--trim-cutoff", convert.trim_cutoff,
                          "Token count from which TIMEX2s are trimmed")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
  convert_cmd->add_option("--signal-lexicon", lexicon, "Signal lexicon TSV");
  convert_cmd->add_flag("--untyped-tlinks", convert.untyped_tlinks,
                        "Leave signal TLINKs untyped");
  convert_cmd->add_option("--jobs", convert.jobs, "Parallel conversions")
      ->check(CLI::Range(1u, 256u));

  std::vector<std::string> stats_inputs;
  auto* stats_cmd = app.add_subcommand("stats", "Count TIMEX3 types");
  stats_cmd->add_option("inputs", stats_inputs, "Corpus directories or files")
      ->required();

  std::string gold_dir, sys_dir, regime = "both";
  bool tsv = false;
  auto* score_cmd = app.add_subcommand("score", "Score system against gold");
  score_cmd->add_option("gold", gold_dir, "Gold directory")->required();
  score_cmd->add_option("system", sys_dir, "System directory")->required();
  score_cmd->add_option("--regime", regime, "entity, token or both")
      ->check(CLI::IsMember({"entity", "token", "both"}));
  score_cmd->add_flag("--tsv", tsv, "Tab-separated rows");

  std::vector<std::string> validate_inputs;
  auto* validate_cmd = app.add_subcommand("validate", "Validate TimeML files");
  validate_cmd->add_option("inputs", validate_inputs, "Files or directories")
      ->required();

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(),
                                args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (convert_cmd->parsed()) {
    for (const std::string& p : convert_inputs) convert.inputs.emplace_back(p);
    convert.format =
        format == "standoff" ? InputFormat::kStandoff : InputFormat::kInline;
    convert.out_dir = out_dir;
    if (!lexicon.empty()) convert.signal_lexicon = lexicon;
    return Convert(convert, out, err);
  }
  if (stats_cmd->parsed())
    return Stats({stats_inputs.begin(), stats_inputs.end()}, out, err);
  if (score_cmd->parsed()) {
    const ScoreSelection selection = regime == "entity" ? ScoreSelection::kEntity
                                     : regime == "token" ? ScoreSelection::kToken
                                                         : ScoreSelection::kBoth;
    return Score(gold_dir, sys_dir, selection, tsv, out, err);
  }
  return Validate({validate_inputs.begin(), validate_inputs.end()}, out, err);
}

}  // namespace t2t3::cli
