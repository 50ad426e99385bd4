/* Copyright 2026 The speechfeat Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SPEECHFEAT_TOOLS_EXTRACT_JOB_HPP_
#define SPEECHFEAT_TOOLS_EXTRACT_JOB_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "speechfeat/features.hpp"

namespace speechfeat::cli {

enum class PostprocessMode { kNone, kCmvn, kCmvnVar, kCmvnw, kCmvnwVar };
enum class OutputFormat { kCsv, kSpfe };

struct JobSpec {
  std::vector<std::filesystem::path> inputs;
  FeatureKind feature = FeatureKind::kMfcc;
  FeatureConfig config;
  PostprocessMode postprocess = PostprocessMode::kNone;
  std::size_t win_size = 301;
  bool derivatives = false;
  std::filesystem::path output_dir = ".";
  OutputFormat format = OutputFormat::kCsv;
  std::size_t jobs = 1;
};

struct ExtractSummary {
  std::size_t files_ok = 0;
  std::size_t files_failed = 0;
};

// Applies one `key = value` setting. Keys are the long flag names without
// the leading dashes; '_' and '-' are interchangeable. Throws UnknownKey or
// InvalidValue.
void ApplySetting(JobSpec& spec, std::string_view key, std::string_view value);

// Parses line-oriented `key = value` text with '#' comments.
void ApplyConfigText(JobSpec& spec, std::string_view text);

// Cross-field checks run after all settings are applied.
void ValidateJob(const JobSpec& spec);

// Thrown by ParseArgs for --help; carries the rendered usage text.
struct HelpRequested {
  std::string text;
};

// Parses the tokens following the program name, starting with the
// `extract` subcommand. Defaults < config file < flags.
JobSpec ParseArgs(const std::vector<std::string>& args);

// Expands directory inputs (non-recursive, *.wav case-insensitive, sorted)
// and rejects output-name collisions. Missing files are kept so they are
// reported per file.
std::vector<std::filesystem::path> ResolveInputs(const JobSpec& spec);

std::filesystem::path OutputPathFor(const JobSpec& spec,
                                    const std::filesystem::path& input);

// Runs read -> feature -> optional derivatives -> optional normalization ->
// write for every input. A failing file is reported on `diagnostics` and
// counted; the others still run.
ExtractSummary RunExtract(const JobSpec& spec, std::ostream& diagnostics);

// Full command-line entry point. Returns 0 when every file succeeded, 1 when
// some file failed, 2 on job-level errors. The last line written to `out` is
// `OK=<n> FAIL=<m>` whenever files were processed.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace speechfeat::cli

#endif  // SPEECHFEAT_TOOLS_EXTRACT_JOB_HPP_
