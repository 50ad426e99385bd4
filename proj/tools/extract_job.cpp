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

#include "extract_job.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "CLI11.hpp"
#include "speechfeat/audio_io.hpp"
#include "speechfeat/error.hpp"
#include "speechfeat/feature_io.hpp"
#include "speechfeat/postprocess.hpp"

namespace speechfeat::cli {
namespace {

namespace fs = std::filesystem;

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string NormalizeKey(std::string_view key) {
  std::string k = Trim(key);
  while (!k.empty() && k.front() == '-') k.erase(k.begin());
  std::replace(k.begin(), k.end(), '_', '-');
  return k;
}

[[noreturn]] void BadValue(std::string_view key, std::string_view value,
                           std::string_view why) {
  throw Error(ErrorCode::kInvalidValue, "--" + std::string(key) + " '" +
                                            std::string(value) + "': " +
                                            std::string(why));
}

double ParseReal(std::string_view key, std::string_view value) {
  const std::string v = Trim(value);
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty() ||
      !std::isfinite(out)) {
    BadValue(key, value, "not a number");
  }
  return out;
}

std::size_t ParseCount(std::string_view key, std::string_view value) {
  const std::string v = Trim(value);
  unsigned long long out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
    BadValue(key, value, "not a non-negative integer");
  }
  return static_cast<std::size_t>(out);
}

bool ParseBool(std::string_view key, std::string_view value) {
  std::string v = Trim(value);
  std::transform(v.begin(), v.end(), v.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  BadValue(key, value, "not a boolean");
}

using Setter = std::function<void(JobSpec&, std::string_view key,
                                  std::string_view value)>;

const std::map<std::string, Setter, std::less<>>& Setters() {
  static const std::map<std::string, Setter, std::less<>> setters = {
      {"feature",
       [](JobSpec& s, std::string_view k, std::string_view v) {
         const std::string name = Trim(v);
         if (name == "mfcc") s.feature = FeatureKind::kMfcc;
         else if (name == "mfe") s.feature = FeatureKind::kMfe;
         else if (name == "lmfe") s.feature = FeatureKind::kLmfe;
         else BadValue(k, v, "expected mfcc, mfe or lmfe");
       }},
      {"input",
       [](JobSpec& s, std::string_view k, std::string_view v) {
         const std::string path = Trim(v);
         if (path.empty()) BadValue(k, v, "empty path");
         s.inputs.emplace_back(path);
       }},
      {"output-dir",
       [](JobSpec& s, std::string_view k, std::string_view v) {
         const std::string path = Trim(v);
         if (path.empty()) BadValue(k, v, "empty path");
         s.output_dir = path;
       }},
      {"format",
       [](JobSpec& s, std::string_view k, std::string_view v) {
         const std::string name = Trim(v);
         if (name == "csv") s.format = OutputFormat::kCsv;
         else if (name == "spfe") s.format = OutputFormat::kSpfe;
         else BadValue(k, v, "expected csv or spfe");
       }},
      {"frame-length",
       [](JobSpec& s, std::string_view k, std::string_view v) {
         s.config.frame_length_s = ParseReal(k, v);
       }},
      {"frame-stride",
       [](JobSpec& s, std::string_view k, std::string_view v) {
         s.config.frame_stride_s = ParseReal(k, v);
       }},
      {"fft-length",
       [](JobSpec& s, std::string_view k, std::string_view v) {
         const std::size_t n = ParseCount(k, v);
         if (!IsPowerOfTwo(n)) BadValue(k, v, "not a power of two");
         s.config.fft_length = n;
       }},
      {"num-filters",
       [](JobSpec& s, std::string_view k, std::string_view v) {
         s.config.num_filters = ParseCount(k, v);
       }},
      {"num-cepstral",
       [](JobSpec& s, std::string_view k, std::string_view v) {
         s.config.num_cepstral = ParseCount(k, v);
       }},
      {"low-freq",
       [](JobSpec& s, std::string_view k, std::string_view v) {
         s.config.low_freq = ParseReal(k, v);
       }},
      {"high-freq",
       [](JobSpec& s, std::string_view k, std::string_view v) {
         s.config.high_freq = ParseReal(k, v);
       }},
      {"window",
       [](JobSpec& s, std::string_view k, std::string_view v) {
         const std::string name = Trim(v);
         if (name == "rectangular") s.config.window = WindowType::kRectangular;
         else if (name == "hamming") s.config.window = WindowType::kHamming;
         else if (name == "hanning") s.config.window = WindowType::kHanning;
         else BadValue(k, v, "expected rectangular, hamming or hanning");
       }},
      {"pre-emphasis",
       [](JobSpec& s, std::string_view k, std::string_view v) {
         s.config.alpha = ParseReal(k, v);
       }},
      {"dc-elimination",
       [](JobSpec& s, std::string_view k, std::string_view v) {
         s.config.dc_elimination = ParseBool(k, v);
       }},
      {"no-zero-padding",
       [](JobSpec& s, std::string_view k, std::string_view v) {
         s.config.zero_padding = !ParseBool(k, v);
       }},
      {"postprocess",
       [](JobSpec& s, std::string_view k, std::string_view v) {
         const std::string name = Trim(v);
         if (name == "none") s.postprocess = PostprocessMode::kNone;
         else if (name == "cmvn") s.postprocess = PostprocessMode::kCmvn;
         else if (name == "cmvn_var") s.postprocess = PostprocessMode::kCmvnVar;
         else if (name == "cmvnw") s.postprocess = PostprocessMode::kCmvnw;
         else if (name == "cmvnw_var") s.postprocess = PostprocessMode::kCmvnwVar;
         else BadValue(k, v, "expected none, cmvn, cmvn_var, cmvnw or cmvnw_var");
       }},
      {"win-size",
       [](JobSpec& s, std::string_view k, std::string_view v) {
         s.win_size = ParseCount(k, v);
       }},
      {"derivatives",
       [](JobSpec& s, std::string_view k, std::string_view v) {
         s.derivatives = ParseBool(k, v);
       }},
      {"jobs",
       [](JobSpec& s, std::string_view k, std::string_view v) {
         s.jobs = ParseCount(k, v);
         if (s.jobs == 0) BadValue(k, v, "must be at least 1");
       }},
  };
  return setters;
}

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

FeatureMatrix ExtractOne(const JobSpec& spec, const fs::path& input) {
  const AudioBuffer audio = ReadWav(input);
  const FeaturePipeline pipeline(spec.config, audio.sampling_frequency);

  FeatureMatrix features;
  switch (spec.feature) {
    case FeatureKind::kMfe: features = pipeline.Mfe(audio); break;
    case FeatureKind::kLmfe: features = pipeline.Lmfe(audio); break;
    default: features = pipeline.Mfcc(audio); break;
  }
  if (spec.derivatives) features = ExtractDerivative(features);

  switch (spec.postprocess) {
    case PostprocessMode::kNone: break;
    case PostprocessMode::kCmvn: features = Cmvn(features, false); break;
    case PostprocessMode::kCmvnVar: features = Cmvn(features, true); break;
    case PostprocessMode::kCmvnw:
      features = Cmvnw(features, spec.win_size, false);
      break;
    case PostprocessMode::kCmvnwVar:
      features = Cmvnw(features, spec.win_size, true);
      break;
  }
  return features;
}

void PrepareOutputDir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir, ec) || ::access(dir.c_str(), W_OK) != 0) {
    throw Error(ErrorCode::kOutputDirUnwritable,
                "output directory " + dir.string() + " is not writable");
  }
}

}  // namespace

void ApplySetting(JobSpec& spec, std::string_view key, std::string_view value) {
  const std::string k = NormalizeKey(key);
  const auto& setters = Setters();
  auto it = setters.find(k);
  if (it == setters.end() || k == "config") {
    throw Error(ErrorCode::kUnknownKey, "unknown setting '" +
                                            std::string(key) + "'");
  }
  it->second(spec, k, value);
}

void ApplyConfigText(JobSpec& spec, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (Trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kInvalidValue,
                  "config line " + std::to_string(line_no) +
                      " is not of the form key = value");
    }
    ApplySetting(spec, line.substr(0, eq), Trim(line.substr(eq + 1)));
  }
}

void ValidateJob(const JobSpec& spec) {
  if (spec.inputs.empty()) {
    throw Error(ErrorCode::kMissingInput, "no --input given");
  }
  if (spec.win_size < 3 || spec.win_size % 2 == 0) {
    throw Error(ErrorCode::kInvalidValue,
                "--win-size " + std::to_string(spec.win_size) +
                    " must be odd and at least 3");
  }
  try {
    ValidateConfig(spec.config);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidValue, e.what());
  }
}

JobSpec ParseArgs(const std::vector<std::string>& args) {
  CLI::App app{"Speech feature extraction"};
  app.require_subcommand(1);
  CLI::App* extract =
      app.add_subcommand("extract", "Extract features from WAV files");

  // Every option is captured as text and routed through ApplySetting so the
  // command line and config file share one validation path.
  std::map<std::string, std::vector<std::string>> values;
  auto text_option = [&](const std::string& name, const std::string& help) {
    extract->add_option("--" + name, values[name], help)
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  };
  extract->add_option("--input", values["input"], "WAV file or directory")
      ->expected(1, CLI::detail::expected_max_vector_size);
  text_option("feature", "mfcc | mfe | lmfe");
  text_option("output-dir", "Output directory (default: .)");
  text_option("format", "csv | spfe");
  text_option("frame-length", "Frame length in seconds (0.020)");
  text_option("frame-stride", "Frame stride in seconds (0.010)");
  text_option("fft-length", "FFT length, power of two (next pow2 >= frame)");
  text_option("num-filters", "Number of mel filters (40)");
  text_option("num-cepstral", "Number of cepstral coefficients (13)");
  text_option("low-freq", "Lowest filter edge in Hz (0)");
  text_option("high-freq", "Highest filter edge in Hz (fs/2)");
  text_option("window", "rectangular | hamming | hanning");
  text_option("pre-emphasis", "Pre-emphasis coefficient (0.97)");
  text_option("postprocess", "none | cmvn | cmvn_var | cmvnw | cmvnw_var");
  text_option("win-size", "Odd cmvnw window in frames (301)");
  text_option("jobs", "Files processed in parallel (1)");
  bool dc_elimination = false, no_zero_padding = false, derivatives = false;
  extract->add_flag("--dc-elimination", dc_elimination,
                    "Drop cepstral coefficient 0");
  extract->add_flag("--no-zero-padding", no_zero_padding,
                    "Drop trailing samples instead of padding the last frame");
  extract->add_flag("--derivatives", derivatives,
                    "Append delta and delta-delta features");
  std::string config_path;
  extract->add_option("--config", config_path, "key = value config file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{extract->parsed() ? extract->help() : app.help()};
  }

  JobSpec spec;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      throw Error(ErrorCode::kInvalidValue,
                  "cannot read config file " + config_path);
    }
    std::stringstream text;
    text << in.rdbuf();
    ApplyConfigText(spec, text.str());
  }

  if (!values["input"].empty()) spec.inputs.clear();
  for (const auto& [name, vals] : values) {
    for (const auto& v : vals) ApplySetting(spec, name, v);
  }
  if (extract->count("--dc-elimination")) spec.config.dc_elimination = true;
  if (extract->count("--no-zero-padding")) spec.config.zero_padding = false;
  if (extract->count("--derivatives")) spec.derivatives = true;

  ValidateJob(spec);
  return spec;
}

std::vector<fs::path> ResolveInputs(const JobSpec& spec) {
  std::vector<fs::path> files;
  for (const auto& input : spec.inputs) {
    std::error_code ec;
    if (fs::is_directory(input, ec)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(input, ec)) {
        if (entry.is_regular_file(ec) &&
            Lower(entry.path().extension().string()) == ".wav") {
          found.push_back(entry.path());
        }
      }
      if (ec) {
        throw Error(ErrorCode::kMissingInput,
                    "cannot list directory " + input.string());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(input);
    }
  }

  std::set<fs::path> seen;
  for (const auto& file : files) {
    const fs::path out = OutputPathFor(spec, file);
    if (!seen.insert(out).second) {
      throw Error(ErrorCode::kInvalidValue,
                  "two inputs map to the same output file " + out.string());
    }
  }
  return files;
}

fs::path OutputPathFor(const JobSpec& spec, const fs::path& input) {
  fs::path name = input.stem();
  name += spec.format == OutputFormat::kCsv ? ".csv" : ".spfe";
  return spec.output_dir / name;
}

ExtractSummary RunExtract(const JobSpec& spec, std::ostream& diagnostics) {
  const std::vector<fs::path> files = ResolveInputs(spec);
  PrepareOutputDir(spec.output_dir);

  std::vector<std::string> errors(files.size());
  auto process = [&](std::size_t i) {
    try {
      const FeatureMatrix features = ExtractOne(spec, files[i]);
      const fs::path out = OutputPathFor(spec, files[i]);
      if (spec.format == OutputFormat::kCsv) {
        WriteCsv(features.data, out);
      } else {
        WriteSpfe(features.data, out);
      }
    } catch (const std::exception& e) {
      errors[i] = e.what();
      if (errors[i].empty()) errors[i] = "unknown failure";
    }
  };

  const std::size_t workers = std::min(spec.jobs, files.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < files.size(); ++i) process(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < files.size(); i = next++) process(i);
      });
    }
  }

  ExtractSummary summary;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (errors[i].empty()) {
      ++summary.files_ok;
    } else {
      ++summary.files_failed;
      diagnostics << "error: " << files[i].string() << ": " << errors[i]
                  << '\n';
    }
  }
  return summary;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  JobSpec spec;
  try {
    spec = ParseArgs(args);
  } catch (const HelpRequested& help) {
    out << help.text;
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  ExtractSummary summary;
  try {
    summary = RunExtract(spec, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  out << "OK=" << summary.files_ok << " FAIL=" << summary.files_failed << '\n';
  return summary.files_failed == 0 ? 0 : 1;
}

}  // namespace speechfeat::cli
