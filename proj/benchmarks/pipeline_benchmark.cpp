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

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "speechfeat/features.hpp"
#include "speechfeat/postprocess.hpp"
#include "speechfeat/spectrum.hpp"

namespace {

using namespace speechfeat;

AudioBuffer MakeSpeechLike(double seconds, int fs = 16000) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> noise(0.0, 0.05);
  AudioBuffer a{std::vector<double>(static_cast<std::size_t>(seconds * fs)), fs};
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    const double t = static_cast<double>(i) / fs;
    a.samples[i] = 0.3 * std::sin(2.0 * std::numbers::pi * 180.0 * t) +
                   0.1 * std::sin(2.0 * std::numbers::pi * 1200.0 * t) + noise(rng);
  }
  return a;
}

void BM_RealFft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RealFft fft(n);
  std::vector<double> frame(n);
  std::mt19937_64 rng(1);
  for (double& v : frame) v = std::uniform_real_distribution<double>(-1, 1)(rng);
  std::vector<std::complex<double>> out(fft.num_bins());
  for (auto _ : state) {
    fft.Transform(frame, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RealFft)->RangeMultiplier(2)->Range(64, 4096);

void BM_NaiveDft(benchmark::State& state) {
  std::vector<double> frame(static_cast<std::size_t>(state.range(0)), 0.25);
  for (auto _ : state) benchmark::DoNotOptimize(NaiveDft(frame));
}
BENCHMARK(BM_NaiveDft)->Arg(64)->Arg(512);

void BM_MfccPipeline(benchmark::State& state) {
  const AudioBuffer audio = MakeSpeechLike(static_cast<double>(state.range(0)));
  const FeaturePipeline pipeline(FeatureConfig{}, audio.sampling_frequency);
  for (auto _ : state) benchmark::DoNotOptimize(pipeline.Mfcc(audio));
  state.counters["audio_s_per_s"] = benchmark::Counter(
      static_cast<double>(state.range(0)) * state.iterations(), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_MfccPipeline)->Arg(1)->Arg(10)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_Cmvnw(benchmark::State& state) {
  const AudioBuffer audio = MakeSpeechLike(10.0);
  const FeatureMatrix mfcc = Mfcc(audio, FeatureConfig{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(Cmvnw(mfcc, static_cast<std::size_t>(state.range(0)), true));
  }
}
BENCHMARK(BM_Cmvnw)->Arg(31)->Arg(301)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
