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

#include "speechfeat/postprocess.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "speechfeat/error.hpp"
#include "support/fixtures.hpp"

namespace speechfeat {
namespace {

FeatureMatrix Wrap(Matrix m) { return {std::move(m), FeatureKind::kMfcc, {}}; }

FeatureMatrix Column(std::vector<double> v) {
  Matrix m(v.size(), 1);
  std::copy(v.begin(), v.end(), m.values().begin());
  return Wrap(std::move(m));
}

std::vector<double> ColumnOf(const FeatureMatrix& f, std::size_t d = 0) {
  std::vector<double> out;
  for (std::size_t t = 0; t < f.data.rows(); ++t) out.push_back(f.data(t, d));
  return out;
}

Matrix FromRows(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::copy(row.begin(), row.end(), m.row(r++).begin());
  }
  return m;
}

TEST(CmvnTest, MeanOnlyExample) {
  const FeatureMatrix out = Cmvn(Wrap(FromRows({{1, 2}, {3, 4}})), false);
  EXPECT_EQ(out.data, FromRows({{-1, -1}, {1, 1}}));
}

TEST(CmvnTest, VarianceExample) {
  const FeatureMatrix out = Cmvn(Wrap(FromRows({{1, 2}, {3, 4}})), true);
  const Matrix expected = FromRows({{-1, -1}, {1, 1}});
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(out.data.values()[i], expected.values()[i], 1e-9);
  }
}

TEST(CmvnTest, ConstantAndSingleFrame) {
  const FeatureMatrix constant = Cmvn(Wrap(Matrix(5, 3, 7.5)), false);
  for (double v : constant.data.values()) EXPECT_EQ(v, 0.0);
  const FeatureMatrix single = Cmvn(Wrap(Matrix(1, 3, -2.0)), true);
  for (double v : single.data.values()) EXPECT_EQ(v, 0.0);
}

TEST(CmvnTest, EmptyRejected) {
  try {
    Cmvn(Wrap(Matrix(0, 3)), false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyFeatures);
  }
}

TEST(CmvnTest, MomentsOnRandomMatrices) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = 2 + rng() % 300;
    const Matrix x = testing::RandomMatrix(rng, rows, 13, -50.0, 80.0);
    double inf = 0.0;
    for (double v : x.values()) inf = std::max(inf, std::abs(v));
    const FeatureMatrix mean_only = Cmvn(Wrap(x), false);
    const FeatureMatrix full = Cmvn(Wrap(x), true);
    for (std::size_t d = 0; d < 13; ++d) {
      const auto c = ColumnOf(mean_only, d);
      double mean = 0.0;
      for (double v : c) mean += v;
      mean /= rows;
      EXPECT_LE(std::abs(mean), 1e-10 * std::max(1.0, inf));

      const auto z = ColumnOf(full, d);
      double m2 = 0.0, s2 = 0.0;
      for (double v : z) m2 += v;
      m2 /= rows;
      for (double v : z) s2 += (v - m2) * (v - m2);
      EXPECT_NEAR(std::sqrt(s2 / rows), 1.0, 1e-8);
    }
  }
}

TEST(CmvnTest, IdempotentAndShiftInvariant) {
  std::mt19937_64 rng(32);
  const Matrix x = testing::RandomMatrix(rng, 50, 6);
  const FeatureMatrix once = Cmvn(Wrap(x), false);
  const FeatureMatrix twice = Cmvn(once, false);
  for (std::size_t i = 0; i < x.values().size(); ++i) {
    EXPECT_NEAR(twice.data.values()[i], once.data.values()[i], 1e-12);
  }
  Matrix shifted = x;
  const auto shift = testing::RandomVector(rng, 6, -10.0, 10.0);
  for (std::size_t t = 0; t < 50; ++t)
    for (std::size_t d = 0; d < 6; ++d) shifted(t, d) += shift[d];
  const FeatureMatrix moved = Cmvn(Wrap(shifted), false);
  for (std::size_t i = 0; i < x.values().size(); ++i) {
    EXPECT_NEAR(moved.data.values()[i], once.data.values()[i], 1e-12);
  }
}

TEST(CmvnwTest, Examples) {
  EXPECT_EQ(ColumnOf(Cmvnw(Column({0, 3, 6}), 3, false)),
            (std::vector<double>{-1, 0, 1}));
  const auto wide = ColumnOf(Cmvnw(Column({0, 3, 6}), 5, false));
  EXPECT_NEAR(wide[0], -1.8, 1e-12);
  EXPECT_NEAR(wide[1], 0.0, 1e-12);
  EXPECT_NEAR(wide[2], 1.8, 1e-12);
  for (std::size_t w : {3, 5, 301}) {
    const FeatureMatrix out = Cmvnw(Wrap(Matrix(10, 2, 3.0)), w, true);
    for (double v : out.data.values()) EXPECT_EQ(v, 0.0);
  }
}

TEST(CmvnwTest, InvalidWindow) {
  for (std::size_t w : {0, 1, 2, 4, 300}) {
    try {
      Cmvnw(Column({1, 2, 3}), w, false);
      FAIL() << w;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidWindow);
    }
  }
}

// Frames whose window lies inside [0, T) see exactly the slice statistics.
TEST(CmvnwTest, InteriorMatchesSliceStatistics) {
  std::mt19937_64 rng(33);
  for (std::size_t win : {3, 7, 21}) {
    const Matrix x = testing::RandomMatrix(rng, 60, 4, -3.0, 3.0);
    for (bool var : {false, true}) {
      const FeatureMatrix out = Cmvnw(Wrap(x), win, var);
      const std::size_t half = win / 2;
      for (std::size_t t = half; t + half < 60; ++t) {
        for (std::size_t d = 0; d < 4; ++d) {
          double sum = 0.0;
          for (std::size_t j = t - half; j <= t + half; ++j) sum += x(j, d);
          const double mean = sum / static_cast<double>(win);
          double expected = x(t, d) - mean;
          if (var) {
            double sq = 0.0;
            for (std::size_t j = t - half; j <= t + half; ++j) {
              sq += (x(j, d) - mean) * (x(j, d) - mean);
            }
            expected /= std::sqrt(sq / static_cast<double>(win)) + 1e-10;
          }
          ASSERT_EQ(out.data(t, d), expected);
        }
      }
    }
  }
}

}  // namespace
}  // namespace speechfeat
