// Copyright 2026 The hccov Authors
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

#include "hccov/stats.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace hccov {

std::vector<double> AverageRanks(const std::vector<double>& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

namespace {

std::optional<double> Correlate(const std::vector<double>& x,
                                const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double dx = x[i] - mx;
    double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

bool Usable(const PairedSeries& points) {
  if (points.size() < 3) return false;
  return std::all_of(points.begin(), points.end(), [](const auto& p) {
    return std::isfinite(p.first) && std::isfinite(p.second);
  });
}

}  // namespace

std::optional<double> Pearson(const PairedSeries& points) {
  if (!Usable(points)) return std::nullopt;
  std::vector<double> x, y;
  for (const auto& [a, b] : points) {
    x.push_back(a);
    y.push_back(b);
  }
  return Correlate(x, y);
}

std::optional<double> Spearman(const PairedSeries& points) {
  if (!Usable(points)) return std::nullopt;
  std::vector<double> x, y;
  for (const auto& [a, b] : points) {
    x.push_back(a);
    y.push_back(b);
  }
  return Correlate(AverageRanks(x), AverageRanks(y));
}

std::string FormatCoefficient(const std::optional<double>& r) {
  if (!r) return "n/a";
  char buf[32];
  double v = *r;
  if (std::fabs(v) < 5e-5) v = 0.0;  // no "-0.0000"
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace hccov
