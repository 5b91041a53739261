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

#ifndef HCCOV_STATS_H_
#define HCCOV_STATS_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hccov {

// (gap_pp, mutation_score_pct) per suite variant.
using PairedSeries = std::vector<std::pair<double, double>>;

// 1-based ranks; tied values share the average of their positions.
std::vector<double> AverageRanks(const std::vector<double>& values);

// Pearson product-moment correlation. nullopt with fewer than 3 points, a
// non-finite value, or zero variance in either series.
std::optional<double> Pearson(const PairedSeries& points);

// Spearman rank correlation: Pearson over average ranks.
std::optional<double> Spearman(const PairedSeries& points);

// "-0.8660", or "n/a".
std::string FormatCoefficient(const std::optional<double>& r);

}  // namespace hccov

#endif  // HCCOV_STATS_H_
