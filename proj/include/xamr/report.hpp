// Copyright 2026 The xamr Authors.
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

#ifndef XAMR_REPORT_HPP_
#define XAMR_REPORT_HPP_

#include <string>

#include "xamr/consistency.hpp"
#include "xamr/mt_quality.hpp"
#include "xamr/smatch.hpp"
#include "xamr/subscores.hpp"

namespace xamr {

enum class ReportFormat { Text, Json, Csv };

// Accepts "text", "json", "csv"; throws DataError otherwise.
ReportFormat parse_report_format(const std::string &name);

// Text mode shows raw scores to three decimals plus percentages with one
// decimal; JSON carries raw [0,1] reals and is byte-stable for identical
// inputs and seeds.
std::string render_match(const MatchResult &result, const std::string &metric_name,
                         ReportFormat format);
std::string render_breakdown(const BreakdownReport &report,
                             const std::string &metric_name, ReportFormat format);
std::string render_consistency(const ConsistencyMatrix &matrix,
                               const std::string &metric_name, ReportFormat format);
std::string render_consistency_breakdown(const ConsistencyBreakdown &report,
                                         const std::string &metric_name,
                                         ReportFormat format);
std::string render_bleu(double bleu, ReportFormat format);
std::string render_cosine(const CosineReport &report, ReportFormat format);

}  // namespace xamr

#endif  // XAMR_REPORT_HPP_
