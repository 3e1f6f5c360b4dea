// Copyright 2026 The isingbench Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isingbench/instances.hpp"
#include "isingbench/model.hpp"

namespace isingbench {

/// Fraction of total multiplicity with |energy - opt_energy| <= tol.
/// Throws UndefinedError for an empty sample set.
double estimate_pgs(const SampleSet &samples, double opt_energy, double tol = 1e-9);

/// Time to reach a ground state with 99% confidence:
///   t_sample * max(log(1 - 0.99) / log(1 - p_gs), 1),
/// infinite when p_gs == 0. Throws std::invalid_argument when p_gs is outside
/// [0, 1] or t_sample_ms <= 0.
double tts(double p_gs, double t_sample_ms);

/// Wall time per sample. Both arguments must be positive.
double t_sample(double total_wall_ms, std::uint64_t num_samples);

struct HistogramBin {
    double low;
    std::uint64_t count;
};

struct Histogram {
    double bin_width = 1.0;
    std::vector<HistogramBin> bins;
    double mean = 0.0;
    std::optional<double> optimum;
};

/// (value, multiplicity) pairs for a sample set: energies, or cut values when
/// `graph` is given.
std::vector<std::pair<double, std::uint64_t>> sample_values(const SampleSet &samples, const Graph *graph = nullptr);

/// Bins aligned to multiples of bin_width (integers for bin_width 1).
/// Throws UndefinedError when empty, std::invalid_argument for bin_width <= 0.
Histogram histogram(std::span<const std::pair<double, std::uint64_t>> values, double bin_width = 1.0,
                    std::optional<double> optimum = std::nullopt);

struct ConfidenceInterval {
    double low;
    double high;
};

/// Percentile bootstrap of P_GS: `resamples` draws of the full sample
/// multiset with replacement. Throws UndefinedError for an empty sample set.
ConfidenceInterval bootstrap_ci(const SampleSet &samples, double opt_energy, std::size_t resamples = 1000,
                                double level = 0.95, std::uint64_t seed = 0, double tol = 1e-9);

struct BenchmarkRow {
    std::string instance;
    std::string family;
    /// As in the instance metadata: cut value for max-cut, energy otherwise.
    double opt_value = 0.0;
    double p_gs_raw = 0.0;
    std::optional<double> p_gs_post;
    double t_sample_ms = 0.0;
    double tts_raw_ms = 0.0;
    std::optional<double> tts_post_ms;
    std::uint64_t n_samples = 0;
    /// Bootstrap bounds on the raw P_GS.
    double ci_low = 0.0;
    double ci_high = 0.0;
    friend bool operator==(const BenchmarkRow &, const BenchmarkRow &) = default;
};

/// Run-level audit data written with every report.
struct ReportHeader {
    std::uint64_t seed = 0;
    std::map<std::string, std::string> params;
    friend bool operator==(const ReportHeader &, const ReportHeader &) = default;
};

struct Report {
    ReportHeader header;
    std::vector<BenchmarkRow> rows;
    friend bool operator==(const Report &, const Report &) = default;
};

inline constexpr std::string_view kReportColumns =
    "instance,family,opt,p_gs_raw,p_gs_post,t_sample_ms,tts_raw_ms,tts_post_ms,n_samples,ci_low,ci_high";

/// Shortest round-trip decimal; infinity renders as "inf".
std::string format_number(double x);

/// '#'-prefixed audit lines, then kReportColumns, then one line per row.
std::string report_to_rows(const Report &report);
std::string report_to_structured(const Report &report);
Report report_from_structured(std::string_view text);

/// "series,bin_low,count" rows for external plotting.
std::string histogram_rows(const std::vector<std::pair<std::string, Histogram>> &series);

/// `params` is echoed into the document for auditing and ignored on load.
std::string sampleset_to_text(const SampleSet &samples, const std::map<std::string, std::string> &params = {});
/// Re-evaluates every entry against `problem`; a stored energy that disagrees
/// (beyond 1e-9 relative) is a ParseError.
SampleSet sampleset_from_text(std::string_view text, const IsingProblem &problem);

}  // namespace isingbench
