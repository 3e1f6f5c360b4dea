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

#include "isingbench/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "isingbench/errors.hpp"
#include "isingbench/rng.hpp"

namespace isingbench {

using nlohmann::json;

double estimate_pgs(const SampleSet &samples, double opt_energy, double tol) {
    if (samples.empty()) throw UndefinedError("P_GS of an empty sample set");
    std::uint64_t hits = 0;
    for (const auto &s : samples.entries()) {
        if (std::abs(s.energy - opt_energy) <= tol) hits += s.multiplicity;
    }
    return static_cast<double>(hits) / static_cast<double>(samples.total_multiplicity());
}

double tts(double p_gs, double t_sample_ms) {
    if (!(p_gs >= 0.0 && p_gs <= 1.0)) throw std::invalid_argument("P_GS must lie in [0, 1]");
    if (!(t_sample_ms > 0.0)) throw std::invalid_argument("t_sample must be positive");
    if (p_gs == 0.0) return std::numeric_limits<double>::infinity();
    if (p_gs == 1.0) return t_sample_ms;
    return t_sample_ms * std::max(std::log(1.0 - 0.99) / std::log1p(-p_gs), 1.0);
}

double t_sample(double total_wall_ms, std::uint64_t num_samples) {
    if (!(total_wall_ms > 0.0) || num_samples == 0) {
        throw std::invalid_argument("t_sample needs positive wall time and sample count");
    }
    return total_wall_ms / static_cast<double>(num_samples);
}

std::vector<std::pair<double, std::uint64_t>> sample_values(const SampleSet &samples, const Graph *graph) {
    std::vector<std::pair<double, std::uint64_t>> out;
    out.reserve(samples.entries().size());
    for (const auto &s : samples.entries()) {
        out.emplace_back(graph ? cut_value(*graph, s.config) : s.energy, s.multiplicity);
    }
    return out;
}

Histogram histogram(std::span<const std::pair<double, std::uint64_t>> values, double bin_width,
                    std::optional<double> optimum) {
    if (!(bin_width > 0.0)) throw std::invalid_argument("bin width must be positive");
    if (values.empty()) throw UndefinedError("histogram of an empty sample set");
    std::map<long long, std::uint64_t> counts;
    double sum = 0.0;
    std::uint64_t total = 0;
    for (const auto &[v, m] : values) {
        // Guard against values like 2.9999999999 landing one bin low.
        const auto bin = static_cast<long long>(std::floor(v / bin_width + 1e-9));
        counts[bin] += m;
        sum += v * static_cast<double>(m);
        total += m;
    }
    Histogram h;
    h.bin_width = bin_width;
    h.optimum = optimum;
    h.mean = sum / static_cast<double>(total);
    for (const auto &[bin, count] : counts) h.bins.push_back({static_cast<double>(bin) * bin_width, count});
    return h;
}

ConfidenceInterval bootstrap_ci(const SampleSet &samples, double opt_energy, std::size_t resamples, double level,
                                std::uint64_t seed, double tol) {
    if (samples.empty()) throw UndefinedError("bootstrap of an empty sample set");
    if (resamples == 0 || !(level > 0.0 && level < 1.0)) {
        throw std::invalid_argument("bootstrap needs resamples >= 1 and level in (0, 1)");
    }
    const std::uint64_t total = samples.total_multiplicity();
    std::uint64_t hits = 0;
    for (const auto &s : samples.entries()) {
        if (std::abs(s.energy - opt_energy) <= tol) hits += s.multiplicity;
    }
    // Ordering the multiset with optimal samples first, a uniform draw hits
    // the optimum exactly when its index is below `hits`.
    Rng rng(seed);
    std::vector<double> stats(resamples);
    for (auto &stat : stats) {
        std::uint64_t k = 0;
        for (std::uint64_t d = 0; d < total; ++d) k += rng.below(total) < hits ? 1 : 0;
        stat = static_cast<double>(k) / static_cast<double>(total);
    }
    std::sort(stats.begin(), stats.end());
    const double alpha = 0.5 * (1.0 - level);
    const auto last = static_cast<double>(resamples - 1);
    const auto lo = static_cast<std::size_t>(std::floor(alpha * last));
    const auto hi = static_cast<std::size_t>(std::ceil((1.0 - alpha) * last));
    return {stats[lo], stats[hi]};
}

std::string format_number(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

namespace {

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

json number_json(double x) { return std::isfinite(x) ? json(x) : json(format_number(x)); }

double number_from_json(const json &v, const std::string &field) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
    }
    throw ParseError("field '" + field + "': expected a number or \"inf\"", 0, field);
}

std::optional<double> optional_number(const json &row, const char *key) {
    if (!row.contains(key) || row[key].is_null()) return std::nullopt;
    return number_from_json(row[key], key);
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        const auto line = 1 + static_cast<std::size_t>(std::count(
                                  text.begin(), text.begin() + static_cast<std::ptrdiff_t>(std::min(e.byte, text.size())), '\n'));
        throw ParseError(std::string("syntax error: ") + e.what(), line);
    }
}

}  // namespace

std::string report_to_rows(const Report &report) {
    std::ostringstream out;
    out << "# format_version=" << kFormatVersion << "\n";
    out << "# seed=" << report.header.seed << "\n";
    for (const auto &[k, v] : report.header.params) out << "# " << k << "=" << v << "\n";
    out << kReportColumns << "\n";
    for (const auto &r : report.rows) {
        out << csv_field(r.instance) << ',' << csv_field(r.family) << ',' << format_number(r.opt_value) << ','
            << format_number(r.p_gs_raw) << ',' << (r.p_gs_post ? format_number(*r.p_gs_post) : "") << ','
            << format_number(r.t_sample_ms) << ',' << format_number(r.tts_raw_ms) << ','
            << (r.tts_post_ms ? format_number(*r.tts_post_ms) : "") << ',' << r.n_samples << ','
            << format_number(r.ci_low) << ',' << format_number(r.ci_high) << "\n";
    }
    return out.str();
}

std::string report_to_structured(const Report &report) {
    json rows = json::array();
    for (const auto &r : report.rows) {
        rows.push_back({{"instance", r.instance},
                        {"family", r.family},
                        {"opt", number_json(r.opt_value)},
                        {"p_gs_raw", r.p_gs_raw},
                        {"p_gs_post", r.p_gs_post ? json(*r.p_gs_post) : json(nullptr)},
                        {"t_sample_ms", number_json(r.t_sample_ms)},
                        {"tts_raw_ms", number_json(r.tts_raw_ms)},
                        {"tts_post_ms", r.tts_post_ms ? number_json(*r.tts_post_ms) : json(nullptr)},
                        {"n_samples", r.n_samples},
                        {"ci_low", r.ci_low},
                        {"ci_high", r.ci_high}});
    }
    json doc = {{"format_version", kFormatVersion},
                {"kind", "benchmark_report"},
                {"seed", report.header.seed},
                {"params", report.header.params},
                {"rows", rows}};
    return doc.dump(2) + "\n";
}

Report report_from_structured(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_object() || doc.value("kind", "") != "benchmark_report") {
        throw ParseError("not a benchmark report", 0, "kind");
    }
    if (doc.value("format_version", 0) != kFormatVersion) {
        throw ParseError("unsupported report format_version", 0, "format_version");
    }
    Report rep;
    try {
        rep.header.seed = doc.at("seed").get<std::uint64_t>();
        rep.header.params = doc.value("params", std::map<std::string, std::string>{});
        for (const auto &row : doc.at("rows")) {
            BenchmarkRow r;
            r.instance = row.at("instance").get<std::string>();
            r.family = row.at("family").get<std::string>();
            r.opt_value = number_from_json(row.at("opt"), "opt");
            r.p_gs_raw = number_from_json(row.at("p_gs_raw"), "p_gs_raw");
            r.p_gs_post = optional_number(row, "p_gs_post");
            r.t_sample_ms = number_from_json(row.at("t_sample_ms"), "t_sample_ms");
            r.tts_raw_ms = number_from_json(row.at("tts_raw_ms"), "tts_raw_ms");
            r.tts_post_ms = optional_number(row, "tts_post_ms");
            r.n_samples = row.at("n_samples").get<std::uint64_t>();
            r.ci_low = number_from_json(row.at("ci_low"), "ci_low");
            r.ci_high = number_from_json(row.at("ci_high"), "ci_high");
            rep.rows.push_back(std::move(r));
        }
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
    return rep;
}

std::string histogram_rows(const std::vector<std::pair<std::string, Histogram>> &series) {
    std::ostringstream out;
    out << "series,bin_low,count\n";
    for (const auto &[name, h] : series) {
        out << "# " << name << " mean=" << format_number(h.mean);
        if (h.optimum) out << " optimum=" << format_number(*h.optimum);
        out << "\n";
        for (const auto &b : h.bins) out << csv_field(name) << ',' << format_number(b.low) << ',' << b.count << "\n";
    }
    return out.str();
}

std::string sampleset_to_text(const SampleSet &samples, const std::map<std::string, std::string> &params) {
    const auto &m = samples.meta();
    json entries = json::array();
    for (const auto &s : samples.entries()) {
        entries.push_back({{"config", s.config.to_string()}, {"energy", s.energy}, {"multiplicity", s.multiplicity}});
    }
    json doc = {{"format_version", kFormatVersion},
                {"kind", "sample_set"},
                {"sampler", m.sampler},
                {"seed", m.seed},
                {"wall_time_ms", m.wall_time_ms ? json(*m.wall_time_ms) : json(nullptr)},
                {"reads", m.reads},
                {"parallel_copies", m.parallel_copies},
                {"params", params},
                {"entries", entries}};
    return doc.dump(1) + "\n";
}

SampleSet sampleset_from_text(std::string_view text, const IsingProblem &problem) {
    const json doc = parse_json(text);
    if (!doc.is_object() || doc.value("kind", "") != "sample_set") {
        throw ParseError("not a sample set", 0, "kind");
    }
    SampleSet out;
    try {
        auto &m = out.meta();
        m.sampler = doc.at("sampler").get<std::string>();
        m.seed = doc.at("seed").get<std::uint64_t>();
        if (!doc.at("wall_time_ms").is_null()) m.wall_time_ms = doc["wall_time_ms"].get<double>();
        m.reads = doc.at("reads").get<std::uint64_t>();
        m.parallel_copies = doc.at("parallel_copies").get<std::uint64_t>();
        const auto &entries = doc.at("entries");
        for (std::size_t k = 0; k < entries.size(); ++k) {
            const auto &e = entries[k];
            const auto field = "entries[" + std::to_string(k) + "]";
            SpinConfig cfg;
            try {
                cfg = SpinConfig::from_string(e.at("config").get<std::string>());
            } catch (const std::invalid_argument &err) {
                throw ParseError(field + ": " + err.what(), 0, field);
            }
            const double stored = e.at("energy").get<double>();
            out.add(problem, std::move(cfg), e.at("multiplicity").get<std::uint64_t>());
            const double actual = out.entries().back().energy;
            if (std::abs(stored - actual) > 1e-9 * std::max(1.0, std::abs(actual))) {
                throw ParseError(field + ": stored energy " + format_number(stored) + " != " + format_number(actual),
                                 0, field);
            }
        }
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed sample set: ") + e.what());
    }
    return out;
}

}  // namespace isingbench
