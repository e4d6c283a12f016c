#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "windfit/errors.hpp"
#include "windfit/sample.hpp"

// Turbine telemetry ingestion. The expected layout is a semicolon-delimited
// CSV with one header line and eight columns: time (hh:mm), output power [kW],
// then wind speed / direction pairs for the nacelle anemometer and the 10 m
// and 50 m masts. Malformed rows are counted and skipped, never fatal.

namespace windfit {

/// Zero-based column indices; defaults follow the standard eight-column export.
struct ColumnSchema {
    int time = 0;
    int power = 1;
    int ws_nacelle = 2;
    int wd_nacelle = 3;
    int ws_10m = 4;
    int wd_10m = 5;
    int ws_50m = 6;
    int wd_50m = 7;

    int field_count() const {
        return 1 + std::max({time, power, ws_nacelle, wd_nacelle, ws_10m, wd_10m, ws_50m, wd_50m});
    }
};

struct TelemetryRecord {
    int time_of_day = 0;              // minutes since midnight
    double power_kw = 0.0;            // may be negative (consumption)
    double wind_speed_nacelle = 0.0;  // m/s
    double wind_dir_nacelle = 0.0;    // degrees in [0, 360)
    double wind_speed_10m = 0.0;
    double wind_dir_10m = 0.0;
    double wind_speed_50m = 0.0;
    double wind_dir_50m = 0.0;

    bool operator==(const TelemetryRecord&) const = default;
};

struct IngestReport {
    std::size_t rows_read = 0;
    std::size_t rows_accepted = 0;
    std::size_t rows_rejected = 0;
    std::map<std::string, std::size_t> rejection_reasons;
};

enum class SpeedColumn { Nacelle, TenMeters, FiftyMeters };

inline std::string_view speed_column_name(SpeedColumn column) {
    switch (column) {
        case SpeedColumn::Nacelle: return "wind_speed_nacelle";
        case SpeedColumn::TenMeters: return "wind_speed_10m";
        case SpeedColumn::FiftyMeters: return "wind_speed_50m";
    }
    throw std::domain_error("speed_column_name: unknown column");
}

namespace detail {

inline std::string_view trim(std::string_view field) {
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t'))
        field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r'))
        field.remove_suffix(1);
    return field;
}

inline bool parse_number(std::string_view field, double* out) {
    field = trim(field);
    if (field.empty()) return false;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, *out);
    return ec == std::errc{} && ptr == last && std::isfinite(*out);
}

inline bool parse_time_of_day(std::string_view field, int* minutes) {
    field = trim(field);
    const std::size_t colon = field.find(':');
    if (colon == std::string_view::npos) return false;
    int hh = 0, mm = 0;
    const auto parse_int = [](std::string_view s, int* v) {
        if (s.empty()) return false;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *v);
        return ec == std::errc{} && ptr == s.data() + s.size();
    };
    if (!parse_int(field.substr(0, colon), &hh)) return false;
    if (!parse_int(field.substr(colon + 1), &mm)) return false;
    if (hh < 0 || hh > 23 || mm < 0 || mm > 59) return false;
    *minutes = hh * 60 + mm;
    return true;
}

inline double normalize_direction(double deg) {
    deg = std::fmod(deg, 360.0);
    if (deg < 0.0) deg += 360.0;
    return deg;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(';', start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

inline std::optional<TelemetryRecord> parse_row(std::string_view line, const ColumnSchema& schema,
                                                std::string* reason) {
    const std::vector<std::string_view> fields = split_fields(line);
    if (static_cast<int>(fields.size()) != schema.field_count()) {
        *reason = "wrong field count";
        return std::nullopt;
    }
    const auto field = [&](int idx) { return fields[static_cast<std::size_t>(idx)]; };

    TelemetryRecord rec;
    if (!parse_time_of_day(field(schema.time), &rec.time_of_day)) {
        *reason = "bad time";
        return std::nullopt;
    }
    if (!parse_number(field(schema.power), &rec.power_kw)) {
        *reason = "bad number";
        return std::nullopt;
    }
    struct SpeedField {
        int idx;
        double* dst;
    };
    for (const SpeedField& f : {SpeedField{schema.ws_nacelle, &rec.wind_speed_nacelle},
                                SpeedField{schema.ws_10m, &rec.wind_speed_10m},
                                SpeedField{schema.ws_50m, &rec.wind_speed_50m}}) {
        if (!parse_number(field(f.idx), f.dst)) {
            *reason = "bad number";
            return std::nullopt;
        }
        if (*f.dst < 0.0) {
            *reason = "negative wind speed";
            return std::nullopt;
        }
    }
    for (const SpeedField& f : {SpeedField{schema.wd_nacelle, &rec.wind_dir_nacelle},
                                SpeedField{schema.wd_10m, &rec.wind_dir_10m},
                                SpeedField{schema.wd_50m, &rec.wind_dir_50m}}) {
        if (!parse_number(field(f.idx), f.dst)) {
            *reason = "bad number";
            return std::nullopt;
        }
        *f.dst = normalize_direction(*f.dst);
    }
    return rec;
}

}  // namespace detail

/// Streams a telemetry CSV: one header line skipped, malformed rows counted
/// and dropped. Throws io_error if the file cannot be read and
/// empty_dataset_error when no row is accepted.
inline std::pair<std::vector<TelemetryRecord>, IngestReport> load_csv(
    const std::filesystem::path& path, const ColumnSchema& schema = {}) {
    std::ifstream in(path);
    if (!in.is_open()) throw io_error("cannot open " + path.string());

    std::vector<TelemetryRecord> records;
    IngestReport report;
    std::string line;
    bool header_skipped = false;
    while (std::getline(in, line)) {
        if (!header_skipped) {
            header_skipped = true;
            continue;
        }
        std::string_view view = detail::trim(line);
        if (view.empty()) continue;
        ++report.rows_read;
        std::string reason;
        if (std::optional<TelemetryRecord> rec = detail::parse_row(line, schema, &reason)) {
            records.push_back(*rec);
            ++report.rows_accepted;
        } else {
            ++report.rows_rejected;
            ++report.rejection_reasons[reason];
        }
    }
    if (in.bad()) throw io_error("read failure on " + path.string());
    if (records.empty())
        throw empty_dataset_error("no usable rows in " + path.string() + " (" +
                                  std::to_string(report.rows_read) + " read, " +
                                  std::to_string(report.rows_rejected) + " rejected)");
    return {std::move(records), std::move(report)};
}

/// Projects one wind-speed column onto a Sample labeled with the column name.
inline Sample extract_sample(std::span<const TelemetryRecord> records, SpeedColumn column,
                             std::string_view origin = {}) {
    if (records.empty()) throw empty_dataset_error("extract_sample: no records");
    std::vector<double> values;
    values.reserve(records.size());
    for (const TelemetryRecord& rec : records) {
        switch (column) {
            case SpeedColumn::Nacelle: values.push_back(rec.wind_speed_nacelle); break;
            case SpeedColumn::TenMeters: values.push_back(rec.wind_speed_10m); break;
            case SpeedColumn::FiftyMeters: values.push_back(rec.wind_speed_50m); break;
        }
    }
    std::string label(speed_column_name(column));
    if (!origin.empty()) label = std::string(origin) + ":" + label;
    return Sample(std::move(values), std::move(label));
}

/// Re-serializes records in the given schema (header line included); a
/// re-parse of the output compares equal to the input.
inline std::string serialize_records(std::span<const TelemetryRecord> records,
                                     const ColumnSchema& schema = {}) {
    const int count = schema.field_count();
    std::vector<std::string> header(static_cast<std::size_t>(count));
    const auto set_header = [&](int idx, const char* name) {
        header[static_cast<std::size_t>(idx)] = name;
    };
    set_header(schema.time, "T");
    set_header(schema.power, "power_kw");
    set_header(schema.ws_nacelle, "wind_speed_nacelle");
    set_header(schema.wd_nacelle, "wind_dir_nacelle");
    set_header(schema.ws_10m, "wind_speed_10m");
    set_header(schema.wd_10m, "wind_dir_10m");
    set_header(schema.ws_50m, "wind_speed_50m");
    set_header(schema.wd_50m, "wind_dir_50m");

    std::string out;
    for (int i = 0; i < count; ++i) {
        if (i > 0) out += ';';
        out += header[static_cast<std::size_t>(i)];
    }
    out += '\n';

    char buf[64];
    std::vector<std::string> fields(static_cast<std::size_t>(count));
    for (const TelemetryRecord& rec : records) {
        const auto put = [&](int idx, double v) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            fields[static_cast<std::size_t>(idx)] = buf;
        };
        std::snprintf(buf, sizeof buf, "%02d:%02d", rec.time_of_day / 60, rec.time_of_day % 60);
        fields[static_cast<std::size_t>(schema.time)] = buf;
        put(schema.power, rec.power_kw);
        put(schema.ws_nacelle, rec.wind_speed_nacelle);
        put(schema.wd_nacelle, rec.wind_dir_nacelle);
        put(schema.ws_10m, rec.wind_speed_10m);
        put(schema.wd_10m, rec.wind_dir_10m);
        put(schema.ws_50m, rec.wind_speed_50m);
        put(schema.wd_50m, rec.wind_dir_50m);
        for (int i = 0; i < count; ++i) {
            if (i > 0) out += ';';
            out += fields[static_cast<std::size_t>(i)];
        }
        out += '\n';
    }
    return out;
}

/// Most frequent gap between consecutive timestamps, in minutes, with wrap
/// across midnight; the study cadence is 10.
inline std::optional<int> cadence_mode_minutes(std::span<const TelemetryRecord> records) {
    if (records.size() < 2) return std::nullopt;
    std::map<int, std::size_t> histogram;
    for (std::size_t i = 1; i < records.size(); ++i) {
        int delta = records[i].time_of_day - records[i - 1].time_of_day;
        delta = ((delta % 1440) + 1440) % 1440;
        ++histogram[delta];
    }
    const auto best = std::max_element(
        histogram.begin(), histogram.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    return best->first;
}

}  // namespace windfit
