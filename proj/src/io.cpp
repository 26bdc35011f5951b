#include "ilvr/io.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

namespace ilvr::io {

namespace {

using nlohmann::json;

// Appends the raw JSON number text so digits are preserved as printed.
void append_number(std::string& out, double v) { out += format_number(v); }

template <class T>
T parse_field(std::string_view field, std::size_t line) {
    T value{};
    const char* begin = field.data();
    const char* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("line " + std::to_string(line) + ": cannot parse '" + std::string(field) +
                         "'");
    }
    return value;
}

// Splits text into non-empty lines, checks the header and hands back rows of fields.
std::vector<std::vector<std::string_view>> read_rows(std::string_view text,
                                                     std::string_view header,
                                                     std::size_t columns) {
    std::vector<std::vector<std::string_view>> rows;
    std::size_t line_no = 0;
    bool seen_header = false;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (!seen_header) {
            if (line != header) {
                throw ParseError("line " + std::to_string(line_no) + ": expected header '" +
                                 std::string(header) + "'");
            }
            seen_header = true;
            continue;
        }
        std::vector<std::string_view> fields;
        std::size_t start = 0;
        for (;;) {
            const auto comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (fields.size() != columns) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(columns) + " fields, got " +
                             std::to_string(fields.size()));
        }
        rows.push_back(std::move(fields));
    }
    if (!seen_header) {
        throw ParseError("missing header '" + std::string(header) + "'");
    }
    return rows;
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    if (ec != std::errc{}) {
        throw std::runtime_error("number formatting failed");
    }
    return std::string(buf, ptr);
}

std::string path_csv(const PricePath& path) {
    std::string out = "step,price\n";
    for (std::size_t i = 0; i < path.prices.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        append_number(out, path.prices[i]);
        out += '\n';
    }
    return out;
}

PricePath parse_path_csv(std::string_view text) {
    const auto rows = read_rows(text, "step,price", 2);
    std::vector<double> prices;
    prices.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto step = parse_field<std::size_t>(rows[i][0], i + 2);
        if (step != i) {
            throw ParseError("line " + std::to_string(i + 2) + ": steps must be consecutive");
        }
        prices.push_back(parse_field<double>(rows[i][1], i + 2));
    }
    return PricePath::from_prices(std::move(prices));
}

std::string metrics_csv(std::uint64_t seed, const PathMetrics& metrics) {
    std::string out = "seed,il_final,lvr_total\n";
    out += std::to_string(seed);
    out += ',';
    append_number(out, metrics.il_final);
    out += ',';
    append_number(out, metrics.lvr_total);
    out += '\n';
    return out;
}

std::string runs_csv(const std::vector<RunRecord>& runs) {
    std::string out = "run_index,seed,final_price,il_final,lvr_total\n";
    out.reserve(out.size() + runs.size() * 80);
    for (std::size_t i = 0; i < runs.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += std::to_string(runs[i].seed);
        out += ',';
        append_number(out, runs[i].final_price);
        out += ',';
        append_number(out, runs[i].il_final);
        out += ',';
        append_number(out, runs[i].lvr_total);
        out += '\n';
    }
    return out;
}

std::vector<RunRecord> parse_runs_csv(std::string_view text) {
    const auto rows = read_rows(text, "run_index,seed,final_price,il_final,lvr_total", 5);
    std::vector<RunRecord> runs;
    runs.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::size_t line = i + 2;
        if (parse_field<std::size_t>(rows[i][0], line) != i) {
            throw ParseError("line " + std::to_string(line) + ": run indices must be consecutive");
        }
        runs.push_back(RunRecord{
            .seed = parse_field<std::uint64_t>(rows[i][1], line),
            .final_price = parse_field<double>(rows[i][2], line),
            .il_final = parse_field<double>(rows[i][3], line),
            .lvr_total = parse_field<double>(rows[i][4], line),
        });
    }
    return runs;
}

std::string report_json(const EnsembleReport& report) {
    // Emitted by hand: nlohmann prints shortest round-trip digits, the
    // format calls for 17 significant digits.
    std::string out = "{\n";
    out += "  \"metric\": " + json(report.metric).dump() + ",\n";
    out += "  \"mean\": " + format_number(report.mean) + ",\n";
    out += "  \"std_dev\": " + format_number(report.std_dev) + ",\n";
    out += "  \"std_err\": " + format_number(report.std_err) + ",\n";
    out += "  \"median\": " + format_number(report.median) + ",\n";
    out += "  \"runs\": " + std::to_string(report.runs) + ",\n";
    out += "  \"histogram\": {\n    \"edges\": [";
    for (std::size_t i = 0; i < report.histogram.bin_edges.size(); ++i) {
        if (i) out += ", ";
        append_number(out, report.histogram.bin_edges[i]);
    }
    out += "],\n    \"counts\": [";
    for (std::size_t i = 0; i < report.histogram.counts.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(report.histogram.counts[i]);
    }
    out += "]\n  }\n}\n";
    return out;
}

EnsembleReport parse_report_json(std::string_view text) {
    try {
        const json j = json::parse(text);
        EnsembleReport r;
        r.metric = j.at("metric").get<std::string>();
        r.mean = j.at("mean").get<double>();
        r.std_dev = j.at("std_dev").get<double>();
        r.std_err = j.at("std_err").get<double>();
        r.median = j.at("median").get<double>();
        r.runs = j.at("runs").get<std::uint64_t>();
        r.histogram.bin_edges = j.at("histogram").at("edges").get<std::vector<double>>();
        r.histogram.counts = j.at("histogram").at("counts").get<std::vector<std::uint64_t>>();
        if (r.histogram.bin_edges.size() != r.histogram.counts.size() + 1) {
            throw ParseError("report: histogram needs one more edge than counts");
        }
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

std::string curve_csv(const AnalyticCurve& curve) {
    std::string out = "t,value\n";
    for (std::size_t i = 0; i < curve.times.size(); ++i) {
        append_number(out, curve.times[i]);
        out += ',';
        append_number(out, curve.values[i]);
        out += '\n';
    }
    return out;
}

AnalyticCurve parse_curve_csv(std::string_view text, CurveKind kind) {
    const auto rows = read_rows(text, "t,value", 2);
    AnalyticCurve c;
    c.kind = kind;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        c.times.push_back(parse_field<double>(rows[i][0], i + 2));
        c.values.push_back(parse_field<double>(rows[i][1], i + 2));
    }
    return c;
}

std::string density_csv(const std::vector<std::pair<double, double>>& rows) {
    std::string out = "p,density\n";
    for (const auto& [p, d] : rows) {
        append_number(out, p);
        out += ',';
        append_number(out, d);
        out += '\n';
    }
    return out;
}

void write_atomic(const std::filesystem::path& target, std::string_view content) {
    namespace fs = std::filesystem;
    if (target.has_parent_path()) {
        fs::create_directories(target.parent_path());
    }
    std::random_device rd;
    fs::path tmp = target;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ignored;
            fs::remove(tmp, ignored);
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    fs::rename(tmp, target);
}

std::string read_file(const std::filesystem::path& source) {
    std::ifstream in(source, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + source.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace ilvr::io
