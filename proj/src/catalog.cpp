#include "lindley/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

#include "lindley/errors.hpp"

namespace lindley {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    std::string out(s.substr(first, last - first + 1));
    if (out.size() >= 2 && out.front() == '"' && out.back() == '"') {
        out = out.substr(1, out.size() - 2);
    }
    return out;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
            current.push_back(ch);
        } else if (ch == ',' && !quoted) {
            fields.push_back(trim(current));
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    fields.push_back(trim(current));
    return fields;
}

bool parse_double(const std::string& text, double& out) {
    if (text.empty()) return false;
    const char* begin = text.data();
    const char* end = begin + text.size();
    if (*begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

}  // namespace

SampleSummary summarize(std::span<const double> masses) {
    if (masses.size() < 2) {
        throw DataError("summarize: need at least two values, got " + std::to_string(masses.size()));
    }
    SampleSummary s;
    s.n = masses.size();
    const double n = static_cast<double>(s.n);

    std::vector<double> sums(4, 0.0);
    s.x_min = masses.front();
    s.x_max = masses.front();
    for (double x : masses) {
        double p = x;
        for (double& acc : sums) {
            acc += p;
            p *= x;
        }
        s.x_min = std::min(s.x_min, x);
        s.x_max = std::max(s.x_max, x);
    }
    s.raw_moments.reserve(4);
    for (double acc : sums) s.raw_moments.push_back(acc / n);
    s.xbar = s.raw_moments[0];

    double ss = 0.0;
    for (double x : masses) ss += (x - s.xbar) * (x - s.xbar);
    s.s2 = ss / (n - 1.0);
    return s;
}

ColumnSelector parse_column_selector(const std::string& text) {
    if (!text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
        return static_cast<std::size_t>(std::stoull(text));
    }
    return text;
}

LoadResult load_csv(const std::filesystem::path& path, const ColumnSelector& column,
                    const CsvOptions& options) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());

    LoadResult result;
    result.catalog.name = path.stem().string();

    std::optional<std::size_t> index;
    if (const auto* i = std::get_if<std::size_t>(&column)) index = *i;
    const auto* wanted_name = std::get_if<std::string>(&column);

    bool first_row = true;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto fields = split_fields(line);

        if (first_row) {
            first_row = false;
            if (wanted_name) {
                const auto it = std::find(fields.begin(), fields.end(), *wanted_name);
                if (it == fields.end()) {
                    throw DataError(path.string() + ": no column named '" + *wanted_name + "'");
                }
                index = static_cast<std::size_t>(it - fields.begin());
                continue;
            }
            // Index selection: the first row is a header when its cell is not numeric.
            double probe = 0.0;
            if (*index < fields.size() && !parse_double(fields[*index], probe)) continue;
        }

        if (*index >= fields.size()) {
            result.rejected.push_back({line_no, "missing column " + std::to_string(*index)});
            continue;
        }
        const std::string& cell = fields[*index];
        double value = 0.0;
        if (cell.empty()) {
            result.rejected.push_back({line_no, "missing value"});
        } else if (!parse_double(cell, value) || !std::isfinite(value)) {
            result.rejected.push_back({line_no, "not a number: '" + cell + "'"});
        } else if (!(value > 0.0)) {
            result.rejected.push_back({line_no, "nonpositive mass " + cell});
        } else {
            result.catalog.masses.push_back(value);
        }
    }

    if (!result.rejected.empty() && !options.skip_invalid) {
        std::ostringstream msg;
        msg << path.string() << ": " << result.rejected.size() << " invalid row(s):";
        for (const auto& r : result.rejected) msg << "\n  line " << r.line << ": " << r.reason;
        throw DataError(msg.str());
    }
    if (result.catalog.masses.empty()) {
        throw DataError(path.string() + ": no masses found");
    }
    return result;
}

void write_mass_csv(const std::filesystem::path& path, std::span<const double> masses) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    out << "mass\n" << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (double m : masses) out << m << '\n';
    if (!out) throw DataError("write failed for " + path.string());
}

}  // namespace lindley
