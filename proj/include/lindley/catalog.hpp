#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace lindley {

/// A named list of stellar masses (solar units). All masses are finite and > 0.
struct MassCatalog {
    std::string name;
    std::vector<double> masses;
};

struct SampleSummary {
    std::size_t n = 0;
    double xbar = 0.0;
    /// Unbiased (n - 1) sample variance.
    double s2 = 0.0;
    /// (1/n) sum x^r for r = 1..4; raw_moments[0] == xbar.
    std::vector<double> raw_moments;
    double x_min = 0.0;
    double x_max = 0.0;
};

/// Mean, unbiased variance (two-pass), raw moments and extremes.
/// Throws DataError when fewer than two values are given.
SampleSummary summarize(std::span<const double> masses);
inline SampleSummary summarize(const MassCatalog& cat) { return summarize(cat.masses); }

/// Column by header name or zero-based index.
using ColumnSelector = std::variant<std::string, std::size_t>;

/// Parses "3" as an index and anything else as a header name.
ColumnSelector parse_column_selector(const std::string& text);

struct CsvOptions {
    /// Drop rows with missing or nonpositive masses instead of failing.
    bool skip_invalid = false;
};

struct RejectedRow {
    std::size_t line = 0;  // 1-based line number in the file
    std::string reason;
};

struct LoadResult {
    MassCatalog catalog;
    std::vector<RejectedRow> rejected;
};

/// Reads one column of a comma-separated file. Lines starting with '#' and
/// blank lines are skipped; a header row is optional (required when the
/// column is selected by name). The catalog is named after the file stem.
///
/// Throws DataError on I/O failure, a missing column, an empty result, or
/// (unless `skip_invalid`) any row that is missing, unparsable or nonpositive;
/// the message lists every offending line.
LoadResult load_csv(const std::filesystem::path& path, const ColumnSelector& column,
                    const CsvOptions& options = {});

/// Writes a one-column CSV with a "mass" header.
void write_mass_csv(const std::filesystem::path& path, std::span<const double> masses);

}  // namespace lindley
