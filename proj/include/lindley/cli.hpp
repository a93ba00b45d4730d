#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lindley/catalog.hpp"
#include "lindley/distribution.hpp"
#include "lindley/estimation.hpp"
#include "lindley/gof.hpp"

namespace lindley::cli {

enum class OutputFormat { Text, Csv, Json };

std::optional<OutputFormat> format_from_string(std::string_view name);

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPartialFailure = 1;
inline constexpr int kExitConfigError = 2;

struct InputSpec {
    std::filesystem::path path;
    ColumnSelector column = std::size_t{0};
};

struct RunConfig {
    std::vector<InputSpec> inputs;
    std::vector<Family> families{kAllFamilies.begin(), kAllFamilies.end()};
    int n_bins = kDefaultBins;
    std::filesystem::path out_dir;  // empty: nothing written to disk
    OutputFormat format = OutputFormat::Text;
    std::uint64_t seed = 42;
    bool skip_invalid = false;
};

/// Throws ConfigError on an empty family list, too few bins for the largest
/// selected family, or no inputs.
void validate(const RunConfig& config);

/// Parses "lindley1,tpld,dtl" (or "all"). Throws ConfigError on unknown names.
std::vector<Family> parse_families(const std::string& list);

/// Estimation and statistics for one family; `error` is set instead of the
/// optionals when either step failed.
struct FamilyFit {
    Family family;
    std::optional<SolveReport> solve;
    std::optional<FitReport> report;
    std::string error;

    bool ok() const { return report.has_value(); }
};

struct CatalogFit {
    std::string name;
    SampleSummary summary;
    int n_bins = kDefaultBins;
    std::vector<FamilyFit> rows;     // in the requested family order
    std::optional<std::size_t> best;  // index into rows
};

/// Highest P_KS, ties broken by the lowest AIC.
std::optional<std::size_t> select_best(std::span<const FamilyFit> rows);

CatalogFit fit_catalog(const MassCatalog& catalog, std::span<const Family> families,
                       int n_bins = kDefaultBins);

nlohmann::json to_json(const CatalogFit& fit);
std::string format_text(const CatalogFit& fit);
std::string format_csv(const CatalogFit& fit);

/// Number formatting used by the text table (4 significant digits).
std::string format_number(double value);

/// Fits every selected family to every input and prints one table per
/// catalog. Writes <name>_fit.json and <name>_fit.csv to out_dir when set.
/// Returns kExitOk when every row succeeded, kExitPartialFailure when any
/// family failed to fit, kExitConfigError on configuration or I/O errors.
int cmd_fit(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Writes histogram steps, a 512-point fitted PDF/CDF curve and the empirical
/// CDF of each input as CSV files under out_dir.
int cmd_plotdata(const RunConfig& config, Family family, std::ostream& out, std::ostream& err);

inline constexpr std::size_t kCurvePoints = 512;

/// Draws n samples from family(params) and writes them as a one-column CSV.
int cmd_synth(Family family, const std::vector<double>& params, std::size_t n, std::uint64_t seed,
              const std::filesystem::path& out_file, std::ostream& err);

}  // namespace lindley::cli
