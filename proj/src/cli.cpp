#include "lindley/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "lindley/errors.hpp"

namespace lindley::cli {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return out;
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return std::string(s.substr(first, last - first + 1));
}

std::string params_text(const DistributionSpec& spec) {
    const auto names = parameter_names(spec.family());
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ' ';
        out += std::string(names[i]) + '=' + format_number(spec[i]);
    }
    return out;
}

nlohmann::json params_json(const DistributionSpec& spec) {
    nlohmann::json j = nlohmann::json::object();
    const auto names = parameter_names(spec.family());
    for (std::size_t i = 0; i < names.size(); ++i) j[std::string(names[i])] = spec[i];
    return j;
}

std::vector<MassCatalog> load_inputs(const RunConfig& config, std::ostream& err) {
    std::vector<MassCatalog> out;
    for (const auto& in : config.inputs) {
        LoadResult r = load_csv(in.path, in.column, CsvOptions{config.skip_invalid});
        for (const auto& row : r.rejected) {
            err << in.path.string() << ':' << row.line << ": skipped (" << row.reason << ")\n";
        }
        out.push_back(std::move(r.catalog));
    }
    return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream f(path);
    if (!f) throw DataError("cannot write " + path.string());
    f << body;
    if (!f) throw DataError("write failed: " + path.string());
}

void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw DataError("cannot create " + dir.string() + ": " + ec.message());
}

std::string full(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

}  // namespace

std::optional<OutputFormat> format_from_string(std::string_view name) {
    const std::string n = lower(name);
    if (n == "text") return OutputFormat::Text;
    if (n == "csv") return OutputFormat::Csv;
    if (n == "json") return OutputFormat::Json;
    return std::nullopt;
}

std::vector<Family> parse_families(const std::string& list) {
    std::vector<Family> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        if (lower(item) == "all") {
            for (Family f : kAllFamilies) {
                if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
            }
            continue;
        }
        const auto f = family_from_string(item);
        if (!f) throw ConfigError("unknown family '" + item + "'");
        if (std::find(out.begin(), out.end(), *f) == out.end()) out.push_back(*f);
    }
    return out;
}

void validate(const RunConfig& config) {
    if (config.inputs.empty()) throw ConfigError("no input files given");
    if (config.families.empty()) throw ConfigError("family list is empty");
    int k_max = 0;
    for (Family f : config.families) k_max = std::max(k_max, parameter_count(f));
    if (config.n_bins <= k_max) {
        throw ConfigError("bins (" + std::to_string(config.n_bins) +
                          ") must exceed the largest parameter count (" + std::to_string(k_max) + ")");
    }
}

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    std::ostringstream os;
    os << std::setprecision(4) << value;
    return os.str();
}

std::optional<std::size_t> select_best(std::span<const FamilyFit> rows) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].ok()) continue;
        if (!best) {
            best = i;
            continue;
        }
        const FitReport& a = *rows[i].report;
        const FitReport& b = *rows[*best].report;
        if (a.p_ks > b.p_ks || (a.p_ks == b.p_ks && a.aic < b.aic)) best = i;
    }
    return best;
}

CatalogFit fit_catalog(const MassCatalog& catalog, std::span<const Family> families, int n_bins) {
    CatalogFit fit;
    fit.name = catalog.name;
    fit.summary = summarize(catalog.masses);
    fit.n_bins = n_bins;
    const MomentTargets targets = moment_targets(fit.summary);
    for (Family f : families) {
        FamilyFit row{f, std::nullopt, std::nullopt, {}};
        try {
            row.solve = estimate(f, targets);
            row.report = full_report(catalog.masses, row.solve->spec, n_bins);
        } catch (const std::exception& e) {
            row.report.reset();
            row.error = e.what();
        }
        fit.rows.push_back(std::move(row));
    }
    fit.best = select_best(fit.rows);
    return fit;
}

nlohmann::json to_json(const CatalogFit& fit) {
    nlohmann::json j;
    j["catalog"] = fit.name;
    j["n"] = fit.summary.n;
    j["summary"] = {{"xbar", fit.summary.xbar},
                    {"s2", fit.summary.s2},
                    {"raw_moments", fit.summary.raw_moments},
                    {"x_min", fit.summary.x_min},
                    {"x_max", fit.summary.x_max}};
    j["n_bins"] = fit.n_bins;
    j["best"] = fit.best ? nlohmann::json(std::string(to_string(fit.rows[*fit.best].family)))
                         : nlohmann::json(nullptr);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : fit.rows) {
        nlohmann::json r;
        r["family"] = std::string(to_string(row.family));
        r["ok"] = row.ok();
        if (row.ok()) {
            const FitReport& rep = *row.report;
            r["params"] = params_json(rep.spec);
            r["k"] = rep.k_params;
            r["chi2"] = rep.chi2;
            r["chi2_red"] = rep.chi2_red;
            r["q"] = rep.q;
            r["aic"] = rep.aic;
            r["d"] = rep.d;
            r["p_ks"] = rep.p_ks;
            r["iterations"] = row.solve->iterations;
            nlohmann::json alts = nlohmann::json::array();
            for (const auto& alt : row.solve->alternatives) alts.push_back(params_json(alt));
            r["alternatives"] = alts;
        } else {
            r["error"] = row.error;
        }
        rows.push_back(std::move(r));
    }
    j["fits"] = rows;
    return j;
}

std::string format_text(const CatalogFit& fit) {
    std::ostringstream os;
    os << "catalog " << fit.name << "  n=" << fit.summary.n << "  mean=" << format_number(fit.summary.xbar)
       << "  var=" << format_number(fit.summary.s2) << "  range=[" << format_number(fit.summary.x_min) << ", "
       << format_number(fit.summary.x_max) << "]  bins=" << fit.n_bins << '\n';
    os << std::left << std::setw(11) << "family" << std::setw(34) << "parameters" << std::right
       << std::setw(11) << "AIC" << std::setw(11) << "chi2_red" << std::setw(11) << "Q" << std::setw(11)
       << "D" << std::setw(11) << "P_KS" << '\n';
    for (std::size_t i = 0; i < fit.rows.size(); ++i) {
        const auto& row = fit.rows[i];
        os << std::left << std::setw(11) << to_string(row.family);
        if (!row.ok()) {
            os << "failed: " << row.error << '\n';
            continue;
        }
        const FitReport& r = *row.report;
        os << std::setw(34) << params_text(r.spec) << std::right << std::setw(11) << format_number(r.aic)
           << std::setw(11) << format_number(r.chi2_red) << std::setw(11) << format_number(r.q)
           << std::setw(11) << format_number(r.d) << std::setw(11) << format_number(r.p_ks);
        if (fit.best && *fit.best == i) os << "  *";
        os << '\n';
    }
    return os.str();
}

std::string format_csv(const CatalogFit& fit) {
    std::ostringstream os;
    os << "catalog,family,ok,params,k,chi2,chi2_red,q,aic,d,p_ks,best,error\n";
    for (std::size_t i = 0; i < fit.rows.size(); ++i) {
        const auto& row = fit.rows[i];
        os << fit.name << ',' << to_string(row.family) << ',' << (row.ok() ? 1 : 0) << ',';
        if (row.ok()) {
            const FitReport& r = *row.report;
            std::string p;
            for (std::size_t k = 0; k < r.spec.params().size(); ++k) {
                if (k) p += ';';
                p += full(r.spec[k]);
            }
            os << p << ',' << r.k_params << ',' << full(r.chi2) << ',' << full(r.chi2_red) << ','
               << full(r.q) << ',' << full(r.aic) << ',' << full(r.d) << ',' << full(r.p_ks) << ','
               << ((fit.best && *fit.best == i) ? 1 : 0) << ",\n";
        } else {
            std::string msg = row.error;
            std::replace(msg.begin(), msg.end(), '"', '\'');
            os << ",,,,,,,,0,\"" << msg << "\"\n";
        }
    }
    return os.str();
}

int cmd_fit(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::vector<MassCatalog> catalogs;
    try {
        validate(config);
        catalogs = load_inputs(config, err);
        if (!config.out_dir.empty()) ensure_dir(config.out_dir);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const DataError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitConfigError;
    }

    bool any_failed = false;
    std::vector<CatalogFit> fits;
    nlohmann::json all = nlohmann::json::array();
    for (const auto& cat : catalogs) {
        CatalogFit fit;
        try {
            fit = fit_catalog(cat, config.families, config.n_bins);
        } catch (const DataError& e) {
            err << cat.name << ": " << e.what() << '\n';
            return kExitConfigError;
        }
        for (const auto& row : fit.rows) {
            if (!row.ok()) {
                any_failed = true;
                err << cat.name << ": " << to_string(row.family) << " failed: " << row.error << '\n';
            }
        }
        const nlohmann::json j = to_json(fit);
        switch (config.format) {
            case OutputFormat::Text: out << format_text(fit) << '\n'; break;
            case OutputFormat::Csv: out << format_csv(fit); break;
            case OutputFormat::Json: all.push_back(j); break;
        }
        if (!config.out_dir.empty()) {
            try {
                write_text_file(config.out_dir / (fit.name + "_fit.json"), j.dump(2) + '\n');
                write_text_file(config.out_dir / (fit.name + "_fit.csv"), format_csv(fit));
            } catch (const DataError& e) {
                err << "output error: " << e.what() << '\n';
                return kExitConfigError;
            }
        }
        fits.push_back(std::move(fit));
    }

    if (config.format == OutputFormat::Json) out << all.dump(2) << '\n';
    if (config.format == OutputFormat::Text && fits.size() > 1) {
        out << "Best fits\n";
        for (const auto& fit : fits) {
            out << "  " << std::left << std::setw(24) << fit.name;
            if (fit.best) {
                const FitReport& r = *fit.rows[*fit.best].report;
                out << std::setw(11) << to_string(r.spec.family()) << "P_KS=" << format_number(r.p_ks)
                    << "  AIC=" << format_number(r.aic) << '\n';
            } else {
                out << "no successful fit\n";
            }
        }
    }
    return any_failed ? kExitPartialFailure : kExitOk;
}

int cmd_plotdata(const RunConfig& config, Family family, std::ostream& out, std::ostream& err) {
    std::vector<MassCatalog> catalogs;
    try {
        RunConfig c = config;
        c.families = {family};
        validate(c);
        if (config.out_dir.empty()) throw ConfigError("plotdata needs an output directory");
        catalogs = load_inputs(config, err);
        ensure_dir(config.out_dir);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const DataError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitConfigError;
    }

    bool any_failed = false;
    for (const auto& cat : catalogs) {
        const std::string stem = cat.name + "_" + lower(to_string(family));
        std::optional<DistributionSpec> spec;
        BinnedHistogram hist;
        try {
            hist = bin_sample(cat.masses, config.n_bins);
            spec = estimate(family, moment_targets(summarize(cat.masses))).spec;
        } catch (const std::exception& e) {
            err << cat.name << ": " << to_string(family) << " failed: " << e.what() << '\n';
            any_failed = true;
            continue;
        }

        std::ostringstream h;
        h << "bin_lo,bin_hi,count,density\n";
        const double n = static_cast<double>(hist.total);
        for (std::size_t i = 0; i < hist.n_bins(); ++i) {
            h << full(hist.edges[i]) << ',' << full(hist.edges[i + 1]) << ',' << hist.counts[i] << ','
              << full(static_cast<double>(hist.counts[i]) / (n * hist.width(i))) << '\n';
        }

        std::ostringstream curve;
        curve << "x,pdf,cdf\n";
        const double lo = hist.edges.front();
        const double hi = hist.edges.back();
        for (std::size_t i = 0; i < kCurvePoints; ++i) {
            const double x = lo + (hi - lo) * static_cast<double>(i) / (kCurvePoints - 1);
            curve << full(x) << ',' << full(pdf(*spec, x)) << ',' << full(cdf(*spec, x)) << '\n';
        }

        std::vector<double> sorted = cat.masses;
        std::sort(sorted.begin(), sorted.end());
        std::ostringstream ecdf;
        ecdf << "x,ecdf,model_cdf\n";
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            ecdf << full(sorted[i]) << ',' << full(static_cast<double>(i + 1) / n) << ','
                 << full(cdf(*spec, sorted[i])) << '\n';
        }

        try {
            write_text_file(config.out_dir / (stem + "_hist.csv"), h.str());
            write_text_file(config.out_dir / (stem + "_curve.csv"), curve.str());
            write_text_file(config.out_dir / (stem + "_ecdf.csv"), ecdf.str());
        } catch (const DataError& e) {
            err << "output error: " << e.what() << '\n';
            return kExitConfigError;
        }
        out << "wrote " << (config.out_dir / stem).string() << "_{hist,curve,ecdf}.csv\n";
    }
    return any_failed ? kExitPartialFailure : kExitOk;
}

int cmd_synth(Family family, const std::vector<double>& params, std::size_t n, std::uint64_t seed,
              const std::filesystem::path& out_file, std::ostream& err) {
    try {
        if (n < 1) throw ConfigError("sample size must be positive");
        const DistributionSpec spec(family, params);
        const std::vector<double> xs = sample(spec, n, seed);
        if (out_file.has_parent_path()) ensure_dir(out_file.parent_path());
        write_mass_csv(out_file, xs);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const ParameterError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const DataError& e) {
        err << "output error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const Error& e) {
        err << "synth failed: " << e.what() << '\n';
        return kExitPartialFailure;
    }
    return kExitOk;
}

}  // namespace lindley::cli
