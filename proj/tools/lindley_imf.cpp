// lindley-imf: fit Lindley-type mass functions to stellar mass catalogs.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lindley/cli.hpp"
#include "lindley/errors.hpp"

namespace cli = lindley::cli;

int main(int argc, char** argv) {
    CLI::App app{"Fit Lindley-type distributions to stellar mass catalogs"};
    app.require_subcommand(1);

    std::vector<std::string> inputs;
    std::string column = "0";
    std::string families = "all";
    int bins = lindley::kDefaultBins;
    std::string format = "text";
    std::string out_dir;
    std::uint64_t seed = 42;
    bool skip_invalid = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-i,--input", inputs, "CSV file(s) with one mass per row")->required();
        sub->add_option("-c,--column", column, "column name or zero-based index")->capture_default_str();
        sub->add_option("--bins", bins, "histogram bins")->capture_default_str();
        sub->add_option("-o,--out", out_dir, "directory for report files");
        sub->add_option("--seed", seed, "random seed")->capture_default_str();
        sub->add_flag("--skip-invalid", skip_invalid, "drop bad rows instead of failing");
    };

    CLI::App* fit = app.add_subcommand("fit", "estimate parameters and goodness-of-fit statistics");
    add_common(fit);
    fit->add_option("-f,--families", families, "comma-separated families, or 'all'")->capture_default_str();
    fit->add_option("--format", format, "text, csv or json")->capture_default_str();

    std::string family = "lindley1";
    CLI::App* plot = app.add_subcommand("plotdata", "write histogram, fitted curve and ECDF as CSV");
    add_common(plot);
    plot->add_option("-f,--family", family, "family to fit")->capture_default_str();

    std::vector<double> params;
    std::size_t n = 1000;
    std::string synth_out;
    CLI::App* synth = app.add_subcommand("synth", "draw a synthetic mass catalog");
    synth->add_option("-f,--family", family, "family to sample")->required();
    synth->add_option("-p,--params", params, "parameters in family order")->required();
    synth->add_option("-n,--n", n, "sample size")->capture_default_str();
    synth->add_option("--seed", seed, "random seed")->capture_default_str();
    synth->add_option("-o,--out", synth_out, "output CSV file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::kExitConfigError;
    }

    try {
        if (*synth) {
            const auto f = lindley::family_from_string(family);
            if (!f) throw lindley::ConfigError("unknown family '" + family + "'");
            return cli::cmd_synth(*f, params, n, seed, synth_out, std::cerr);
        }

        cli::RunConfig config;
        const lindley::ColumnSelector col = lindley::parse_column_selector(column);
        for (const auto& in : inputs) config.inputs.push_back({in, col});
        config.n_bins = bins;
        config.out_dir = out_dir;
        config.seed = seed;
        config.skip_invalid = skip_invalid;

        if (*fit) {
            config.families = cli::parse_families(families);
            const auto fmt = cli::format_from_string(format);
            if (!fmt) throw lindley::ConfigError("unknown format '" + format + "'");
            config.format = *fmt;
            return cli::cmd_fit(config, std::cout, std::cerr);
        }
        const auto f = lindley::family_from_string(family);
        if (!f) throw lindley::ConfigError("unknown family '" + family + "'");
        return cli::cmd_plotdata(config, *f, std::cout, std::cerr);
    } catch (const lindley::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return cli::kExitConfigError;
    }
}
