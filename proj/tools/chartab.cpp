#include <algorithm>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chartab/commands.hpp"

int main(int argc, char** argv) {
    using namespace chartab;
    using namespace chartab::cli;

    CLI::App app{"Character tables of the symmetric groups: parity, sign and divisibility statistics"};
    app.require_subcommand(1);

    GlobalOptions opts;
    std::string cache_dir;
    app.add_option("--threads", opts.threads, "Worker threads (0: all cores)")->capture_default_str();
    app.add_option("--cache-dir", cache_dir, "Statistics cache directory (default: $CHARTAB_CACHE_DIR)");
    app.add_option("--parity-budget", opts.budget.parity_max_n, "Largest n for parity and residue sweeps")
        ->capture_default_str();
    app.add_option("--sign-budget", opts.budget.sign_max_n, "Largest n for exact (sign) sweeps")
        ->capture_default_str();
    app.add_option("--print-limit", opts.print_limit, "Largest n printed by `table`")->capture_default_str();

    int table_n = 0;
    TableFormat table_format = TableFormat::text;
    auto* table = app.add_subcommand("table", "Print the full character table");
    table->add_option("--n", table_n, "Symmetric group degree")->required();
    table->add_option("--format", table_format, "text or csv")
        ->transform(CLI::CheckedTransformer(std::map<std::string, TableFormat>{{"text", TableFormat::text},
                                                                               {"csv", TableFormat::csv}}));

    int stats_n = 0;
    std::vector<std::string> kinds;
    std::vector<int> moduli;
    bool no_cache = false;
    StatsFormat stats_format = StatsFormat::csv;
    auto* stats = app.add_subcommand("stats", "Parity, sign and residue counts over the whole table");
    stats->add_option("--n", stats_n, "Symmetric group degree")->required();
    stats->add_option("--kind", kinds, "parity, signs or residue (repeatable)")
        ->check(CLI::IsMember({"parity", "signs", "residue"}));
    stats->add_option("--d", moduli, "Modulus for residue counts (repeatable)")->check(CLI::Range(2, 1 << 20));
    stats->add_option("--format", stats_format, "csv or json")
        ->transform(CLI::CheckedTransformer(std::map<std::string, StatsFormat>{{"csv", StatsFormat::csv},
                                                                               {"json", StatsFormat::json}}));
    stats->add_flag("--no-cache", no_cache, "Neither read nor write the statistics cache");

    int max_direct = 20;
    int max_indirect = 60;
    VerifyFormat verify_format = VerifyFormat::text;
    auto* verify = app.add_subcommand("verify", "Check the parity theorem and orthogonality; exit 1 on failure");
    verify->add_option("--max-n-direct", max_direct, "Largest n checked against the computed table")
        ->capture_default_str();
    verify->add_option("--max-n-indirect", max_indirect, "Largest n checked by counting partitions")
        ->capture_default_str();
    verify->add_option("--format", verify_format, "text or json")
        ->transform(CLI::CheckedTransformer(std::map<std::string, VerifyFormat>{{"text", VerifyFormat::text},
                                                                                {"json", VerifyFormat::json}}));

    FigureKind which = FigureKind::even_proportion;
    int figure_n = 0;
    std::vector<int> figure_moduli{3, 4, 5, 6, 7};
    auto* figure = app.add_subcommand("figure", "CSV series for plotting");
    figure->add_option("--which", which, "even-proportion, signs or divisibility")
        ->required()
        ->transform(CLI::CheckedTransformer(std::map<std::string, FigureKind>{
            {"even-proportion", FigureKind::even_proportion},
            {"signs", FigureKind::signs},
            {"divisibility", FigureKind::divisibility}}));
    figure->add_option("--max-n", figure_n, "Last n of the series")->required();
    figure->add_option("--d", figure_moduli, "Moduli for the divisibility series")->check(CLI::Range(2, 1 << 20));
    figure->add_option("--format", "Output format (csv only)")->check(CLI::IsMember({"csv"}));

    CLI11_PARSE(app, argc, argv);
    if (!cache_dir.empty())
        opts.cache_dir = cache_dir;

    try {
        if (*table)
            return cmd_table(table_n, table_format, opts, std::cout);
        if (*stats) {
            StatsRequest req;
            for (const auto& k : kinds) {
                req.parity = req.parity || k == "parity";
                req.signs = req.signs || k == "signs";
            }
            req.moduli.insert(moduli.begin(), moduli.end());
            if (std::find(kinds.begin(), kinds.end(), "residue") != kinds.end() && req.moduli.empty())
                throw refusal("--kind residue needs at least one --d");
            if (no_cache)
                opts.cache_policy = CachePolicy::disabled;
            return cmd_stats(stats_n, req, stats_format, opts, std::cout);
        }
        if (*verify)
            return cmd_verify(max_direct, max_indirect, verify_format, opts, std::cout);
        if (*figure)
            return cmd_figure(which, figure_n, std::set<int>(figure_moduli.begin(), figure_moduli.end()), opts,
                              std::cout);
    } catch (const refusal& e) {
        std::cerr << "chartab: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "chartab: error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
