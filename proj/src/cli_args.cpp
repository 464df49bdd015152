#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aoi/cli.hpp"
#include "aoi/errors.hpp"

namespace aoi::cli {

namespace {

// Everything parseable from the command line; optionals so that config-file
// values survive unless a flag was actually given.
struct Flags {
    std::string config;
    std::vector<std::string> protocols;
    std::vector<int> n_list;
    std::optional<int> k;
    std::optional<int> payload;
    std::optional<double> prob;       // --prob / --q / --omega / --pi
    std::optional<double> q;
    std::optional<double> omega;
    std::optional<double> pi;
    std::vector<double> probs;
    std::vector<double> budgets;
    std::optional<double> tpk;
    std::optional<double> tr;
    std::optional<double> power;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> rounds;
    std::optional<std::int64_t> warmup;
    std::string out_dir;
    std::string out_file;
    std::string format;
    std::string preset;
    std::string phy_config;
    bool symbol_alignment = false;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--config", f.config, "JSON config file applied before flags");
    sub->add_option("--protocol", f.protocols, "protocol(s): sa, fsa, rta")
        ->delimiter(',');
    sub->add_option("--n", f.n_list, "number of sensors (repeatable)")->delimiter(',');
    sub->add_option("--k", f.k, "slots per frame (fsa) / data slots per round (rta)");
    sub->add_option("--payload", f.payload, "payload size in bytes");
    sub->add_option("--prob", f.prob, "access probability");
    sub->add_option("--q", f.q, "access probability (slotted aloha alias)");
    sub->add_option("--omega", f.omega, "access probability (frame slotted aloha alias)");
    sub->add_option("--pi", f.pi, "request probability (request-then-access alias)");
    sub->add_option("--tpk", f.tpk, "packet airtime override (time units)");
    sub->add_option("--tr", f.tr, "request-slot airtime override (time units)");
    sub->add_option("--power", f.power, "transmit power P (default 1)");
    sub->add_option("--seed", f.seed, "rng seed");
    sub->add_option("--rounds", f.rounds, "simulated rounds/frames");
    sub->add_option("--warmup", f.warmup, "warmup rounds excluded from statistics");
    sub->add_option("--out", f.out_file, "output file (overrides default name)");
    sub->add_option("--out-dir", f.out_dir, "output directory (or $AOIKIT_OUT_DIR)");
    sub->add_option("--format", f.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--phy-config", f.phy_config, "JSON file with PHY timing fields");
    sub->add_flag("--symbol-alignment", f.symbol_alignment,
                  "round airtimes up to the 4us symbol grid");
}

ExperimentSpec build_spec(Command command, const Flags& f) {
    ExperimentSpec spec;
    spec.command = command;
    if (!f.config.empty()) apply_config_file(spec, f.config);
    if (!f.phy_config.empty()) spec.phy = load_phy_config(f.phy_config);
    if (f.symbol_alignment) spec.phy.symbol_alignment = true;
    if (!f.protocols.empty()) {
        spec.protocols.clear();
        for (const std::string& p : f.protocols)
            spec.protocols.push_back(protocol_from_name(p));
    }
    if (spec.protocols.empty())
        throw ConfigError("no protocol selected; pass --protocol sa|fsa|rta");
    if (!f.n_list.empty()) spec.n_list = f.n_list;
    if (f.k) spec.k = *f.k;
    if (f.payload) spec.payload_bytes = *f.payload;
    int prob_flags = int(f.prob.has_value()) + int(f.q.has_value()) +
                     int(f.omega.has_value()) + int(f.pi.has_value());
    if (prob_flags > 1)
        throw ConfigError("give at most one of --prob, --q, --omega, --pi");
    if (f.prob) spec.access_prob = *f.prob;
    if (f.q) spec.access_prob = *f.q;
    if (f.omega) spec.access_prob = *f.omega;
    if (f.pi) spec.access_prob = *f.pi;
    if (!f.probs.empty()) spec.prob_grid = f.probs;
    if (!f.budgets.empty()) spec.budget_grid = f.budgets;
    if (f.tpk) spec.t_pk_override = *f.tpk;
    if (f.tr) spec.t_r_override = *f.tr;
    if (f.power) spec.tx_power = *f.power;
    if (f.seed) spec.seed = *f.seed;
    if (f.rounds) spec.rounds = *f.rounds;
    if (f.warmup) spec.warmup = *f.warmup;
    if (!f.out_dir.empty()) spec.out_dir = f.out_dir;
    if (!f.out_file.empty()) spec.out_file = f.out_file;
    if (!f.format.empty())
        spec.format = f.format == "json" ? OutputFormat::json : OutputFormat::csv;
    if (!f.preset.empty()) spec.preset = f.preset;

    if (spec.rounds <= spec.warmup)
        throw ConfigError("--rounds must exceed --warmup");
    for (int n : spec.n_list)
        if (n < 1) throw ConfigError("--n must be at least 1");
    return spec;
}

}  // namespace

int main_with_args(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"aoikit: age-of-information analysis for random-access protocols"};
    app.require_subcommand(1);

    struct SubDef {
        Command command;
        const char* name;
        const char* help;
    };
    const SubDef defs[] = {
        {Command::report, "report", "closed-form age/power/load for one configuration"},
        {Command::simulate, "simulate", "Monte Carlo estimate for one configuration"},
        {Command::sweep, "sweep", "analytic curves over an access-probability grid"},
        {Command::frontier, "frontier", "minimal age versus power budget"},
        {Command::validate, "validate", "simulation vs closed form with confidence bounds"},
        {Command::figures, "figures", "canned experiment presets (fig4a..fig10, all)"},
    };

    Flags flags[6];
    Command chosen{};
    bool have = false;
    for (std::size_t i = 0; i < 6; ++i) {
        CLI::App* sub = app.add_subcommand(defs[i].name, defs[i].help);
        add_common(sub, flags[i]);
        if (defs[i].command == Command::sweep) {
            sub->add_option("--probs", flags[i].probs, "explicit probability grid")
                ->delimiter(',');
        }
        if (defs[i].command == Command::frontier) {
            sub->add_option("--budgets", flags[i].budgets,
                            "power budgets, ascending fractions of P")
                ->delimiter(',');
        }
        if (defs[i].command == Command::figures) {
            sub->add_option("preset", flags[i].preset,
                            "fig4a|fig4b|fig7|fig8|fig9|fig10|all");
        }
        Command c = defs[i].command;
        sub->callback([&chosen, &have, c] {
            chosen = c;
            have = true;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (!have) {
        err << "no subcommand given\n";
        return kExitUsage;
    }

    int idx = 0;
    for (std::size_t i = 0; i < 6; ++i)
        if (defs[i].command == chosen) idx = static_cast<int>(i);

    // figures works on every protocol by itself; give it a default so the
    // common "no protocol selected" check doesn't fire.
    if (chosen == Command::figures && flags[idx].protocols.empty())
        flags[idx].protocols = {"sa", "fsa", "rta"};

    try {
        ExperimentSpec spec = build_spec(chosen, flags[idx]);
        return run(spec, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace aoi::cli
