#include "aoi/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "aoi/analytic.hpp"
#include "aoi/optimizer.hpp"
#include "aoi/sim.hpp"

namespace aoi::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// One output cell; CSV gets the formatted text, JSON keeps the native type.
struct Cell {
    std::variant<std::string, double, std::int64_t, bool> value;
    Cell(const char* s) : value(std::string(s)) {}
    Cell(std::string s) : value(std::move(s)) {}
    Cell(double d) : value(d) {}
    Cell(int i) : value(static_cast<std::int64_t>(i)) {}
    Cell(std::int64_t i) : value(i) {}
    Cell(bool b) : value(b) {}
};

struct Table {
    std::string schema;  // e.g. "sweep.v1"
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c) {
    if (auto s = std::get_if<std::string>(&c.value)) return *s;
    if (auto d = std::get_if<double>(&c.value)) return fmt_double(*d);
    if (auto i = std::get_if<std::int64_t>(&c.value)) return std::to_string(*i);
    return std::get<bool>(c.value) ? "true" : "false";
}

void write_table(const std::string& path, OutputFormat format, const Table& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    if (format == OutputFormat::csv) {
        out << "# aoikit " << table.schema << "\n";
        for (std::size_t i = 0; i < table.columns.size(); ++i)
            out << (i ? "," : "") << table.columns[i];
        out << "\n";
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << cell_text(row[i]);
            out << "\n";
        }
    } else {
        Json j;
        j["schema"] = table.schema;
        j["rows"] = Json::array();
        for (const auto& row : table.rows) {
            Json obj;
            for (std::size_t i = 0; i < row.size(); ++i) {
                const Cell& c = row[i];
                if (auto s = std::get_if<std::string>(&c.value)) {
                    if (s->empty())
                        obj[table.columns[i]] = nullptr;
                    else
                        obj[table.columns[i]] = *s;
                } else if (auto d = std::get_if<double>(&c.value)) {
                    if (std::isfinite(*d))
                        obj[table.columns[i]] = *d;
                    else
                        obj[table.columns[i]] = nullptr;
                } else if (auto i64 = std::get_if<std::int64_t>(&c.value)) {
                    obj[table.columns[i]] = *i64;
                } else {
                    obj[table.columns[i]] = std::get<bool>(c.value);
                }
            }
            j["rows"].push_back(std::move(obj));
        }
        out << j.dump(1) << "\n";
    }
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

std::string resolved_out_dir(const ExperimentSpec& spec) {
    if (!spec.out_dir.empty()) return spec.out_dir;
    if (const char* env = std::getenv(kOutDirEnvVar); env && *env) return env;
    return ".";
}

std::string out_path(const ExperimentSpec& spec, const std::string& default_stem) {
    std::string name = spec.out_file;
    if (name.empty())
        name = default_stem + (spec.format == OutputFormat::csv ? ".csv" : ".json");
    std::filesystem::path p(name);
    if (p.is_absolute() || name.find('/') != std::string::npos) return name;
    return (std::filesystem::path(resolved_out_dir(spec)) / p).string();
}

std::string preset_path(const ExperimentSpec& spec, const std::string& stem) {
    std::string name = stem + (spec.format == OutputFormat::csv ? ".csv" : ".json");
    return (std::filesystem::path(resolved_out_dir(spec)) / name).string();
}

std::vector<double> linspace_grid(double lo, double hi, int steps) {
    std::vector<double> g;
    g.reserve(steps);
    for (int i = 1; i <= steps; ++i)
        g.push_back(lo + (hi - lo) * static_cast<double>(i) / steps);
    return g;
}

// grid of `steps` values lo, lo+d, ..., hi (inclusive ends)
std::vector<double> closed_grid(double lo, double hi, int steps) {
    std::vector<double> g;
    g.reserve(steps);
    if (steps == 1) return {lo};
    for (int i = 0; i < steps; ++i)
        g.push_back(lo + (hi - lo) * static_cast<double>(i) / (steps - 1));
    return g;
}

int run_report(const ExperimentSpec& spec, std::ostream& out) {
    TimingModel timing = spec_timing(spec);
    Table table;
    table.schema = "report.v1";
    table.columns = {"protocol", "n", "k", "access_prob", "t_pk", "t_r",
                     "avg_aoi", "avg_power", "load"};
    for (Protocol proto : spec.protocols) {
        for (int n : spec.n_list) {
            ProtocolParams params =
                make_params(proto, n, spec.access_prob, spec.k, spec.tx_power);
            ProtocolReport rep = analytic_report(params, timing);
            out << protocol_name(proto) << " N=" << n << " k=" << params.k
                << " prob=" << fmt_double(spec.access_prob)
                << ": avg_aoi=" << fmt_double(rep.avg_aoi)
                << " avg_power=" << fmt_double(rep.avg_power)
                << " load=" << fmt_double(rep.load) << "\n";
            table.rows.push_back({protocol_name(proto), n, params.k,
                                  spec.access_prob, timing.t_pk, timing.t_r,
                                  rep.avg_aoi, rep.avg_power, rep.load});
        }
    }
    if (!spec.out_file.empty()) {
        std::string path = out_path(spec, "report");
        write_table(path, spec.format, table);
        out << "wrote " << path << "\n";
    }
    return kExitOk;
}

int run_simulate(const ExperimentSpec& spec, std::ostream& out) {
    TimingModel timing = spec_timing(spec);
    Table table;
    table.schema = "simulate.v1";
    table.columns = {"protocol", "n", "k", "access_prob", "seed", "rounds",
                     "warmup", "mean_aoi", "aoi_ci", "mean_power", "power_ci",
                     "n_updates", "mean_renewal", "renewal_ci",
                     "mean_round_duration", "elapsed_sim_time", "status"};
    for (Protocol proto : spec.protocols) {
        for (int n : spec.n_list) {
            SimConfig config;
            config.params = make_params(proto, n, spec.access_prob, spec.k, spec.tx_power);
            config.timing = timing;
            config.horizon_rounds = spec.rounds;
            config.warmup_rounds = spec.warmup;
            config.seed = spec.seed;
            AoIStats st;
            std::string status = "ok";
            try {
                st = simulate(config);
            } catch (const NoUpdateError& e) {
                st = e.partial;
                status = "no_update";
                out << protocol_name(proto) << " N=" << n << ": " << e.what() << "\n";
            }
            if (status == "ok")
                out << protocol_name(proto) << " N=" << n << " k=" << config.params.k
                    << " prob=" << fmt_double(spec.access_prob)
                    << ": mean_aoi=" << fmt_double(st.mean_aoi) << " (+-"
                    << fmt_double(st.aoi_ci_halfwidth) << ")"
                    << " mean_power=" << fmt_double(st.mean_power) << " (+-"
                    << fmt_double(st.power_ci_halfwidth) << ")"
                    << " updates=" << st.n_updates << "\n";
            table.rows.push_back({protocol_name(proto), n, config.params.k,
                                  spec.access_prob,
                                  static_cast<std::int64_t>(spec.seed), spec.rounds,
                                  spec.warmup, st.mean_aoi, st.aoi_ci_halfwidth,
                                  st.mean_power, st.power_ci_halfwidth, st.n_updates,
                                  st.mean_renewal, st.renewal_ci_halfwidth,
                                  st.mean_round_duration, st.elapsed_sim_time,
                                  status});
        }
    }
    if (!spec.out_file.empty()) {
        std::string path = out_path(spec, "simulate");
        write_table(path, spec.format, table);
        out << "wrote " << path << "\n";
    }
    return kExitOk;
}

std::vector<double> sweep_grid(const ExperimentSpec& spec) {
    if (!spec.prob_grid.empty()) return spec.prob_grid;
    return linspace_grid(0.0, 1.0, 100);
}

int run_sweep(const ExperimentSpec& spec, std::ostream& out) {
    TimingModel timing = spec_timing(spec);
    Table table;
    table.schema = "sweep.v1";
    table.columns = {"protocol", "access_prob", "load", "avg_aoi", "avg_power"};
    for (Protocol proto : spec.protocols) {
        for (int n : spec.n_list) {
            auto rows = sweep(proto, n, spec.k, timing, spec.tx_power, sweep_grid(spec));
            for (const SweepRow& r : rows)
                table.rows.push_back({protocol_name(proto), r.access_prob, r.load,
                                      r.avg_aoi, r.avg_power});
        }
    }
    std::string path = out_path(spec, "sweep");
    write_table(path, spec.format, table);
    out << "wrote " << path << " (" << table.rows.size() << " rows)\n";
    return kExitOk;
}

std::vector<double> budget_grid(const ExperimentSpec& spec) {
    if (!spec.budget_grid.empty()) return spec.budget_grid;
    return closed_grid(0.01, 0.5, 50);
}

int run_frontier(const ExperimentSpec& spec, std::ostream& out) {
    TimingModel timing = spec_timing(spec);
    Table table;
    table.schema = "frontier.v1";
    table.columns = {"protocol", "n", "power_budget", "best_prob", "min_aoi", "binding"};
    for (Protocol proto : spec.protocols) {
        for (int n : spec.n_list) {
            auto points = frontier(proto, n, spec.k, timing, spec.tx_power, budget_grid(spec));
            for (const FrontierPoint& p : points)
                table.rows.push_back({protocol_name(proto), n, p.power_budget,
                                      p.best_prob, p.min_aoi, p.binding});
        }
    }
    std::string path = out_path(spec, "frontier");
    write_table(path, spec.format, table);
    out << "wrote " << path << " (" << table.rows.size() << " rows)\n";
    return kExitOk;
}

int run_validate(const ExperimentSpec& spec, std::ostream& out) {
    TimingModel timing = spec_timing(spec);
    Table table;
    table.schema = "validate.v1";
    table.columns = {"protocol", "n", "k", "access_prob", "seed", "rounds",
                     "analytic_aoi", "sim_aoi", "aoi_ci", "aoi_pass",
                     "analytic_power", "sim_power", "power_ci", "power_pass",
                     "status"};
    int failures = 0;
    std::size_t total = 0;
    for (Protocol proto : spec.protocols) {
        for (int n : spec.n_list) {
            ++total;
            ProtocolParams params =
                make_params(proto, n, spec.access_prob, spec.k, spec.tx_power);
            ProtocolReport rep = analytic_report(params, timing);
            SimConfig config;
            config.params = params;
            config.timing = timing;
            config.horizon_rounds = spec.rounds;
            config.warmup_rounds = spec.warmup;
            config.seed = spec.seed;
            try {
                AoIStats st = simulate(config);
                bool aoi_pass = std::abs(st.mean_aoi - rep.avg_aoi) <= 4.0 * st.aoi_ci_halfwidth;
                bool power_pass =
                    std::abs(st.mean_power - rep.avg_power) <= 4.0 * st.power_ci_halfwidth;
                if (!aoi_pass || !power_pass) ++failures;
                table.rows.push_back({protocol_name(proto), n, params.k,
                                      spec.access_prob,
                                      static_cast<std::int64_t>(spec.seed),
                                      spec.rounds, rep.avg_aoi, st.mean_aoi,
                                      st.aoi_ci_halfwidth, aoi_pass, rep.avg_power,
                                      st.mean_power, st.power_ci_halfwidth,
                                      power_pass, "ok"});
            } catch (const NoUpdateError& e) {
                ++failures;
                table.rows.push_back({protocol_name(proto), n, params.k,
                                      spec.access_prob,
                                      static_cast<std::int64_t>(spec.seed),
                                      spec.rounds, rep.avg_aoi, "", "", false,
                                      rep.avg_power, "", "", false, "no_update"});
            }
        }
    }
    std::string path = out_path(spec, "validate");
    write_table(path, spec.format, table);
    out << "wrote " << path << "\n";
    if (failures == 0)
        out << "all " << total << " rows pass\n";
    else
        out << failures << " of " << total << " rows FAIL\n";
    return kExitOk;
}

// ---- figures presets ---------------------------------------------------

void preset_fig4(const ExperimentSpec& spec, std::ostream& out, bool frontier_view) {
    // normalized units: t_pk = 1 slot, N = 10, k = 5, SA vs FSA
    TimingModel timing{1.0, 1.0};
    const int n = 10, k = 5;
    if (!frontier_view) {
        Table table;
        table.schema = "fig4a.v1";
        table.columns = {"protocol", "access_prob", "load", "avg_aoi", "avg_power"};
        for (Protocol proto : {Protocol::SA, Protocol::FSA}) {
            int kk = proto == Protocol::SA ? 1 : k;
            // load in packets per slot from 0.02 to 2
            std::vector<double> probs;
            for (double load : linspace_grid(0.0, 2.0, 100))
                probs.push_back(load * kk / n);
            for (const SweepRow& r : sweep(proto, n, kk, timing, spec.tx_power, probs))
                table.rows.push_back({protocol_name(proto), r.access_prob, r.load,
                                      r.avg_aoi, r.avg_power});
        }
        std::string path = preset_path(spec, "fig4a");
        write_table(path, spec.format, table);
        out << "wrote " << path << "\n";
    } else {
        Table table;
        table.schema = "fig4b.v1";
        table.columns = {"protocol", "power_budget", "best_prob", "min_aoi", "binding"};
        std::vector<double> budgets = closed_grid(0.01, 0.5, 50);
        for (Protocol proto : {Protocol::SA, Protocol::FSA}) {
            int kk = proto == Protocol::SA ? 1 : k;
            for (const FrontierPoint& p :
                 frontier(proto, n, kk, timing, spec.tx_power, budgets))
                table.rows.push_back({protocol_name(proto), p.power_budget,
                                      p.best_prob, p.min_aoi, p.binding});
        }
        std::string path = preset_path(spec, "fig4b");
        write_table(path, spec.format, table);
        out << "wrote " << path << "\n";
    }
}

void preset_fig7(const ExperimentSpec& spec, std::ostream& out) {
    // 128-byte payloads, N = 10, k = 5; analytic curves plus simulated
    // points every 5th grid value
    TimingModel timing = timing_from_phy(128, spec.phy);
    const int n = 10, k = 5;
    Table aoi_t, pow_t;
    aoi_t.schema = "fig7_aoi.v1";
    aoi_t.columns = {"protocol", "access_prob", "load_per_ms", "avg_aoi",
                     "sim_aoi", "sim_aoi_ci"};
    pow_t.schema = "fig7_power.v1";
    pow_t.columns = {"protocol", "access_prob", "load_per_ms", "avg_power",
                     "sim_power", "sim_power_ci"};
    struct ProtoGrid {
        Protocol proto;
        int k;
        double max_prob;
    };
    for (const ProtoGrid& pg : {ProtoGrid{Protocol::SA, 1, 0.25},
                                ProtoGrid{Protocol::FSA, k, 1.0},
                                ProtoGrid{Protocol::RTA, k, 1.0}}) {
        std::vector<double> probs = linspace_grid(0.0, pg.max_prob, 50);
        auto rows = sweep(pg.proto, n, pg.k, timing, spec.tx_power, probs);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const SweepRow& r = rows[i];
            Cell sim_aoi(""), sim_aoi_ci(""), sim_pow(""), sim_pow_ci("");
            if ((i + 1) % 5 == 0) {
                SimConfig config;
                config.params = make_params(pg.proto, n, r.access_prob, pg.k, spec.tx_power);
                config.timing = timing;
                config.horizon_rounds = spec.rounds;
                config.warmup_rounds = spec.warmup;
                config.seed = spec.seed;
                try {
                    AoIStats st = simulate(config);
                    sim_aoi = Cell(st.mean_aoi);
                    sim_aoi_ci = Cell(st.aoi_ci_halfwidth);
                    sim_pow = Cell(st.mean_power);
                    sim_pow_ci = Cell(st.power_ci_halfwidth);
                } catch (const NoUpdateError&) {
                    // leave the sim cells empty; the analytic row stands
                }
            }
            aoi_t.rows.push_back({protocol_name(pg.proto), r.access_prob,
                                  r.load * 1000.0, r.avg_aoi, sim_aoi, sim_aoi_ci});
            pow_t.rows.push_back({protocol_name(pg.proto), r.access_prob,
                                  r.load * 1000.0, r.avg_power, sim_pow, sim_pow_ci});
        }
    }
    std::string aoi_path = preset_path(spec, "fig7_aoi");
    std::string pow_path = preset_path(spec, "fig7_power");
    write_table(aoi_path, spec.format, aoi_t);
    write_table(pow_path, spec.format, pow_t);
    out << "wrote " << aoi_path << "\n" << "wrote " << pow_path << "\n";
}

void preset_fig8(const ExperimentSpec& spec, std::ostream& out) {
    TimingModel timing = timing_from_phy(128, spec.phy);
    const int n = 10, k = 5;
    Table table;
    table.schema = "fig8.v1";
    table.columns = {"protocol", "power_budget", "best_prob", "min_aoi", "binding"};
    std::vector<double> budgets = closed_grid(0.02, 0.40, 39);
    budgets.push_back(0.45);
    budgets.push_back(0.5);
    budgets.push_back(0.6);
    for (Protocol proto : {Protocol::SA, Protocol::FSA, Protocol::RTA}) {
        int kk = proto == Protocol::SA ? 1 : k;
        for (const FrontierPoint& p : frontier(proto, n, kk, timing, spec.tx_power, budgets))
            table.rows.push_back({protocol_name(proto), p.power_budget, p.best_prob,
                                  p.min_aoi, p.binding});
    }
    std::string path = preset_path(spec, "fig8");
    write_table(path, spec.format, table);
    out << "wrote " << path << "\n";
}

void preset_fig9(const ExperimentSpec& spec, std::ostream& out) {
    TimingModel timing = timing_from_phy(128, spec.phy);
    const int k = 5;
    Table table;
    table.schema = "fig9.v1";
    table.columns = {"protocol", "n", "power_budget", "best_prob", "min_aoi", "binding"};
    for (double budget : {0.1, 0.03}) {
        for (Protocol proto : {Protocol::SA, Protocol::FSA, Protocol::RTA}) {
            int kk = proto == Protocol::SA ? 1 : k;
            for (int n = 5; n <= 30; ++n) {
                FrontierPoint p =
                    min_aoi_given_power(proto, n, kk, timing, spec.tx_power, budget);
                table.rows.push_back({protocol_name(proto), n, p.power_budget,
                                      p.best_prob, p.min_aoi, p.binding});
            }
        }
    }
    std::string path = preset_path(spec, "fig9");
    write_table(path, spec.format, table);
    out << "wrote " << path << "\n";
}

void preset_fig10(const ExperimentSpec& spec, std::ostream& out) {
    const int n = 10, k = 5;
    Table table;
    table.schema = "fig10.v1";
    table.columns = {"protocol", "payload_bytes", "power_budget", "best_prob",
                     "min_aoi", "binding"};
    std::vector<double> budgets = closed_grid(0.01, 0.30, 30);
    for (int payload : {16, 64, 128}) {
        TimingModel timing = timing_from_phy(payload, spec.phy);
        for (Protocol proto : {Protocol::FSA, Protocol::RTA}) {
            for (const FrontierPoint& p : frontier(proto, n, k, timing, spec.tx_power, budgets))
                table.rows.push_back({protocol_name(proto), payload, p.power_budget,
                                      p.best_prob, p.min_aoi, p.binding});
        }
    }
    std::string path = preset_path(spec, "fig10");
    write_table(path, spec.format, table);
    out << "wrote " << path << "\n";
}

int run_figures(const ExperimentSpec& spec, std::ostream& out) {
    if (spec.preset == "fig4a")
        preset_fig4(spec, out, false);
    else if (spec.preset == "fig4b")
        preset_fig4(spec, out, true);
    else if (spec.preset == "fig7")
        preset_fig7(spec, out);
    else if (spec.preset == "fig8")
        preset_fig8(spec, out);
    else if (spec.preset == "fig9")
        preset_fig9(spec, out);
    else if (spec.preset == "fig10")
        preset_fig10(spec, out);
    else if (spec.preset == "all")
        for (const char* p : {"fig4a", "fig4b", "fig7", "fig8", "fig9", "fig10"}) {
            ExperimentSpec sub = spec;
            sub.preset = p;
            run_figures(sub, out);
        }
    else
        throw ConfigError("unknown figures preset: " + spec.preset +
                          " (expected fig4a, fig4b, fig7, fig8, fig9, fig10 or all)");
    return kExitOk;
}

}  // namespace

TimingModel spec_timing(const ExperimentSpec& spec) {
    if (spec.t_pk_override) {
        TimingModel t{*spec.t_pk_override,
                      spec.t_r_override.value_or(*spec.t_pk_override)};
        t.validate();
        return t;
    }
    TimingModel t = timing_from_phy(spec.payload_bytes, spec.phy);
    if (spec.t_r_override) t.t_r = *spec.t_r_override;
    t.validate();
    return t;
}

int run(const ExperimentSpec& spec, std::ostream& out) {
    switch (spec.command) {
        case Command::report: return run_report(spec, out);
        case Command::simulate: return run_simulate(spec, out);
        case Command::sweep: return run_sweep(spec, out);
        case Command::frontier: return run_frontier(spec, out);
        case Command::validate: return run_validate(spec, out);
        case Command::figures: return run_figures(spec, out);
    }
    throw ConfigError("unknown command");
}

void apply_config_file(ExperimentSpec& spec, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("malformed config " + path + ": " + e.what());
    }
    if (j.contains("protocols")) {
        spec.protocols.clear();
        for (const auto& p : j.at("protocols"))
            spec.protocols.push_back(protocol_from_name(p.get<std::string>()));
    }
    if (j.contains("protocol")) {
        spec.protocols = {protocol_from_name(j.at("protocol").get<std::string>())};
    }
    if (j.contains("n")) {
        spec.n_list.clear();
        if (j.at("n").is_array())
            for (const auto& v : j.at("n")) spec.n_list.push_back(v.get<int>());
        else
            spec.n_list.push_back(j.at("n").get<int>());
    }
    if (j.contains("k")) spec.k = j.at("k").get<int>();
    if (j.contains("payload_bytes")) spec.payload_bytes = j.at("payload_bytes").get<int>();
    if (j.contains("access_prob")) spec.access_prob = j.at("access_prob").get<double>();
    if (j.contains("probs"))
        spec.prob_grid = j.at("probs").get<std::vector<double>>();
    if (j.contains("budgets"))
        spec.budget_grid = j.at("budgets").get<std::vector<double>>();
    if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("rounds")) spec.rounds = j.at("rounds").get<std::int64_t>();
    if (j.contains("warmup")) spec.warmup = j.at("warmup").get<std::int64_t>();
    if (j.contains("tpk")) spec.t_pk_override = j.at("tpk").get<double>();
    if (j.contains("tr")) spec.t_r_override = j.at("tr").get<double>();
    if (j.contains("power")) spec.tx_power = j.at("power").get<double>();
    if (j.contains("out_dir")) spec.out_dir = j.at("out_dir").get<std::string>();
    if (j.contains("out_file")) spec.out_file = j.at("out_file").get<std::string>();
    if (j.contains("preset")) spec.preset = j.at("preset").get<std::string>();
    if (j.contains("format")) {
        std::string f = j.at("format").get<std::string>();
        if (f == "csv") spec.format = OutputFormat::csv;
        else if (f == "json") spec.format = OutputFormat::json;
        else throw ConfigError("unknown format: " + f);
    }
    if (j.contains("phy")) {
        const auto& p = j.at("phy");
        if (p.contains("bitrate")) spec.phy.bitrate = p.at("bitrate").get<double>();
        if (p.contains("phy_header")) spec.phy.phy_header = p.at("phy_header").get<double>();
        if (p.contains("mac_overhead_bits"))
            spec.phy.mac_overhead_bits = p.at("mac_overhead_bits").get<double>();
        if (p.contains("signal_extension"))
            spec.phy.signal_extension = p.at("signal_extension").get<double>();
        if (p.contains("request_frame_bits"))
            spec.phy.request_frame_bits = p.at("request_frame_bits").get<double>();
        if (p.contains("symbol_alignment"))
            spec.phy.symbol_alignment = p.at("symbol_alignment").get<bool>();
        spec.phy.validate();
    }
}

}  // namespace aoi::cli
