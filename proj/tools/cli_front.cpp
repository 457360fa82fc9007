#include "cli_front.hpp"

#include <CLI11.hpp>
#include <iostream>

#include "switchsim/cli.hpp"

namespace switchsim {

namespace {

std::vector<int> parse_orders(const std::string& text) {
    std::vector<int> out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (hi < lo) throw CLI::ValidationError("orders", "range is empty");
        for (int k = lo; k <= hi; ++k) out.push_back(k);
        return out;
    }
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

GridAxis parse_grid_axis(const std::string& text) {
    std::stringstream ss(text);
    std::string name, start, stop, points;
    if (!std::getline(ss, name, ':') || !std::getline(ss, start, ':') ||
        !std::getline(ss, stop, ':') || !std::getline(ss, points))
        throw CLI::ValidationError("grid", "expected name:start:stop:points");
    GridAxis ax;
    ax.name = name;
    ax.start = std::stod(start);
    ax.stop = std::stod(stop);
    ax.points = std::stoi(points);
    if (ax.points < 2) throw CLI::ValidationError("grid", "need at least 2 points per axis");
    return ax;
}

std::vector<double> parse_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

void add_common(CLI::App* cmd, RunConfig& cfg, std::string& format) {
    cmd->add_option("--out", cfg.out, "Output path ('-' = stdout)");
    cmd->add_option("--format", format, "Artifact format: csv or json");
    cmd->add_option("--order-cap", cfg.order_cap, "Override the superswitch order cap");
    cmd->add_option("--max-branches", cfg.max_branches,
                    "Branch budget before a superswitch expansion is refused");
}

void add_family(CLI::App* cmd, RunConfig& cfg, std::string& pvec) {
    cmd->add_option("--family", cfg.family,
                    "Channel family: depolarizing2, bitphase, Q, Qtilde, pauli, "
                    "depolarizing4, delta, W");
    cmd->add_option("--pvec", pvec, "Probability vector for --family pauli (comma separated)");
    cmd->add_option("--ensemble", cfg.ensemble,
                    "Ensemble tag: orthogonal, omega1..omega3, or bloch:x,y,z;x,y,z[;q1,q2]");
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Pauli-channel state discrimination with quantum switches"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format;
    std::string pvec_text;
    std::string orders_text;
    std::string copies_text;
    std::vector<std::string> grid_text;
    std::vector<std::string> protocols;
    double p_value = 0.0, q_value = 0.0;
    bool has_p = false, has_q = false;

    CLI::App* curve = app.add_subcommand("curve", "Guessing probabilities over a parameter grid");
    add_family(curve, cfg, pvec_text);
    curve->add_option("--grid", grid_text, "Axis as name:start:stop:points (repeat per parameter)")
        ->required();
    curve->add_option("--orders", orders_text, "Superswitch orders, e.g. 0,1 or 0..2");
    curve->add_option("--protocols", protocols,
                      "Extra columns: channel, switch, ss1..ss4, blind_povm, flipped_povm, "
                      "multicopyN");
    add_common(curve, cfg, format);

    CLI::App* region = app.add_subcommand("region", "Monte Carlo volume over the Pauli tetrahedron");
    region->add_option("--predicate", cfg.predicate, "Named dominance predicate")->required();
    region->add_option("--samples", cfg.samples, "Tetrahedron samples (>= 10^4)");
    region->add_option("--seed", cfg.seed, "RNG seed");
    region->add_option("--threads", cfg.threads, "Worker threads (result is thread-count invariant)");
    add_common(region, cfg, format);

    CLI::App* sequence = app.add_subcommand("sequence", "Guessing per superswitch order");
    add_family(sequence, cfg, pvec_text);
    sequence->add_option("--p", p_value, "First family parameter");
    sequence->add_option("--q", q_value, "Second family parameter");
    sequence->add_option("--orders", orders_text, "Orders, e.g. 0..4");
    add_common(sequence, cfg, format);

    CLI::App* multicopy = app.add_subcommand("multicopy", "Switch vs n-copy discrimination curves");
    multicopy->add_option("--grid", grid_text, "Axis as p:start:stop:points")->required();
    multicopy->add_option("--copies", copies_text, "Copy counts, e.g. 1..10");
    multicopy->add_option("--ensemble", cfg.ensemble, "Ensemble tag");
    add_common(multicopy, cfg, format);

    CLI::App* verify = app.add_subcommand("verify", "Engine vs closed-form cross-checks");
    verify->add_option("--seed", cfg.seed, "Seed for the random-channel checks");
    verify->add_option("--out", cfg.out, "Output path ('-' = stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (curve->parsed()) cfg.command = RunConfig::Command::curve;
        if (region->parsed()) cfg.command = RunConfig::Command::region;
        if (sequence->parsed()) {
            cfg.command = RunConfig::Command::sequence;
            has_p = sequence->count("--p") > 0;
            has_q = sequence->count("--q") > 0;
        }
        if (multicopy->parsed()) cfg.command = RunConfig::Command::multicopy;
        if (verify->parsed()) cfg.command = RunConfig::Command::verify;

        if (!format.empty()) {
            if (format == "csv")
                cfg.format = RunConfig::Format::csv;
            else if (format == "json")
                cfg.format = RunConfig::Format::json;
            else
                throw CLI::ValidationError("format", "must be csv or json");
        } else {
            // Tables default to CSV, single-record artifacts to JSON.
            cfg.format = (cfg.command == RunConfig::Command::region ||
                          cfg.command == RunConfig::Command::sequence)
                             ? RunConfig::Format::json
                             : RunConfig::Format::csv;
        }
        if (!pvec_text.empty()) cfg.pvec = parse_doubles(pvec_text);
        if (!orders_text.empty()) cfg.orders = parse_orders(orders_text);
        if (!copies_text.empty()) cfg.orders = parse_orders(copies_text);
        for (const auto& g : grid_text) cfg.grid.push_back(parse_grid_axis(g));
        cfg.protocols = protocols;
        if (cfg.command == RunConfig::Command::sequence) {
            if (has_p) cfg.params.push_back(p_value);
            if (has_q) cfg.params.push_back(q_value);
        }
        if ((cfg.command == RunConfig::Command::curve ||
             cfg.command == RunConfig::Command::sequence) &&
            cfg.family.empty())
            throw CLI::RequiredError("--family");
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        return run(cfg);
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace switchsim
