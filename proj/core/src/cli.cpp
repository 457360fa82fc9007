#include "switchsim/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "switchsim/dim4.hpp"
#include "switchsim/rng.hpp"

namespace switchsim {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string quoted(const std::string& s) { return "\"" + json_escape(s) + "\""; }

void write_artifact(const std::string& text, const std::string& out) {
    if (out == "-" || out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open output file '" + out + "'");
    f << text;
}

std::string table_csv(const SweepTable& t) {
    std::ostringstream os;
    bool first = true;
    for (const auto& n : t.parameter_names) {
        os << (first ? "" : ",") << n;
        first = false;
    }
    for (const auto& n : t.value_names) os << "," << n;
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << format_number(row[i]);
        os << "\n";
    }
    return os.str();
}

std::string table_json(const SweepTable& t) {
    std::ostringstream os;
    os << "{\n  \"parameters\": [";
    for (std::size_t i = 0; i < t.parameter_names.size(); ++i)
        os << (i ? ", " : "") << quoted(t.parameter_names[i]);
    os << "],\n  \"values\": [";
    for (std::size_t i = 0; i < t.value_names.size(); ++i)
        os << (i ? ", " : "") << quoted(t.value_names[i]);
    os << "],\n  \"rows\": [\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << "    [";
        for (std::size_t i = 0; i < t.rows[r].size(); ++i)
            os << (i ? ", " : "") << format_number(t.rows[r][i]);
        os << "]" << (r + 1 < t.rows.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

std::string region_json(const RegionEstimate& e) {
    std::ostringstream os;
    os << "{\n"
       << "  \"predicate\": " << quoted(e.predicate) << ",\n"
       << "  \"samples\": " << e.samples << ",\n"
       << "  \"seed\": " << e.seed << ",\n"
       << "  \"rng\": " << quoted(e.rng) << ",\n"
       << "  \"hits\": " << e.hits << ",\n"
       << "  \"volume\": " << format_number(e.volume) << ",\n"
       << "  \"ratio_to_tetrahedron\": " << format_number(e.ratio_to_tetrahedron) << ",\n"
       << "  \"standard_error\": " << format_number(e.standard_error) << "\n"
       << "}\n";
    return os.str();
}

std::string region_csv(const RegionEstimate& e) {
    std::ostringstream os;
    os << "predicate,samples,seed,rng,hits,volume,ratio_to_tetrahedron,standard_error\n"
       << e.predicate << "," << e.samples << "," << e.seed << "," << e.rng << "," << e.hits << ","
       << format_number(e.volume) << "," << format_number(e.ratio_to_tetrahedron) << ","
       << format_number(e.standard_error) << "\n";
    return os.str();
}

struct SequenceResult {
    std::string family;
    std::vector<std::string> param_names;
    std::vector<double> param_values;
    std::string ensemble;
    std::vector<int> orders;
    std::vector<double> guessing;
};

std::string sequence_json(const SequenceResult& s) {
    std::ostringstream os;
    os << "{\n  \"family\": " << quoted(s.family) << ",\n  \"params\": {";
    for (std::size_t i = 0; i < s.param_names.size(); ++i)
        os << (i ? ", " : "") << quoted(s.param_names[i]) << ": "
           << format_number(s.param_values[i]);
    os << "},\n  \"ensemble\": " << quoted(s.ensemble) << ",\n  \"orders\": [";
    for (std::size_t i = 0; i < s.orders.size(); ++i) os << (i ? ", " : "") << s.orders[i];
    os << "],\n  \"guessing\": [";
    for (std::size_t i = 0; i < s.guessing.size(); ++i)
        os << (i ? ", " : "") << format_number(s.guessing[i]);
    os << "]\n}\n";
    return os.str();
}

std::string sequence_csv(const SequenceResult& s) {
    std::ostringstream os;
    os << "order,guessing\n";
    for (std::size_t i = 0; i < s.orders.size(); ++i)
        os << s.orders[i] << "," << format_number(s.guessing[i]) << "\n";
    return os.str();
}

ChannelFamily resolve_family(const RunConfig& c) {
    if (c.family == "pauli") return pauli_family(c.pvec);
    return family_by_name(c.family);
}

std::vector<double> parse_numbers(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

std::vector<ProtocolSpec> curve_protocols(const RunConfig& c) {
    std::vector<ProtocolSpec> specs;
    specs.push_back({ProtocolSpec::Kind::channel, 0});
    for (int o : c.orders) {
        if (o < 0 || o > 4)
            throw std::invalid_argument("curve: superswitch orders must lie in 0..4");
        specs.push_back({ProtocolSpec::Kind::superswitch, o});
    }
    for (const auto& p : c.protocols) specs.push_back(ProtocolSpec::parse(p));
    if (c.orders.empty() && c.protocols.empty())
        specs.push_back({ProtocolSpec::Kind::superswitch, 0});
    std::sort(specs.begin(), specs.end(), [](const ProtocolSpec& a, const ProtocolSpec& b) {
        return std::pair(static_cast<int>(a.kind), a.arg) <
               std::pair(static_cast<int>(b.kind), b.arg);
    });
    specs.erase(std::unique(specs.begin(), specs.end(),
                            [](const ProtocolSpec& a, const ProtocolSpec& b) {
                                return a.kind == b.kind && a.arg == b.arg;
                            }),
                specs.end());
    return specs;
}

int run_curve(const RunConfig& c) {
    const ChannelFamily fam = resolve_family(c);
    const Ensemble ens = resolve_ensemble(c.ensemble, fam.dim);
    const SweepOptions opt{c.order_cap, c.max_branches};
    const SweepTable t = sweep(fam, curve_protocols(c), ens, c.grid, opt);
    write_artifact(c.format == RunConfig::Format::json ? table_json(t) : table_csv(t), c.out);
    return 0;
}

int run_region(const RunConfig& c) {
    const RegionEstimate est =
        region_volume(region_predicate(c.predicate), c.samples, c.seed, c.threads);
    write_artifact(c.format == RunConfig::Format::json ? region_json(est) : region_csv(est),
                   c.out);
    return 0;
}

int run_sequence(const RunConfig& c) {
    const ChannelFamily fam = resolve_family(c);
    if (c.params.size() != fam.params.size())
        throw std::invalid_argument("sequence: need one fixed value per family parameter");
    const PauliChannel E = fam.make(c.params);
    const Ensemble ens = resolve_ensemble(c.ensemble, fam.dim);
    std::vector<int> orders = c.orders;
    if (orders.empty()) orders = {0, 1, 2};
    const int max_order = *std::max_element(orders.begin(), orders.end());
    const SequenceOptions opt{c.order_cap, c.max_branches};
    const std::vector<double> all = superswitch_sequence(E, max_order, ens, opt);

    SequenceResult res;
    res.family = fam.name;
    res.param_names = fam.params;
    res.param_values = c.params;
    res.ensemble = c.ensemble.empty() ? (fam.dim == 2 ? "orthogonal" : "omega1") : c.ensemble;
    res.orders = orders;
    for (int o : orders) res.guessing.push_back(all[static_cast<std::size_t>(o)]);
    write_artifact(c.format == RunConfig::Format::json ? sequence_json(res) : sequence_csv(res),
                   c.out);
    return 0;
}

int run_multicopy(const RunConfig& c) {
    RunConfig cc = c;
    if (cc.family.empty()) cc.family = "depolarizing2";
    if (cc.family != "depolarizing2")
        throw std::invalid_argument("multicopy: only the depolarizing2 family is supported");
    const ChannelFamily fam = resolve_family(cc);
    const Ensemble ens = resolve_ensemble(cc.ensemble, fam.dim);
    std::vector<int> copies = cc.orders;
    if (copies.empty())
        for (int n = 1; n <= 10; ++n) copies.push_back(n);
    std::vector<ProtocolSpec> specs{{ProtocolSpec::Kind::superswitch, 0}};
    for (int n : copies) specs.push_back({ProtocolSpec::Kind::multicopy, n});
    const SweepOptions opt{cc.order_cap, cc.max_branches};
    const SweepTable t = sweep(fam, specs, ens, cc.grid, opt);
    write_artifact(cc.format == RunConfig::Format::json ? table_json(t) : table_csv(t), cc.out);
    return 0;
}

// --- the verify suite -------------------------------------------------------

double switch_depolarizing_closed_form(double p) {
    const double q_minus = 3.0 * p * p / 8.0;
    const double pt = 4.0 * (4.0 - 3.0 * p) * p / (8.0 - 3.0 * p * p);
    return (1.0 - q_minus) * ((1.0 - pt) + pt / 2.0) + q_minus * (1.0 / 3.0 + 1.0 / 3.0);
}

double superswitch_poly(int order, double p) {
    switch (order) {
        case 0:
            return 1.0 - p + 5.0 * p * p / 8.0;
        case 1:
            return 1.0 - 2.0 * p + 29.0 * p * p / 8.0 - 23.0 * p * p * p / 8.0 +
                   55.0 * std::pow(p, 4) / 64.0 +
                   p * p / 64.0 * std::abs(3.0 * p * (5.0 * p - 8.0) + 8.0);
        case 2: {
            const double a =
                std::abs(9.0 * p *
                             (p * (p * (3.0 * p * (p * (71.0 * p - 360.0) + 760.0) - 2560.0) +
                                   1600.0) -
                              512.0) +
                         512.0);
            const double b =
                std::abs(3.0 * p * (3.0 * p * (p * (19.0 * p - 64.0) + 80.0) - 128.0) + 64.0);
            const double cc = std::abs(6.0 * p * (5.0 * p - 8.0) + 16.0);
            double v = 1.0 - 4.0 * p + 67.0 * p * p / 4.0 - 159.0 * std::pow(p, 3) / 4.0 +
                       1897.0 * std::pow(p, 4) / 32.0 - 457.0 * std::pow(p, 5) / 8.0 +
                       4457.0 * std::pow(p, 6) / 128.0 - 1573.0 * std::pow(p, 7) / 128.0 +
                       1975.0 * std::pow(p, 8) / 1024.0;
            v += p * p * a / 2048.0;
            v += p * p * b / 128.0 - std::pow(p, 3) * b / 128.0 + std::pow(p, 4) * b / 512.0;
            v += 3.0 * std::pow(p, 6) * cc / 4096.0;
            return v;
        }
        default:
            throw std::invalid_argument("superswitch_poly: polynomial known for orders 0..2");
    }
}

PauliChannel random_channel_d2(std::uint64_t seed, std::uint64_t stream) {
    std::array<double, 4> v;
    double sum = 0.0;
    for (int k = 0; k < 4; ++k) {
        const double u = counter_u01(seed, stream, static_cast<std::uint64_t>(k));
        v[static_cast<std::size_t>(k)] = -std::log(1.0 - u);
        sum += v[static_cast<std::size_t>(k)];
    }
    for (auto& x : v) x /= sum;
    return PauliChannel(2, v);
}

}  // namespace

std::vector<VerifyCheck> run_verify_checks(std::uint64_t seed) {
    std::vector<VerifyCheck> checks;

    {
        const Ensemble ens = orthogonal_pair();
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const double p = 4.0 / 3.0 * i / 199.0;
            const double engine =
                protocol_guessing(switch_pair(make_depolarizing_d2(p), make_depolarizing_d2(p)),
                                  ens)
                    .value;
            worst = std::max(worst, std::abs(engine - switch_depolarizing_closed_form(p)));
        }
        checks.push_back({"depolarizing_switch_closed_form", worst <= 1e-10, worst});
    }

    {
        const Ensemble ens = orthogonal_pair();
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double p = 4.0 / 3.0 * i / 49.0;
            const PauliChannel E = make_depolarizing_d2(p);
            BranchDistribution dist = switch_pair(E, E);
            for (int order = 0; order <= 2; ++order) {
                if (order > 0) dist = superswitch_step(dist);
                const double engine = protocol_guessing(dist, ens).value;
                worst = std::max(worst, std::abs(engine - superswitch_poly(order, p)));
            }
        }
        checks.push_back({"depolarizing_superswitch_polynomials", worst <= 1e-9, worst});
    }

    {
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
            const PauliChannel e1 = random_channel_d2(seed, 2 * static_cast<std::uint64_t>(t));
            const PauliChannel e2 = random_channel_d2(seed, 2 * static_cast<std::uint64_t>(t) + 1);
            double r[4][4];
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) r[i][j] = e1[i] * e2[j] + e2[i] * e1[j];
            const double r_minus = r[1][2] + r[2][3] + r[3][1];
            const double diag = e1[0] * e2[0] + e1[1] * e2[1] + e1[2] * e2[2] + e1[3] * e2[3];
            const std::array<double, 4> acom_expect{diag, r[0][1], r[0][2], r[0][3]};
            const std::array<double, 4> com_expect{0.0, r[2][3], r[3][1], r[1][2]};

            const UpdateResult ua = update_acom(e1, e2);
            const UpdateResult uc = update_com(e1, e2);
            worst = std::max(worst, std::abs(ua.weight - (1.0 - r_minus)));
            worst = std::max(worst, std::abs(uc.weight - r_minus));
            for (int k = 0; k < 4; ++k) {
                worst = std::max(worst, std::abs((*ua.channel)[k] -
                                                 acom_expect[static_cast<std::size_t>(k)] /
                                                     (1.0 - r_minus)));
                if (r_minus > 1e-13)
                    worst = std::max(worst, std::abs((*uc.channel)[k] -
                                                     com_expect[static_cast<std::size_t>(k)] /
                                                         r_minus));
            }
        }
        checks.push_back({"pair_update_closed_form", worst <= 1e-12, worst});
    }

    return checks;
}

Ensemble resolve_ensemble(const std::string& tag, int dim) {
    if (tag.empty()) return dim == 2 ? orthogonal_pair() : make_ensemble(Omega::omega1);
    if (tag == "orthogonal") {
        if (dim != 2) throw std::invalid_argument("ensemble 'orthogonal' is dim-2");
        return orthogonal_pair();
    }
    if (tag.rfind("omega", 0) == 0) {
        if (dim != 4) throw std::invalid_argument("ensemble '" + tag + "' is dim-4");
        return make_ensemble(tag);
    }
    if (tag.rfind("bloch:", 0) == 0) {
        if (dim != 2) throw std::invalid_argument("bloch ensembles are dim-2");
        std::stringstream ss(tag.substr(6));
        std::vector<std::vector<double>> parts;
        std::string piece;
        while (std::getline(ss, piece, ';')) parts.push_back(parse_numbers(piece));
        if (parts.size() < 2 || parts[0].size() != 3 || parts[1].size() != 3)
            throw std::invalid_argument("ensemble: expected bloch:x,y,z;x,y,z[;q1,q2]");
        std::vector<double> priors{0.5, 0.5};
        if (parts.size() == 3) {
            if (parts[2].size() != 2) throw std::invalid_argument("ensemble: need two priors");
            priors = parts[2];
        }
        return Ensemble(priors, {state_of(BlochVector(parts[0][0], parts[0][1], parts[0][2])),
                                 state_of(BlochVector(parts[1][0], parts[1][1], parts[1][2]))});
    }
    throw std::invalid_argument("unknown ensemble tag '" + tag + "'");
}

int run(const RunConfig& config) {
    switch (config.command) {
        case RunConfig::Command::curve:
            return run_curve(config);
        case RunConfig::Command::region:
            return run_region(config);
        case RunConfig::Command::sequence:
            return run_sequence(config);
        case RunConfig::Command::multicopy:
            return run_multicopy(config);
        case RunConfig::Command::verify: {
            const auto checks = run_verify_checks(config.seed);
            std::ostringstream os;
            bool all = true;
            for (const auto& c : checks) {
                os << (c.passed ? "PASS " : "FAIL ") << c.name
                   << " (max deviation " << format_number(c.worst) << ")\n";
                all = all && c.passed;
            }
            write_artifact(os.str(), config.out);
            return all ? 0 : 1;
        }
    }
    throw std::invalid_argument("run: unknown command");
}

}  // namespace switchsim
