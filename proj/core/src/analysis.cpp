#include "switchsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "switchsim/dim4.hpp"
#include "switchsim/rng.hpp"

namespace switchsim {

namespace {

constexpr double kDominanceMargin = 1e-12;

bool beats(double a, double b) { return a > b + kDominanceMargin; }

}  // namespace

ChannelFamily family_by_name(const std::string& name) {
    if (name == "depolarizing2")
        return {name, 2, {"p"}, [](std::span<const double> v) { return make_depolarizing_d2(v[0]); }};
    if (name == "bitphase")
        return {name, 2, {"p"}, [](std::span<const double> v) { return make_bit_phase_flip(v[0]); }};
    if (name == "Q")
        return {name, 2, {"p", "q"},
                [](std::span<const double> v) { return make_Q_channel(v[0], v[1]); }};
    if (name == "Qtilde")
        return {name, 2, {"p"}, [](std::span<const double> v) { return make_Q_tilde(v[0]); }};
    if (name == "depolarizing4")
        return {name, 4, {"s"}, [](std::span<const double> v) { return make_depolarizing_d4(v[0]); }};
    if (name == "delta")
        return {name, 4, {"p", "q"},
                [](std::span<const double> v) { return make_delta(v[0], v[1]); }};
    if (name == "W")
        return {name, 4, {"p", "q"}, [](std::span<const double> v) { return make_W(v[0], v[1]); }};
    throw std::invalid_argument("family_by_name: unknown family '" + name + "'");
}

ChannelFamily pauli_family(const std::vector<double>& probs) {
    const int dim = probs.size() == 4 ? 2 : probs.size() == 16 ? 4 : 0;
    if (dim == 0) throw std::invalid_argument("pauli_family: need 4 or 16 probabilities");
    const PauliChannel ch(dim, probs);
    return {"pauli", dim, {}, [ch](std::span<const double>) { return ch; }};
}

std::string ProtocolSpec::label() const {
    switch (kind) {
        case Kind::channel: return "channel";
        case Kind::superswitch: return arg == 0 ? "switch" : "ss" + std::to_string(arg);
        case Kind::blind_povm: return "blind_povm";
        case Kind::flipped_povm: return "flipped_povm";
        case Kind::multicopy: return "multicopy" + std::to_string(arg);
    }
    return "?";
}

ProtocolSpec ProtocolSpec::parse(const std::string& text) {
    if (text == "channel") return {Kind::channel, 0};
    if (text == "switch") return {Kind::superswitch, 0};
    if (text == "blind_povm") return {Kind::blind_povm, 0};
    if (text == "flipped_povm") return {Kind::flipped_povm, 0};
    if (text.size() > 2 && text.compare(0, 2, "ss") == 0) {
        const int k = std::stoi(text.substr(2));
        if (k < 1 || k > 4) throw std::invalid_argument("ProtocolSpec: ss order must be 1..4");
        return {Kind::superswitch, k};
    }
    if (text.size() > 9 && text.compare(0, 9, "multicopy") == 0) {
        std::string rest = text.substr(9);
        if (!rest.empty() && rest.front() == '(') rest = rest.substr(1, rest.size() - 2);
        const int n = std::stoi(rest);
        if (n < 1) throw std::invalid_argument("ProtocolSpec: multicopy count must be >= 1");
        return {Kind::multicopy, n};
    }
    throw std::invalid_argument("ProtocolSpec: unknown protocol '" + text + "'");
}

int default_order_cap(int dim) { return dim == 2 ? 8 : 2; }

SweepTable sweep(const ChannelFamily& family, const std::vector<ProtocolSpec>& protocols,
                 const Ensemble& ensemble, const std::vector<GridAxis>& grid,
                 const SweepOptions& options) {
    if (grid.empty()) throw std::invalid_argument("sweep: empty grid");
    if (protocols.empty()) throw std::invalid_argument("sweep: no protocols requested");
    if (grid.size() != family.params.size())
        throw std::invalid_argument("sweep: grid must have one axis per family parameter");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i].points < 2) throw std::invalid_argument("sweep: each axis needs >= 2 points");
        if (grid[i].name != family.params[i])
            throw std::invalid_argument("sweep: axis '" + grid[i].name + "' does not match parameter '" +
                                        family.params[i] + "'");
    }
    if (ensemble.dim() != family.dim)
        throw std::invalid_argument("sweep: ensemble dimension does not match the family");
    const int cap = options.order_cap >= 0 ? options.order_cap : default_order_cap(family.dim);

    for (const auto& pr : protocols) {
        if (pr.kind == ProtocolSpec::Kind::superswitch && pr.arg > cap)
            throw std::invalid_argument("sweep: superswitch order exceeds the order cap");
        if ((pr.kind == ProtocolSpec::Kind::blind_povm ||
             pr.kind == ProtocolSpec::Kind::flipped_povm) &&
            family.dim != 2)
            throw std::invalid_argument("sweep: POVM protocols are dim-2 only");
        if (pr.kind == ProtocolSpec::Kind::multicopy && family.name != "depolarizing2")
            throw std::invalid_argument("sweep: multicopy applies to the depolarizing2 family only");
    }

    // Fixed measurements for the POVM columns come from the clean ensemble.
    const bool wants_povm = std::any_of(protocols.begin(), protocols.end(), [](const auto& p) {
        return p.kind == ProtocolSpec::Kind::blind_povm ||
               p.kind == ProtocolSpec::Kind::flipped_povm;
    });
    std::vector<Povm> povms;
    if (wants_povm) {
        povms.push_back(helstrom_povm(ensemble));
        povms.push_back(bloch_flipped(povms[0]));
    }

    SweepTable table;
    for (const auto& ax : grid) table.parameter_names.push_back(ax.name);
    for (const auto& pr : protocols) table.value_names.push_back(pr.label());

    long long total = 1;
    for (const auto& ax : grid) total *= ax.points;
    table.rows.reserve(static_cast<std::size_t>(total));

    std::vector<int> idx(grid.size(), 0);
    std::vector<double> params(grid.size(), 0.0);
    for (long long row = 0; row < total; ++row) {
        long long rem = row;
        for (std::size_t a = grid.size(); a-- > 0;) {
            idx[a] = static_cast<int>(rem % grid[a].points);
            rem /= grid[a].points;
        }
        for (std::size_t a = 0; a < grid.size(); ++a) params[a] = grid[a].value(idx[a]);

        const PauliChannel E = family.make(params);
        std::vector<double> out(params.begin(), params.end());
        for (const auto& pr : protocols) {
            double v = 0.0;
            switch (pr.kind) {
                case ProtocolSpec::Kind::channel:
                    v = helstrom_two_after_channel(ensemble, E);
                    break;
                case ProtocolSpec::Kind::superswitch:
                    v = protocol_guessing(superswitch(E, pr.arg, options.max_branches), ensemble)
                            .value;
                    break;
                case ProtocolSpec::Kind::blind_povm: {
                    const Ensemble pushed(
                        {ensemble.priors()[0], ensemble.priors()[1]},
                        {apply_channel(E, ensemble.states()[0]), apply_channel(E, ensemble.states()[1])});
                    v = guessing_with_povm(pushed, povms[0]).value;
                    break;
                }
                case ProtocolSpec::Kind::flipped_povm: {
                    const Ensemble pushed(
                        {ensemble.priors()[0], ensemble.priors()[1]},
                        {apply_channel(E, ensemble.states()[0]), apply_channel(E, ensemble.states()[1])});
                    v = guessing_with_povm(pushed, povms[1]).value;
                    break;
                }
                case ProtocolSpec::Kind::multicopy:
                    v = multicopy_orthogonal_depolarization(params[0], pr.arg);
                    break;
            }
            out.push_back(v);
        }
        table.rows.push_back(std::move(out));
    }
    return table;
}

RegionPredicate region_predicate(const std::string& name) {
    if (name == "switch_gt_channel")
        return {name, 0, [](const ProtocolValues& v) { return beats(v.sw, v.channel); }};
    if (name == "ss1_gt_channel_and_switch")
        return {name, 1, [](const ProtocolValues& v) {
                    return beats(v.ss1, v.channel) && beats(v.ss1, v.sw);
                }};
    if (name == "ss2_gt_all")
        return {name, 2, [](const ProtocolValues& v) {
                    return beats(v.ss2, v.channel) && beats(v.ss2, v.sw) && beats(v.ss2, v.ss1);
                }};
    if (name == "switch_gt_all")
        return {name, 2, [](const ProtocolValues& v) {
                    return beats(v.sw, v.channel) && beats(v.sw, v.ss1) && beats(v.sw, v.ss2);
                }};
    if (name == "ss1_gt_all")
        return {name, 2, [](const ProtocolValues& v) {
                    return beats(v.ss1, v.channel) && beats(v.ss1, v.sw) && beats(v.ss1, v.ss2);
                }};
    throw std::invalid_argument("region_predicate: unknown predicate '" + name + "'");
}

std::vector<std::string> region_predicate_names() {
    return {"switch_gt_channel", "ss1_gt_channel_and_switch", "ss2_gt_all", "switch_gt_all",
            "ss1_gt_all"};
}

namespace {

// Orthogonal-pair guessing after one channel: 1/2 + |p0 - p1 - p2 + p3| / 2.
double z_pair_guessing(const PauliChannel& ch) {
    return 0.5 + 0.5 * std::abs(ch[0] - ch[1] - ch[2] + ch[3]);
}

double z_pair_protocol(const BranchDistribution& dist) {
    double s = 0.0;
    for (const auto& b : dist.branches()) s += b.weight * z_pair_guessing(b.channel);
    return s;
}

ProtocolValues evaluate_point(double p1, double p2, double p3, int max_order) {
    const std::array<double, 4> probs{1.0 - p1 - p2 - p3, p1, p2, p3};
    const PauliChannel E(2, probs);
    ProtocolValues v;
    v.channel = z_pair_guessing(E);
    if (max_order < 0) return v;
    BranchDistribution dist = switch_pair(E, E);
    v.sw = z_pair_protocol(dist);
    if (max_order >= 1) {
        dist = superswitch_step(dist);
        v.ss1 = z_pair_protocol(dist);
    }
    if (max_order >= 2) {
        dist = superswitch_step(dist);
        v.ss2 = z_pair_protocol(dist);
    }
    return v;
}

long long count_hits(const RegionPredicate& pred, long long first, long long last,
                     std::uint64_t seed) {
    long long hits = 0;
    for (long long i = first; i < last; ++i) {
        double p1 = 0.0, p2 = 0.0, p3 = 0.0;
        for (std::uint64_t attempt = 0;; ++attempt) {
            p1 = counter_u01(seed, static_cast<std::uint64_t>(i), 3 * attempt);
            p2 = counter_u01(seed, static_cast<std::uint64_t>(i), 3 * attempt + 1);
            p3 = counter_u01(seed, static_cast<std::uint64_t>(i), 3 * attempt + 2);
            if (p1 + p2 + p3 <= 1.0) break;
        }
        if (pred.accept(evaluate_point(p1, p2, p3, pred.max_order))) ++hits;
    }
    return hits;
}

}  // namespace

RegionEstimate region_volume(const RegionPredicate& predicate, long long samples,
                             std::uint64_t seed, int threads) {
    if (samples < 10'000)
        throw std::domain_error("region_volume: need at least 10^4 samples");
    if (threads < 1) threads = 1;

    long long hits = 0;
    if (threads == 1) {
        hits = count_hits(predicate, 0, samples, seed);
    } else {
        // Contiguous index chunks; integer counts are reduced in chunk order,
        // so the total is independent of the worker count.
        std::vector<long long> partial(static_cast<std::size_t>(threads), 0);
        std::vector<std::thread> pool;
        const long long chunk = (samples + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const long long first = t * chunk;
            const long long last = std::min<long long>(samples, first + chunk);
            if (first >= last) break;
            pool.emplace_back([&, t, first, last] {
                partial[static_cast<std::size_t>(t)] = count_hits(predicate, first, last, seed);
            });
        }
        for (auto& th : pool) th.join();
        for (long long c : partial) hits += c;
    }

    RegionEstimate est;
    est.predicate = predicate.name;
    est.samples = samples;
    est.seed = seed;
    est.rng = kRngAlgorithm;
    est.hits = hits;
    const double phat = static_cast<double>(hits) / static_cast<double>(samples);
    est.ratio_to_tetrahedron = phat;
    est.volume = phat / 6.0;
    est.standard_error =
        std::sqrt(phat * (1.0 - phat) / static_cast<double>(samples)) / 6.0;
    return est;
}

std::vector<double> superswitch_sequence(const PauliChannel& E, int max_order,
                                         const Ensemble& ensemble,
                                         const SequenceOptions& options) {
    const int cap = options.order_cap >= 0 ? options.order_cap : default_order_cap(E.dim());
    if (max_order < 0) throw std::invalid_argument("superswitch_sequence: max_order must be >= 0");
    if (max_order > cap)
        throw std::domain_error("superswitch_sequence: max_order exceeds the order cap");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(max_order) + 1);
    BranchDistribution dist = switch_pair(E, E);
    out.push_back(protocol_guessing(dist, ensemble).value);
    for (int k = 1; k <= max_order; ++k) {
        dist = superswitch_step(dist, options.max_branches);
        out.push_back(protocol_guessing(dist, ensemble).value);
    }
    return out;
}

double limiting_guessing(const std::array<double, 3>& triple, const Ensemble& ensemble) {
    const auto step = fixed_point_recurrence(triple[0], triple[1], triple[2], 1);
    double residual = 0.0;
    for (int k = 0; k < 3; ++k)
        residual = std::max(residual, std::abs(step[1][static_cast<std::size_t>(k)] -
                                               step[0][static_cast<std::size_t>(k)]));
    if (residual >= 1e-9)
        throw std::domain_error("limiting_guessing: triple is not a fixed point");
    if (ensemble.dim() != 2)
        throw std::invalid_argument("limiting_guessing: dim-2 ensembles only");
    const double g_star = helstrom_two_after_channel(ensemble, make_depolarizing_d2(p_star()));
    const double g_43 = helstrom_two_after_channel(ensemble, make_depolarizing_d2(4.0 / 3.0));
    const double g_id = helstrom_two(ensemble).value;
    return triple[0] * g_star + triple[1] * g_43 + triple[2] * g_id;
}

}  // namespace switchsim
